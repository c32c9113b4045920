#include "eom/weight.hpp"

#include <algorithm>
#include <charconv>

#include "eom/errors.hpp"

namespace eom {

WeightFunction::WeightFunction(std::vector<Rational> values,
                               std::optional<std::string> tag)
    : values_(std::move(values)), tag_(std::move(tag)) {
  if (values_.empty()) throw ArgumentError("weight function needs a(0)");
  bool any_positive = false;
  for (const auto& v : values_) {
    if (v < 0) throw ArgumentError("weight values must be nonnegative");
    any_positive = any_positive || v > 0;
  }
  if (!any_positive) throw ArgumentError("weight function is identically zero");
}

const Rational& WeightFunction::operator()(unsigned x) const {
  if (x >= values_.size()) {
    throw ArgumentError("weight function undefined at " + std::to_string(x) +
                        " (tabulated up to " + std::to_string(x_max()) + ")");
  }
  return values_[x];
}

Rational WeightFunction::product(const comb::Composition& x) const {
  Rational out = 1;
  for (unsigned v : x.counts()) {
    out *= (*this)(v);
    if (out == 0) break;
  }
  return out;
}

std::string WeightKind::name() const {
  switch (kind) {
    case BuiltinKind::MaxwellBoltzmann: return "mb";
    case BuiltinKind::BoseEinstein: return "be";
    case BuiltinKind::FermiDirac: return "fd";
    case BuiltinKind::PseudoContagious: return "pc:" + std::to_string(s);
  }
  return "?";
}

WeightKind parse_weight_kind(std::string_view name) {
  if (name == "mb") return {BuiltinKind::MaxwellBoltzmann};
  if (name == "be") return {BuiltinKind::BoseEinstein};
  if (name == "fd") return {BuiltinKind::FermiDirac};
  if (name.starts_with("pc:")) {
    auto digits = name.substr(3);
    unsigned s = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
    if (ec == std::errc() && end == digits.data() + digits.size() && s >= 1) {
      return {BuiltinKind::PseudoContagious, s};
    }
    throw ArgumentError("pseudo-contagious parameter must be an integer >= 1, got \"" +
                        std::string(digits) + "\"");
  }
  throw ArgumentError("unknown weight kind \"" + std::string(name) +
                      "\" (expected mb, be, fd or pc:s)");
}

WeightFunction builtin_weight(WeightKind kind, unsigned x_max) {
  std::vector<Rational> values(x_max + 1);
  for (unsigned x = 0; x <= x_max; ++x) {
    switch (kind.kind) {
      case BuiltinKind::MaxwellBoltzmann:
        values[x] = Rational(BigInt(1), factorial(x));
        break;
      case BuiltinKind::BoseEinstein:
        values[x] = 1;
        break;
      case BuiltinKind::FermiDirac:
        values[x] = x <= 1 ? 1 : 0;
        break;
      case BuiltinKind::PseudoContagious:
        values[x] = Rational(binomial(kind.s + x - 1, x));
        break;
    }
  }
  return WeightFunction(std::move(values), kind.name());
}

WeightFunction builtin_weight(std::string_view name, unsigned x_max) {
  return builtin_weight(parse_weight_kind(name), x_max);
}

}  // namespace eom
