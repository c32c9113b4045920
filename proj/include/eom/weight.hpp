#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eom/comb.hpp"
#include "eom/rational.hpp"

namespace eom {

/// The weight function a(.) of a product-form occupancy model, tabulated on
/// {0, ..., x_max}. Zero values are allowed (Fermi-Dirac needs them); at
/// least one value must be positive.
class WeightFunction {
 public:
  explicit WeightFunction(std::vector<Rational> values,
                          std::optional<std::string> tag = std::nullopt);

  /// Throws ArgumentError for x > x_max().
  const Rational& operator()(unsigned x) const;

  unsigned x_max() const { return static_cast<unsigned>(values_.size()) - 1; }
  const std::vector<Rational>& values() const { return values_; }
  const std::optional<std::string>& tag() const { return tag_; }

  /// prod_j a(x_j)
  Rational product(const comb::Composition& x) const;

  /// Values agree; the tag is ignored.
  bool operator==(const WeightFunction& other) const {
    return values_ == other.values_;
  }

 private:
  std::vector<Rational> values_;
  std::optional<std::string> tag_;
};

enum class BuiltinKind { MaxwellBoltzmann, BoseEinstein, FermiDirac, PseudoContagious };

struct WeightKind {
  BuiltinKind kind;
  unsigned s = 0;  // only for PseudoContagious

  /// "mb", "be", "fd" or "pc:s"
  std::string name() const;
};

/// Parses "mb", "be", "fd" or "pc:s" with integer s >= 1.
WeightKind parse_weight_kind(std::string_view name);

/// MB: 1/x!   BE: 1   FD: 1,1,0,0,...   pseudo-contagious(s): binom(s+x-1, x)
WeightFunction builtin_weight(WeightKind kind, unsigned x_max);
WeightFunction builtin_weight(std::string_view name, unsigned x_max);

}  // namespace eom
