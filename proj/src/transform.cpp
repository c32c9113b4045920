#include "eom/transform.hpp"

#include <string>

#include "eom/errors.hpp"

namespace eom::transform {

using comb::Composition;

OccupancyDistribution k1_drop_particle(const OccupancyDistribution& d) {
  const unsigned n = d.cells();
  const unsigned r = d.particles();
  if (r == 0) throw ArgumentError("K1 needs at least one particle to drop");
  OccupancyDistribution::Table out;
  for (auto& reduced : comb::enumerate_compositions(n, r - 1)) {
    Rational p = 0;
    for (unsigned h = 0; h < n; ++h) {
      Rational source = d.probability(comb::increment(reduced, h));
      if (source != 0) p += Rational(reduced[h] + 1, r) * source;
    }
    if (p != 0) out.emplace(std::move(reduced), p);
  }
  return OccupancyDistribution::from_table(n, r - 1, std::move(out));
}

OccupancyDistribution k2_erase_cell(const OccupancyDistribution& d) {
  const unsigned n = d.cells();
  const unsigned r = d.particles();
  if (n < 2) throw ArgumentError("K2 needs at least two cells");
  const unsigned kept = n - 1;
  OccupancyDistribution::Table out;
  for (const auto& [x, p] : d.table()) {
    const unsigned moved = x[kept];
    std::vector<unsigned> base(x.counts().begin(), x.counts().end() - 1);
    Rational spread(BigInt(1), boost::multiprecision::pow(BigInt(kept), moved));
    for (const auto& xi : comb::enumerate_compositions(kept, moved)) {
      std::vector<unsigned> counts = base;
      for (unsigned j = 0; j < kept; ++j) counts[j] += xi[j];
      out[Composition(std::move(counts))] +=
          p * Rational(comb::multinomial(moved, xi)) * spread;
    }
  }
  return OccupancyDistribution::from_table(kept, r, std::move(out));
}

OccupancyDistribution condition_on_partial_sum(const OccupancyDistribution& d,
                                               unsigned n, unsigned s) {
  const unsigned big_n = d.cells();
  const unsigned r = d.particles();
  if (n < 1 || n >= big_n) {
    throw ArgumentError("conditioning needs 1 <= n < " + std::to_string(big_n) +
                        ", got n = " + std::to_string(n));
  }
  if (s > r) {
    throw ArgumentError("partial sum s = " + std::to_string(s) + " exceeds r = " +
                        std::to_string(r));
  }
  OccupancyDistribution::Table out;
  Rational event = 0;
  for (const auto& [x, p] : d.table()) {
    std::vector<unsigned> head(x.counts().begin(), x.counts().begin() + n);
    Composition prefix(std::move(head));
    if (prefix.total() != s) continue;
    event += p;
    out[std::move(prefix)] += p;
  }
  if (event == 0) {
    throw ConditioningError("P{S_" + std::to_string(n) + " = " + std::to_string(s) +
                            "} = 0; cannot condition on (n=" + std::to_string(n) +
                            ", s=" + std::to_string(s) + ")");
  }
  for (auto& [x, p] : out) p /= event;
  return OccupancyDistribution::from_table(n, s, std::move(out));
}

CondEomResult check_cond_eom(const WeightFunction& a, unsigned n, unsigned r) {
  if (r == 0) throw ArgumentError("condEOM needs r >= 1");
  const Rational ratio =
      normalization_constant(a, n, r - 1) / normalization_constant(a, n, r);
  CondEomResult result;
  for (const auto& reduced : comb::enumerate_compositions(n, r - 1)) {
    Rational dropped = 0;
    for (unsigned h = 0; h < n; ++h) {
      Rational w = a.product(comb::increment(reduced, h));
      if (w != 0) dropped += Rational(reduced[h] + 1, r) * w;
    }
    const Rational lhs = ratio * dropped;
    const Rational rhs = a.product(reduced);
    if (lhs != rhs) {
      result.holds = false;
      result.witness = reduced;
      if (rhs != 0) result.lhs = lhs / rhs;
      return result;
    }
  }
  return result;
}

std::optional<WeightFunction> is_m_model(const OccupancyDistribution& d) {
  return fit_product_form(d).weight;
}

}  // namespace eom::transform
