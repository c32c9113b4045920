#include "eom/random_models.hpp"

#include <map>

namespace eom {

namespace {

unsigned draw_between(Rng& rng, unsigned lo, unsigned hi) {
  return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
}

}  // namespace

OccupancyDistribution random_eom(unsigned n, unsigned r, Rng& rng) {
  std::map<comb::Composition, unsigned> orbit_mass;
  auto space = comb::enumerate_compositions(n, r);
  for (const auto& x : space) {
    auto rep = x.canonical();
    if (!orbit_mass.contains(rep)) orbit_mass.emplace(rep, draw_between(rng, 1, 20));
  }
  unsigned total = 0;
  for (const auto& [rep, mass] : orbit_mass) total += mass;
  OccupancyDistribution::Table table;
  for (auto& x : space) {
    auto rep = x.canonical();
    table.emplace(std::move(x), Rational(BigInt(orbit_mass.at(rep)),
                                         comb::orbit_size(rep) * total));
  }
  return OccupancyDistribution::from_table(n, r, std::move(table));
}

WeightFunction random_weight(unsigned x_max, Rng& rng) {
  std::vector<Rational> values;
  values.reserve(x_max + 1);
  for (unsigned x = 0; x <= x_max; ++x) {
    values.emplace_back(draw_between(rng, 1, 9), draw_between(rng, 1, 9));
  }
  return WeightFunction(std::move(values), "random");
}

std::vector<Rational> random_law(unsigned size, Rng& rng) {
  std::vector<unsigned> masses(size);
  unsigned total = 0;
  for (auto& m : masses) total += (m = draw_between(rng, 1, 12));
  std::vector<Rational> law;
  law.reserve(size);
  for (unsigned m : masses) law.emplace_back(m, total);
  return law;
}

}  // namespace eom
