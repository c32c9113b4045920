#include "eom/occupancy.hpp"

#include <string>

#include "eom/errors.hpp"

namespace eom {

using comb::Composition;
using comb::LabelVector;

namespace {

std::string describe(const Composition& x) {
  std::string out = "(";
  for (unsigned j = 0; j < x.cells(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(x[j]);
  }
  return out + ")";
}

}  // namespace

OccupancyDistribution OccupancyDistribution::from_table(unsigned n, unsigned r,
                                                        Table table) {
  if (n == 0) throw ArgumentError("occupancy model needs n >= 1");
  Rational total = 0;
  for (auto it = table.begin(); it != table.end();) {
    const auto& [x, p] = *it;
    if (x.cells() != n || x.total() != r) {
      throw ContractViolation("composition " + describe(x) + " is not in A(" +
                              std::to_string(n) + "," + std::to_string(r) + ")");
    }
    if (p < 0) throw ContractViolation("negative probability at " + describe(x));
    total += p;
    it = p == 0 ? table.erase(it) : std::next(it);
  }
  if (total != 1) {
    throw ContractViolation("occupancy table sums to " + to_string(total) +
                            ", not 1");
  }
  return OccupancyDistribution(n, r, std::move(table));
}

OccupancyDistribution OccupancyDistribution::point_mass(const Composition& x) {
  return from_table(x.cells(), x.total(), {{x, Rational(1)}});
}

OccupancyDistribution OccupancyDistribution::uniform(unsigned n, unsigned r) {
  auto space = comb::enumerate_compositions(n, r);
  Rational p(BigInt(1), BigInt(space.size()));
  Table table;
  for (auto& x : space) table.emplace(std::move(x), p);
  return from_table(n, r, std::move(table));
}

Rational OccupancyDistribution::probability(const Composition& x) const {
  auto it = table_.find(x);
  return it == table_.end() ? Rational(0) : it->second;
}

LabelDistribution LabelDistribution::from_dense(unsigned r, unsigned n,
                                                std::vector<Rational> masses) {
  if (n == 0) throw ArgumentError("label law needs n >= 1");
  BigInt expected = boost::multiprecision::pow(BigInt(n), r);
  if (expected != masses.size()) {
    throw ContractViolation("label table has " + std::to_string(masses.size()) +
                            " entries, expected " + expected.str());
  }
  Rational total = 0;
  for (const auto& p : masses) {
    if (p < 0) throw ContractViolation("negative label probability");
    total += p;
  }
  if (total != 1) {
    throw ContractViolation("label table sums to " + to_string(total) + ", not 1");
  }
  return LabelDistribution(r, n, std::move(masses));
}

Rational LabelDistribution::probability(const LabelVector& y) const {
  if (y.cells() != n_ || y.size() != r_) {
    throw ArgumentError("label vector shape does not match the law");
  }
  return masses_[comb::label_index(y)];
}

MixingSpec::MixingSpec(std::vector<MixingAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw ArgumentError("mixing spec needs at least one atom");
  Rational total = 0;
  for (const auto& atom : atoms_) {
    if (atom.rho <= 0 || atom.rho >= 1) {
      throw ArgumentError("mixing atom rho must lie in (0,1), got " +
                          to_string(atom.rho));
    }
    if (atom.weight < 0) throw ArgumentError("negative mixing weight");
    total += atom.weight;
  }
  if (total != 1) throw ArgumentError("mixing weights sum to " + to_string(total));
}

Rational MixingSpec::tilt(unsigned total) const {
  Rational out = 0;
  for (const auto& atom : atoms_) out += atom.weight * pow(atom.rho, total);
  return out;
}

Rational raw_normalization_constant(const WeightFunction& a, unsigned n, unsigned r) {
  if (n == 0) throw ArgumentError("normalization constant needs n >= 1");
  if (a.x_max() < r) {
    throw ArgumentError("weight function must be tabulated up to " +
                        std::to_string(r) + ", has " + std::to_string(a.x_max()));
  }
  // Coefficient of z^r in (sum_x a(x) z^x)^n, truncated at degree r. This is
  // the composition sum grouped by the running total.
  std::vector<Rational> coeff(r + 1, Rational(0));
  coeff[0] = 1;
  for (unsigned cell = 0; cell < n; ++cell) {
    std::vector<Rational> next(r + 1, Rational(0));
    for (unsigned have = 0; have <= r; ++have) {
      if (coeff[have] == 0) continue;
      for (unsigned x = 0; have + x <= r; ++x) next[have + x] += coeff[have] * a(x);
    }
    coeff = std::move(next);
  }
  return coeff[r];
}

Rational normalization_constant(const WeightFunction& a, unsigned n, unsigned r) {
  Rational c = raw_normalization_constant(a, n, r);
  if (c == 0) {
    throw EmptySupport("weight function gives zero mass to every composition in A(" +
                       std::to_string(n) + "," + std::to_string(r) + ")");
  }
  return c;
}

OccupancyDistribution m_model(const WeightFunction& a, unsigned n, unsigned r) {
  Rational c = normalization_constant(a, n, r);
  OccupancyDistribution::Table table;
  for (auto& x : comb::enumerate_compositions(n, r)) {
    Rational w = a.product(x);
    if (w != 0) table.emplace(std::move(x), w / c);
  }
  return OccupancyDistribution::from_table(n, r, std::move(table));
}

bool is_exchangeable(const OccupancyDistribution& d) {
  // Every orbit touched by the support must be fully present with a common
  // value; orbits that are never touched carry zero throughout.
  struct Orbit {
    Rational value;
    BigInt seen = 0;
  };
  std::map<Composition, Orbit> orbits;
  for (const auto& [x, p] : d.table()) {
    auto [it, fresh] = orbits.try_emplace(x.canonical(), Orbit{p});
    if (!fresh && it->second.value != p) return false;
    ++it->second.seen;
  }
  for (const auto& [rep, orbit] : orbits) {
    if (orbit.seen != comb::orbit_size(rep)) return false;
  }
  return true;
}

bool is_exchangeable(const LabelDistribution& ld) {
  std::map<comb::OrderedLabels, Rational> first_seen;
  const auto& masses = ld.masses();
  for (std::size_t index = 0; index < masses.size(); ++index) {
    auto key = comb::label_at(ld.length(), ld.cells(), index).sorted();
    auto [it, fresh] = first_seen.try_emplace(std::move(key), masses[index]);
    if (!fresh && it->second != masses[index]) return false;
  }
  return true;
}

LabelDistribution label_distribution(const OccupancyDistribution& d) {
  if (!is_exchangeable(d)) {
    throw ContractViolation("label law requires an exchangeable occupancy model");
  }
  const unsigned n = d.cells();
  const unsigned r = d.particles();
  auto labels = comb::enumerate_labels(r, n);
  std::vector<Rational> masses(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Composition x = comb::tilde_phi(labels[i]);
    Rational p = d.probability(x);
    if (p != 0) masses[i] = p / Rational(comb::multinomial(r, x));
  }
  return LabelDistribution::from_dense(r, n, std::move(masses));
}

OccupancyDistribution occupancy_from_labels(const LabelDistribution& ld) {
  if (!is_exchangeable(ld)) {
    throw ContractViolation("occupancy law requires an exchangeable label law");
  }
  const unsigned n = ld.cells();
  const unsigned r = ld.length();
  OccupancyDistribution::Table table;
  for (auto& x : comb::enumerate_compositions(n, r)) {
    LabelVector y(n, comb::psi(x).labels());
    Rational p = ld.probability(y);
    if (p != 0) table.emplace(x, Rational(comb::multinomial(r, x)) * p);
  }
  return OccupancyDistribution::from_table(n, r, std::move(table));
}

OrderStatisticsLaw order_statistics_distribution(const OccupancyDistribution& d) {
  OrderStatisticsLaw law;
  for (const auto& [x, p] : d.table()) law.emplace(comb::psi(x), p);
  return law;
}

LabelDistribution label_marginal(const LabelDistribution& ld,
                                 const std::set<unsigned>& indices) {
  if (indices.empty()) throw ArgumentError("marginal needs a nonempty index set");
  if (*indices.begin() < 1 || *indices.rbegin() > ld.length()) {
    throw ArgumentError("marginal index outside [1, " + std::to_string(ld.length()) +
                        "]");
  }
  const unsigned n = ld.cells();
  const auto k = static_cast<unsigned>(indices.size());
  std::vector<Rational> masses(
      boost::multiprecision::pow(BigInt(n), k).convert_to<std::size_t>(), Rational(0));
  const auto& full = ld.masses();
  for (std::size_t index = 0; index < full.size(); ++index) {
    if (full[index] == 0) continue;
    auto y = comb::label_at(ld.length(), n, index);
    std::vector<unsigned> kept;
    kept.reserve(k);
    for (unsigned i : indices) kept.push_back(y[i - 1]);
    masses[comb::label_index(LabelVector(n, std::move(kept)))] += full[index];
  }
  return LabelDistribution::from_dense(k, n, std::move(masses));
}

Rational m_model_label_density(const WeightFunction& a, unsigned n, unsigned r,
                               const LabelVector& y) {
  if (y.cells() != n || y.size() != r) {
    throw ArgumentError("label vector shape does not match (n, r)");
  }
  Rational c = normalization_constant(a, n, r);
  Composition x = comb::tilde_phi(y);
  Rational numerator = 1;
  for (unsigned v : x.counts()) numerator *= a(v) * Rational(factorial(v));
  return numerator / (Rational(factorial(r)) * c);
}

OccupancyDistribution conditional_from_iid(const std::vector<Rational>& q,
                                           const std::optional<MixingSpec>& mix,
                                           unsigned n, unsigned r) {
  if (q.size() < r + 1) {
    throw ArgumentError("weight table must cover 0.." + std::to_string(r));
  }
  for (const auto& v : q) {
    if (v < 0) throw ArgumentError("negative entry in weight table");
  }
  OccupancyDistribution::Table joint;
  Rational mass = 0;
  for (auto& x : comb::enumerate_compositions(n, r)) {
    Rational p = 1;
    for (unsigned v : x.counts()) p *= q[v];
    if (mix) p *= mix->tilt(x.total());
    if (p == 0) continue;
    mass += p;
    joint.emplace(std::move(x), p);
  }
  if (mass == 0) {
    throw ConditioningError("the event {S_n = " + std::to_string(r) +
                            "} has zero mass");
  }
  for (auto& [x, p] : joint) p /= mass;
  return OccupancyDistribution::from_table(n, r, std::move(joint));
}

}  // namespace eom
