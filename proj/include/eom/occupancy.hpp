#pragma once

// Exact occupancy models and their label (Y) and order-statistic (U) views.
//
// An occupancy model is a law on A(n,r). When it is exchangeable, the label
// vector Y in D(r,n) has P{Y=y} = P{X = tilde_phi(y)} / multinomial(r, tilde_phi(y)),
// and the order statistics of Y are U = psi(X).

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "eom/comb.hpp"
#include "eom/rational.hpp"
#include "eom/weight.hpp"

namespace eom {

class OccupancyDistribution {
 public:
  using Table = std::map<comb::Composition, Rational>;

  /// Validates keys (in A(n,r)), nonnegativity and exact unit mass. Zero
  /// entries are dropped, so the stored table is the support.
  static OccupancyDistribution from_table(unsigned n, unsigned r, Table table);

  /// Point mass at x.
  static OccupancyDistribution point_mass(const comb::Composition& x);

  /// Uniform law on A(n,r).
  static OccupancyDistribution uniform(unsigned n, unsigned r);

  unsigned cells() const { return n_; }
  unsigned particles() const { return r_; }
  const Table& table() const { return table_; }
  Rational probability(const comb::Composition& x) const;

  bool operator==(const OccupancyDistribution&) const = default;

 private:
  OccupancyDistribution(unsigned n, unsigned r, Table table)
      : n_(n), r_(r), table_(std::move(table)) {}

  unsigned n_;
  unsigned r_;
  Table table_;
};

/// Law of the label vector Y, stored densely over D(r,n) in odometer order.
class LabelDistribution {
 public:
  static LabelDistribution from_dense(unsigned r, unsigned n,
                                      std::vector<Rational> masses);

  unsigned cells() const { return n_; }
  unsigned length() const { return r_; }
  const std::vector<Rational>& masses() const { return masses_; }
  Rational probability(const comb::LabelVector& y) const;

  bool operator==(const LabelDistribution&) const = default;

 private:
  LabelDistribution(unsigned r, unsigned n, std::vector<Rational> masses)
      : r_(r), n_(n), masses_(std::move(masses)) {}

  unsigned r_;
  unsigned n_;
  std::vector<Rational> masses_;
};

/// Law of U = (Y_(1), ..., Y_(r)) on B(r,n); zero entries omitted.
using OrderStatisticsLaw = std::map<comb::OrderedLabels, Rational>;

struct MixingAtom {
  Rational rho;     // plays the role of exp(-theta), in (0,1)
  Rational weight;  // mixing probability
};

/// A finite mixing law over geometric tilts rho^z.
class MixingSpec {
 public:
  explicit MixingSpec(std::vector<MixingAtom> atoms);
  const std::vector<MixingAtom>& atoms() const { return atoms_; }

  /// sum_m weight_m * rho_m^total
  Rational tilt(unsigned total) const;

 private:
  std::vector<MixingAtom> atoms_;
};

/// C(a; n, r) = sum over A(n,r) of prod_j a(x_j). Throws EmptySupport when
/// the sum is zero.
Rational normalization_constant(const WeightFunction& a, unsigned n, unsigned r);

/// Same sum without the zero check.
Rational raw_normalization_constant(const WeightFunction& a, unsigned n, unsigned r);

/// P{X=x} = prod_j a(x_j) / C(a; n, r).
OccupancyDistribution m_model(const WeightFunction& a, unsigned n, unsigned r);

bool is_exchangeable(const OccupancyDistribution& d);
bool is_exchangeable(const LabelDistribution& ld);

/// Throws ContractViolation if d is not exchangeable.
LabelDistribution label_distribution(const OccupancyDistribution& d);

/// Inverse of label_distribution. Throws ContractViolation if ld is not
/// invariant under permutations of its coordinates.
OccupancyDistribution occupancy_from_labels(const LabelDistribution& ld);

/// Law of U = psi(X): P{U=u} = P{X = phi(u)}.
OrderStatisticsLaw order_statistics_distribution(const OccupancyDistribution& d);

/// Marginal law of (Y_i)_{i in indices}; indices are 1-based and the result
/// keeps their increasing order. Throws ArgumentError for an empty or
/// out-of-range set.
LabelDistribution label_marginal(const LabelDistribution& ld,
                                 const std::set<unsigned>& indices);

/// prod_l a(tilde_phi_l(y)) tilde_phi_l(y)! / (r! C(a; n, r))
Rational m_model_label_density(const WeightFunction& a, unsigned n, unsigned r,
                               const comb::LabelVector& y);

/// Law of (Z_1..Z_n) given Z_1+...+Z_n = r, where the Z_i have joint density
/// prod_j q(z_j) * sum_m w_m rho_m^(z_1+...+z_n) (or prod_j q(z_j) without a
/// mix). q must be tabulated up to at least r.
OccupancyDistribution conditional_from_iid(const std::vector<Rational>& q,
                                           const std::optional<MixingSpec>& mix,
                                           unsigned n, unsigned r);

}  // namespace eom
