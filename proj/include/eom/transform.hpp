#pragma once

// Transformations between occupancy models.
//
//   K1         drop one of the r particles uniformly at random: A(n,r) -> A(n,r-1)
//   K2         erase the last cell and scatter its particles i.i.d.-uniformly
//              over the remaining cells: A(n,r) -> A(n-1,r)
//   condition  law of (X_1..X_n) given X_1+...+X_n = s: A(N,r) -> A(n,s)

#include <optional>
#include <string>

#include "eom/comb.hpp"
#include "eom/occupancy.hpp"
#include "eom/weight.hpp"

namespace eom::transform {

/// Throws ArgumentError when r = 0.
OccupancyDistribution k1_drop_particle(const OccupancyDistribution& d);

/// Throws ArgumentError when n = 1.
OccupancyDistribution k2_erase_cell(const OccupancyDistribution& d);

/// Throws ArgumentError unless 1 <= n < N and s <= r; throws
/// ConditioningError when P{S_n = s} = 0.
OccupancyDistribution condition_on_partial_sum(const OccupancyDistribution& d,
                                               unsigned n, unsigned s);

struct CondEomResult {
  bool holds = true;
  std::optional<comb::Composition> witness;  // a violating x' in A(n,r-1)
  std::optional<Rational> lhs;               // left side at the witness, if defined
};

/// Checks, for every x' in A(n,r-1),
///
///   C(a;n,r-1)/C(a;n,r) * sum_h (x'_h+1)/r * a(x'_h+1)/a(x'_h) = 1.
///
/// The check is evaluated in the cleared form
///   C(a;n,r-1)/C(a;n,r) * sum_h (x'_h+1)/r * prod a(x'+e_h) = prod a(x'),
/// which equals the ratio form on the support of the (r-1)-particle model and
/// requires zero dropped mass off that support. Under that reading terms with
/// a(x'_h) = 0 never enter, so Fermi-Dirac weights are admissible.
CondEomResult check_cond_eom(const WeightFunction& a, unsigned n, unsigned r);

/// Outcome of fitting P{X=x} = K prod_j a(x_j) to an exchangeable table.
struct ProductFormFit {
  /// True iff some nonnegative real-valued a reproduces d exactly.
  bool product_form = false;
  /// A rational a with m_model(a, n, r) == d, when one was constructed.
  std::optional<WeightFunction> weight;
  std::string reason;
};

/// Decides product form exactly. The weights are identifiable only up to
/// a(x) -> c lambda^x; the returned witness is gauged so that a(0) = 1 when 0
/// is an occupied level and a(1) = 1 when 1 is.
ProductFormFit fit_product_form(const OccupancyDistribution& d);

/// The rational witness of fit_product_form, if any.
std::optional<WeightFunction> is_m_model(const OccupancyDistribution& d);

}  // namespace eom::transform
