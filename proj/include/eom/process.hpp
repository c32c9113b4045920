#pragma once

// Finite-horizon a-mixed geometric counting processes.
//
// Jumps J_0..J_M, counts N_t = J_0 + ... + J_t, arrival times
// T_i = inf{t : N_t >= i} and inter-arrival times Z_i = T_i - T_{i-1} with
// T_0 = 0. A process is built from a weight function a, a horizon M and the
// law pi of N_M on {0..K}: given N_M = k the jumps follow the product model
// with weights a on M+1 cells and k particles. The joint density of
// (J_0..J_t) then factors as R_t(j_0+...+j_t) * prod_h a(j_h) with
// R_t(k) = P{N_t = k} / C(a; t+1, k).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eom/comb.hpp"
#include "eom/occupancy.hpp"
#include "eom/rational.hpp"
#include "eom/sampler.hpp"
#include "eom/weight.hpp"

namespace eom::process {

using JumpPath = std::vector<unsigned>;
using PathTable = std::map<JumpPath, Rational>;

class FiniteProcess {
 public:
  /// Builds the process whose count at the horizon has law terminal_law.
  /// Throws ArgumentError for a malformed law, EmptySupport when
  /// terminal_law(k) > 0 but C(a; M+1, k) = 0, EnumerationTooLarge past the
  /// budget. a must be tabulated up to K = terminal_law.size() - 1.
  static FiniteProcess build(const WeightFunction& a, unsigned horizon,
                             const std::vector<Rational>& terminal_law);

  /// Wraps an arbitrary joint law of (J_0..J_M); used to feed the checks with
  /// processes that need not have the product structure.
  static FiniteProcess from_joint(const WeightFunction& a, unsigned horizon,
                                  PathTable joint);

  unsigned horizon() const { return horizon_; }
  unsigned count_cap() const { return cap_; }
  const WeightFunction& weight() const { return weight_; }
  const std::vector<Rational>& terminal_law() const { return terminal_; }
  /// Paths with positive mass over times 0..M.
  const PathTable& joint() const { return marginals_.back(); }
  /// Law of (J_0..J_t), positive entries only.
  const PathTable& marginal(unsigned t) const;

 private:
  FiniteProcess(WeightFunction a, unsigned horizon, PathTable joint);

  WeightFunction weight_;
  unsigned horizon_;
  unsigned cap_ = 0;
  std::vector<Rational> terminal_;
  std::vector<PathTable> marginals_;
};

inline FiniteProcess build_process(const WeightFunction& a, unsigned horizon,
                                   const std::vector<Rational>& terminal_law) {
  return FiniteProcess::build(a, horizon, terminal_law);
}

/// P{J_0=j_0, ..., J_t=j_t} with t = jumps.size() - 1.
Rational joint_jump_density(const FiniteProcess& p, const JumpPath& jumps);

/// P{N_t = k} for k = 0..K.
std::vector<Rational> count_distribution(const FiniteProcess& p, unsigned t);

/// R_t(k) = P{N_t=k} / C(a; t+1, k); nullopt where C(a; t+1, k) = 0.
std::optional<Rational> r_function(const FiniteProcess& p, unsigned t, unsigned k);

/// Law of (J_0..J_t) given N_t = k, on A(t+1, k). Throws ConditioningError
/// when P{N_t = k} = 0.
OccupancyDistribution conditional_jumps_given_count(const FiniteProcess& p,
                                                    unsigned t, unsigned k);

/// P{Z_1=z_1, ..., Z_k=z_k, Z_{k+1} > 0} through the jump-event identity
/// (the event fixes J_0..J_{z_1+...+z_k}). Throws HorizonError when the
/// partial sum passes M.
Rational interarrival_event_probability(const FiniteProcess& p,
                                        const std::vector<unsigned>& gaps);

/// P{T_1=t_1, ..., T_c=t_c, T_{c+1} > t_c} through the jump-event identity.
/// Throws ArgumentError for an empty or decreasing tuple, HorizonError when
/// t_c > M.
Rational arrival_event_probability(const FiniteProcess& p,
                                   const std::vector<unsigned>& times);

/// Arrival times T_1..T_{N_M} of a single path, read off the definition.
std::vector<unsigned> arrival_times(const JumpPath& path);

/// P{N_{t+1} = k+i | N_t = k} = a(i) R_{t+1}(k+i) / R_t(k). Throws
/// HorizonError for t >= M and ConditioningError when P{N_t=k} = 0.
Rational transition_probability(const FiniteProcess& p, unsigned t, unsigned k,
                                unsigned i);

struct CheckOutcome {
  bool ok = true;
  std::string witness;  // first failure, human readable
};

/// Given N_t = k, the jumps over 0..t follow the product model on t+1 cells,
/// for every (t, k) with P{N_t = k} > 0.
CheckOutcome check_m_uosp(const FiniteProcess& p);

struct MixedGeometricOutcome {
  bool ok = true;
  std::string witness;
  /// recovered[t][k]; nullopt where no path with sum k has positive weight.
  std::vector<std::vector<std::optional<Rational>>> recovered;
};

/// Reads R_t(k) off one path per (t, k) and checks the factorization on every
/// path of A(t+1, k), k = 0..K.
MixedGeometricOutcome check_mixed_geometric_form(const FiniteProcess& p);

/// R_{t-1}(k) = sum_l a(l) R_t(k+l) for 1 <= t <= M and every k with R_{t-1}(k)
/// defined; the sum stops at the count cap.
CheckOutcome r_recursion_check(const FiniteProcess& p);

struct EquivalenceReport {
  CheckOutcome uosp;            // conditional jump laws are product models
  CheckOutcome mixed_geometric; // density factorization
  CheckOutcome interarrival;    // inter-arrival event formula
  CheckOutcome arrival;         // arrival event formula
  CheckOutcome r_consistency;   // recovered R agrees with P{N_t=k}/C
  std::size_t interarrival_cases = 0;
  std::size_t arrival_cases = 0;
  bool ok() const {
    return uosp.ok && mixed_geometric.ok && interarrival.ok && arrival.ok &&
           r_consistency.ok;
  }
};

/// Runs all four characterizations. The inter-arrival and arrival formulas
/// are checked for every gap vector and time tuple within the horizon with
/// up to K arrivals, comparing path-enumerated event probabilities against
/// the recovered R table.
EquivalenceReport check_theorem_equivalences(const FiniteProcess& p);

enum class ClassicKind { Strict, Leq1, Leq2 };

/// Closed-form conditional arrival-time laws for unit-jump and multiple-jump
/// processes.
///
///   Strict: 1/binom(cells, k) for strictly increasing times in {1..cells},
///           zero for tied times.
///   Leq1:   k!/(j_0!...j_t!) (1/(t+1))^k for 0 <= t_1 <= ... <= t_k <= t,
///           with j_l the number of times equal to l.
///   Leq2:   1/binom(t+k, k).
///
/// For Strict the second argument is the number of cells; for the others it
/// is the time t. Throws ArgumentError for unsorted or out-of-range times.
Rational classic_uosp_value(ClassicKind kind, unsigned t, unsigned k,
                            const std::vector<unsigned>& times);

/// Exact draw from the joint law of (J_0..J_M).
class PathSampler {
 public:
  explicit PathSampler(const FiniteProcess& p);
  const JumpPath& operator()(Rng& rng) const;

 private:
  std::vector<JumpPath> paths_;
  ExactSampler pick_;
};

JumpPath sample_path(const FiniteProcess& p, Rng& rng);

}  // namespace eom::process
