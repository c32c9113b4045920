#include "eom/process.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "eom/errors.hpp"

namespace eom::process {

using comb::Composition;

namespace {

std::string show(const std::vector<unsigned>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

unsigned path_total(const JumpPath& path) {
  return std::accumulate(path.begin(), path.end(), 0u);
}

/// Jump counts over times 0..last for arrivals at the given (sorted) times.
JumpPath jumps_for_times(const std::vector<unsigned>& times, unsigned last) {
  JumpPath jumps(last + 1, 0);
  for (unsigned t : times) ++jumps[t];
  return jumps;
}

/// Probability of {T_i = times_i for i <= c, T_{c+1} > times_c} by scanning
/// every path; with an empty tuple the event is {T_1 > 0}.
Rational event_by_paths(const FiniteProcess& p, const std::vector<unsigned>& times) {
  const unsigned last = times.empty() ? 0 : times.back();
  const std::size_t c = times.size();
  Rational out = 0;
  for (const auto& [path, mass] : p.joint()) {
    auto arrivals = arrival_times(path);
    if (arrivals.size() < c) continue;
    if (!std::equal(times.begin(), times.end(), arrivals.begin())) continue;
    // T_{c+1} > last: no further arrival at or before `last` (or none at all).
    if (arrivals.size() > c && arrivals[c] <= last) continue;
    out += mass;
  }
  return out;
}

/// All nondecreasing tuples of length c with entries in [0, last].
void for_each_time_tuple(unsigned c, unsigned last,
                         const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> times(c, 0);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned i, unsigned from) {
    if (i == c) {
      visit(times);
      return;
    }
    for (unsigned t = from; t <= last; ++t) {
      times[i] = t;
      fill(i + 1, t);
    }
  };
  fill(0, 0);
}

}  // namespace

FiniteProcess::FiniteProcess(WeightFunction a, unsigned horizon, PathTable joint)
    : weight_(std::move(a)), horizon_(horizon) {
  Rational total = 0;
  for (auto it = joint.begin(); it != joint.end();) {
    const auto& [path, mass] = *it;
    if (path.size() != horizon_ + 1) {
      throw ArgumentError("path " + show(path) + " does not cover times 0.." +
                          std::to_string(horizon_));
    }
    if (mass < 0) throw ArgumentError("negative path mass at " + show(path));
    total += mass;
    if (mass == 0) {
      it = joint.erase(it);
      continue;
    }
    cap_ = std::max(cap_, path_total(path));
    ++it;
  }
  if (total != 1) {
    throw ArgumentError("path masses sum to " + to_string(total) + ", not 1");
  }
  if (weight_.x_max() < cap_) {
    throw ArgumentError("weight function must be tabulated up to the count cap " +
                        std::to_string(cap_));
  }

  marginals_.resize(horizon_ + 1);
  marginals_[horizon_] = std::move(joint);
  for (unsigned t = horizon_; t-- > 0;) {
    for (const auto& [path, mass] : marginals_[t + 1]) {
      marginals_[t][JumpPath(path.begin(), path.end() - 1)] += mass;
    }
  }
  terminal_.assign(cap_ + 1, Rational(0));
  for (const auto& [path, mass] : marginals_[horizon_]) terminal_[path_total(path)] += mass;
}

FiniteProcess FiniteProcess::build(const WeightFunction& a, unsigned horizon,
                                   const std::vector<Rational>& terminal_law) {
  if (terminal_law.empty()) throw ArgumentError("terminal law is empty");
  Rational total = 0;
  for (const auto& p : terminal_law) {
    if (p < 0) throw ArgumentError("terminal law has a negative entry");
    total += p;
  }
  if (total != 1) {
    throw ArgumentError("terminal law sums to " + to_string(total) + ", not 1");
  }
  const auto cap = static_cast<unsigned>(terminal_law.size() - 1);
  if (a.x_max() < cap) {
    throw ArgumentError("weight function must be tabulated up to " +
                        std::to_string(cap));
  }
  BigInt paths = 0;
  for (unsigned k = 0; k <= cap; ++k) paths += comb::composition_count(horizon + 1, k);
  if (paths > kEnumerationBudget) {
    throw EnumerationTooLarge("jump paths up to horizon " + std::to_string(horizon),
                              paths.str());
  }

  PathTable joint;
  for (unsigned k = 0; k <= cap; ++k) {
    if (terminal_law[k] == 0) continue;
    Rational c = raw_normalization_constant(a, horizon + 1, k);
    if (c == 0) {
      throw EmptySupport("terminal law charges N_M = " + std::to_string(k) +
                         " but no jump path with that total has positive weight");
    }
    for (const auto& x : comb::enumerate_compositions(horizon + 1, k)) {
      Rational w = a.product(x);
      if (w != 0) joint.emplace(x.counts(), terminal_law[k] * w / c);
    }
  }
  FiniteProcess out(a, horizon, std::move(joint));
  out.terminal_ = terminal_law;
  out.cap_ = cap;
  return out;
}

FiniteProcess FiniteProcess::from_joint(const WeightFunction& a, unsigned horizon,
                                        PathTable joint) {
  return FiniteProcess(a, horizon, std::move(joint));
}

const PathTable& FiniteProcess::marginal(unsigned t) const {
  if (t > horizon_) {
    throw HorizonError("time " + std::to_string(t) + " beyond horizon " +
                       std::to_string(horizon_));
  }
  return marginals_[t];
}

Rational joint_jump_density(const FiniteProcess& p, const JumpPath& jumps) {
  if (jumps.empty()) throw ArgumentError("jump prefix must cover time 0");
  const auto& table = p.marginal(static_cast<unsigned>(jumps.size() - 1));
  auto it = table.find(jumps);
  return it == table.end() ? Rational(0) : it->second;
}

std::vector<Rational> count_distribution(const FiniteProcess& p, unsigned t) {
  std::vector<Rational> law(p.count_cap() + 1, Rational(0));
  for (const auto& [path, mass] : p.marginal(t)) law[path_total(path)] += mass;
  return law;
}

std::optional<Rational> r_function(const FiniteProcess& p, unsigned t, unsigned k) {
  if (k > p.count_cap()) {
    throw ArgumentError("R_t(k) requested beyond the count cap " +
                        std::to_string(p.count_cap()));
  }
  Rational c = raw_normalization_constant(p.weight(), t + 1, k);
  if (c == 0) return std::nullopt;
  return count_distribution(p, t)[k] / c;
}

OccupancyDistribution conditional_jumps_given_count(const FiniteProcess& p,
                                                    unsigned t, unsigned k) {
  OccupancyDistribution::Table table;
  Rational event = 0;
  for (const auto& [path, mass] : p.marginal(t)) {
    if (path_total(path) != k) continue;
    event += mass;
    table.emplace(Composition(path), mass);
  }
  if (event == 0) {
    throw ConditioningError("P{N_" + std::to_string(t) + " = " + std::to_string(k) +
                            "} = 0");
  }
  for (auto& [x, mass] : table) mass /= event;
  return OccupancyDistribution::from_table(t + 1, k, std::move(table));
}

std::vector<unsigned> arrival_times(const JumpPath& path) {
  std::vector<unsigned> times;
  for (unsigned h = 0; h < path.size(); ++h) times.insert(times.end(), path[h], h);
  return times;
}

Rational interarrival_event_probability(const FiniteProcess& p,
                                        const std::vector<unsigned>& gaps) {
  std::vector<unsigned> times;
  unsigned at = 0;
  for (unsigned z : gaps) {
    at += z;
    if (at > p.horizon()) {
      throw HorizonError("inter-arrival times reach " + std::to_string(at) +
                         " past horizon " + std::to_string(p.horizon()));
    }
    times.push_back(at);
  }
  return joint_jump_density(p, jumps_for_times(times, at));
}

Rational arrival_event_probability(const FiniteProcess& p,
                                   const std::vector<unsigned>& times) {
  if (times.empty()) throw ArgumentError("arrival tuple must be nonempty");
  if (!std::is_sorted(times.begin(), times.end())) {
    throw ArgumentError("arrival times must be nondecreasing, got " + show(times));
  }
  if (times.back() > p.horizon()) {
    throw HorizonError("arrival time " + std::to_string(times.back()) +
                       " past horizon " + std::to_string(p.horizon()));
  }
  return joint_jump_density(p, jumps_for_times(times, times.back()));
}

Rational transition_probability(const FiniteProcess& p, unsigned t, unsigned k,
                                unsigned i) {
  if (t >= p.horizon()) {
    throw HorizonError("no transition out of time " + std::to_string(t) +
                       " with horizon " + std::to_string(p.horizon()));
  }
  auto from = r_function(p, t, k);
  if (!from || *from == 0) {
    throw ConditioningError("P{N_" + std::to_string(t) + " = " + std::to_string(k) +
                            "} = 0");
  }
  if (k + i > p.count_cap()) return 0;
  const Rational& weight = p.weight()(i);
  if (weight == 0) return 0;
  auto to = r_function(p, t + 1, k + i);
  if (!to) throw Error("internal: R undefined at a reachable transition");
  return weight * *to / *from;
}

CheckOutcome check_m_uosp(const FiniteProcess& p) {
  for (unsigned t = 0; t <= p.horizon(); ++t) {
    auto counts = count_distribution(p, t);
    for (unsigned k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      auto conditional = conditional_jumps_given_count(p, t, k);
      if (raw_normalization_constant(p.weight(), t + 1, k) == 0 ||
          !(conditional == m_model(p.weight(), t + 1, k))) {
        return {false, "conditional law of jumps given N_" + std::to_string(t) +
                           " = " + std::to_string(k) + " is not the product model"};
      }
    }
  }
  return {};
}

MixedGeometricOutcome check_mixed_geometric_form(const FiniteProcess& p) {
  MixedGeometricOutcome out;
  const auto& a = p.weight();
  out.recovered.assign(p.horizon() + 1,
                       std::vector<std::optional<Rational>>(p.count_cap() + 1));
  for (unsigned t = 0; t <= p.horizon(); ++t) {
    for (unsigned k = 0; k <= p.count_cap(); ++k) {
      auto paths = comb::enumerate_compositions(t + 1, k);
      std::optional<Rational> r;
      for (const auto& x : paths) {
        Rational w = a.product(x);
        if (w != 0) {
          r = joint_jump_density(p, x.counts()) / w;
          break;
        }
      }
      out.recovered[t][k] = r;
      for (const auto& x : paths) {
        Rational expected = r ? *r * a.product(x) : Rational(0);
        if (joint_jump_density(p, x.counts()) != expected) {
          out.ok = false;
          out.witness = "density of " + show(x.counts()) + " is not R_" +
                        std::to_string(t) + "(" + std::to_string(k) +
                        ") times the weight product";
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome r_recursion_check(const FiniteProcess& p) {
  const auto& a = p.weight();
  for (unsigned t = 1; t <= p.horizon(); ++t) {
    for (unsigned k = 0; k <= p.count_cap(); ++k) {
      auto previous = r_function(p, t - 1, k);
      if (!previous) continue;
      Rational sum = 0;
      for (unsigned l = 0; k + l <= p.count_cap(); ++l) {
        if (a(l) == 0) continue;
        auto next = r_function(p, t, k + l);
        if (!next) {
          return {false, "R_" + std::to_string(t) + "(" + std::to_string(k + l) +
                             ") undefined under a positive weight"};
        }
        sum += a(l) * *next;
      }
      if (sum != *previous) {
        return {false, "R_" + std::to_string(t - 1) + "(" + std::to_string(k) +
                           ") differs from the weighted sum of R_" +
                           std::to_string(t)};
      }
    }
  }
  return {};
}

EquivalenceReport check_theorem_equivalences(const FiniteProcess& p) {
  EquivalenceReport report;
  report.uosp = check_m_uosp(p);
  auto mixed = check_mixed_geometric_form(p);
  report.mixed_geometric = {mixed.ok, mixed.witness};
  const auto& recovered = mixed.recovered;
  const auto& a = p.weight();

  for (unsigned t = 0; t <= p.horizon() && report.r_consistency.ok; ++t) {
    for (unsigned k = 0; k <= p.count_cap(); ++k) {
      if (recovered[t][k] != r_function(p, t, k)) {
        report.r_consistency = {false, "recovered R_" + std::to_string(t) + "(" +
                                           std::to_string(k) +
                                           ") disagrees with P{N_t=k}/C"};
        break;
      }
    }
  }

  // Right side R_{t_c}(c) * prod_{h <= t_c} a(#{i : t_i = h}).
  auto formula = [&](const std::vector<unsigned>& times) -> std::optional<Rational> {
    const unsigned last = times.empty() ? 0 : times.back();
    JumpPath jumps = jumps_for_times(times, last);
    Rational product = a.product(Composition(jumps));
    const auto& r = recovered[last][times.size()];
    if (r) return *r * product;
    if (product == 0) return Rational(0);
    return std::nullopt;
  };

  for (unsigned c = 0; c <= p.count_cap() && report.interarrival.ok; ++c) {
    // Gap vectors of length c with sum <= M are in bijection with
    // nondecreasing arrival tuples; enumerate gaps directly.
    std::vector<unsigned> gaps(c, 0);
    std::function<void(unsigned, unsigned)> fill = [&](unsigned i, unsigned used) {
      if (!report.interarrival.ok) return;
      if (i == c) {
        ++report.interarrival_cases;
        std::vector<unsigned> times;
        unsigned at = 0;
        for (unsigned z : gaps) times.push_back(at += z);
        Rational enumerated = event_by_paths(p, times);
        Rational via_jumps = interarrival_event_probability(p, gaps);
        auto rhs = formula(times);
        if (enumerated != via_jumps || !rhs || *rhs != enumerated) {
          report.interarrival = {false, "inter-arrival event " + show(gaps) +
                                            " has probability " +
                                            to_string(enumerated) +
                                            " but the formula disagrees"};
        }
        return;
      }
      for (unsigned z = 0; used + z <= p.horizon(); ++z) {
        gaps[i] = z;
        fill(i + 1, used + z);
      }
    };
    fill(0, 0);
  }

  for (unsigned c = 1; c <= p.count_cap() && report.arrival.ok; ++c) {
    for_each_time_tuple(c, p.horizon(), [&](const std::vector<unsigned>& times) {
      if (!report.arrival.ok) return;
      ++report.arrival_cases;
      Rational enumerated = event_by_paths(p, times);
      Rational via_jumps = arrival_event_probability(p, times);
      auto rhs = formula(times);
      if (enumerated != via_jumps || !rhs || *rhs != enumerated) {
        report.arrival = {false, "arrival event " + show(times) + " has probability " +
                                     to_string(enumerated) +
                                     " but the formula disagrees"};
      }
    });
  }
  return report;
}

Rational classic_uosp_value(ClassicKind kind, unsigned t, unsigned k,
                            const std::vector<unsigned>& times) {
  if (times.size() != k) {
    throw ArgumentError("expected " + std::to_string(k) + " arrival times, got " +
                        std::to_string(times.size()));
  }
  if (!std::is_sorted(times.begin(), times.end())) {
    throw ArgumentError("arrival times must be nondecreasing");
  }
  switch (kind) {
    case ClassicKind::Strict: {
      for (unsigned s : times) {
        if (s < 1 || s > t) {
          throw ArgumentError("unit-jump arrival times must lie in [1, " +
                              std::to_string(t) + "]");
        }
      }
      if (std::adjacent_find(times.begin(), times.end()) != times.end()) return 0;
      return Rational(BigInt(1), binomial(t, k));
    }
    case ClassicKind::Leq1: {
      for (unsigned s : times) {
        if (s > t) throw ArgumentError("arrival time past t");
      }
      BigInt denominator_product = 1;
      std::vector<unsigned> ties(t + 1, 0);
      for (unsigned s : times) ++ties[s];
      for (unsigned j : ties) denominator_product *= factorial(j);
      return Rational(factorial(k), denominator_product) *
             pow(Rational(BigInt(1), BigInt(t + 1)), k);
    }
    case ClassicKind::Leq2: {
      for (unsigned s : times) {
        if (s > t) throw ArgumentError("arrival time past t");
      }
      return Rational(BigInt(1), binomial(t + k, k));
    }
  }
  throw ArgumentError("unknown classic kind");
}

namespace {

std::vector<JumpPath> paths_of(const FiniteProcess& p) {
  std::vector<JumpPath> out;
  for (const auto& [path, mass] : p.joint()) out.push_back(path);
  return out;
}

std::vector<Rational> masses_of(const FiniteProcess& p) {
  std::vector<Rational> out;
  for (const auto& [path, mass] : p.joint()) out.push_back(mass);
  return out;
}

}  // namespace

PathSampler::PathSampler(const FiniteProcess& p) : paths_(paths_of(p)), pick_(masses_of(p)) {}

const JumpPath& PathSampler::operator()(Rng& rng) const { return paths_[pick_(rng)]; }

JumpPath sample_path(const FiniteProcess& p, Rng& rng) { return PathSampler(p)(rng); }

}  // namespace eom::process
