#include "eom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "eom/errors.hpp"
#include "eom/process.hpp"
#include "eom/random_models.hpp"
#include "eom/transform.hpp"

namespace eom::verify {

using comb::Composition;

namespace {

const std::vector<std::string> kBuiltins = {"mb", "be", "fd", "pc:2", "pc:3"};

std::string shape(unsigned n, unsigned r) {
  return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

class Check {
 public:
  Check(std::string name, std::string description) {
    report_.name = std::move(name);
    report_.description = std::move(description);
  }

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.witness = witness();
    }
  }

  /// Runs body, turning library errors into a failure.
  void guard(const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, [&] { return where + ": " + e.what(); });
    }
  }

  CheckReport done() { return std::move(report_); }

 private:
  CheckReport report_;
};

struct Model {
  std::string label;
  OccupancyDistribution d;
  std::optional<WeightFunction> weight;
};

/// Builtin product models where defined, plus random product models and
/// random exchangeable models for every n <= max_n, r <= max_r.
std::vector<Model> catalogue(const Options& options, Rng& rng, bool with_random_eoms) {
  std::vector<Model> out;
  for (unsigned n = 1; n <= options.max_n; ++n) {
    for (unsigned r = 0; r <= options.max_r; ++r) {
      for (const auto& name : kBuiltins) {
        auto a = builtin_weight(name, r);
        if (raw_normalization_constant(a, n, r) == 0) continue;
        out.push_back({name + shape(n, r), m_model(a, n, r), a});
      }
      for (unsigned i = 0; i < options.random_models; ++i) {
        auto a = random_weight(r, rng);
        out.push_back({"random-weight#" + std::to_string(i) + shape(n, r),
                       m_model(a, n, r), a});
      }
      if (!with_random_eoms) continue;
      for (unsigned i = 0; i < options.random_models; ++i) {
        out.push_back({"random-eom#" + std::to_string(i) + shape(n, r),
                       random_eom(n, r, rng), std::nullopt});
      }
    }
  }
  return out;
}

OrderStatisticsLaw sorted_label_law(const LabelDistribution& ld) {
  OrderStatisticsLaw law;
  const auto& masses = ld.masses();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i] == 0) continue;
    law[comb::label_at(ld.length(), ld.cells(), i).sorted()] += masses[i];
  }
  return law;
}

bool uniform_on_b(const OrderStatisticsLaw& law, unsigned n, unsigned r) {
  const BigInt size = comb::composition_count(n, r);
  if (law.size() != size) return false;
  const Rational expected(BigInt(1), size);
  return std::all_of(law.begin(), law.end(),
                     [&](const auto& entry) { return entry.second == expected; });
}

// ---------------------------------------------------------------- eom suite

SuiteReport eom_suite(const Options& options) {
  Rng rng(options.seed);
  auto models = catalogue(options, rng, true);
  SuiteReport suite{"eom", {}};

  {
    Check check("product-models-exchangeable",
                "every product-form model is invariant under cell permutations");
    for (const auto& m : models) {
      if (!m.weight) continue;
      check.expect(is_exchangeable(m.d), [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("label-occupancy-correspondence",
                "label law and occupancy law determine each other exactly");
    for (const auto& m : models) {
      check.guard(m.label, [&] {
        check.expect(occupancy_from_labels(label_distribution(m.d)) == m.d,
                     [&] { return m.label; });
      });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("uniform-label-marginals",
                "each label of an exchangeable model is uniform on the cells");
    for (const auto& m : models) {
      if (m.d.particles() == 0) continue;
      auto ld = label_distribution(m.d);
      const Rational expected(1, m.d.cells());
      for (unsigned i = 1; i <= m.d.particles(); ++i) {
        auto marginal = label_marginal(ld, {i});
        bool uniform = std::all_of(marginal.masses().begin(), marginal.masses().end(),
                                   [&](const Rational& p) { return p == expected; });
        check.expect(uniform, [&] { return m.label + " label " + std::to_string(i); });
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("label-law-closed-forms",
                "MB labels are 1/n^r, BE labels prod x_j!/(n)_r, FD labels "
                "prod x_j!/n^(r)");
    for (unsigned n = 1; n <= options.max_n; ++n) {
      for (unsigned r = 0; r <= options.max_r; ++r) {
        for (const char* name : {"mb", "be", "fd"}) {
          auto a = builtin_weight(name, r);
          if (raw_normalization_constant(a, n, r) == 0) continue;
          auto ld = label_distribution(m_model(a, n, r));
          for (const auto& y : comb::enumerate_labels(r, n)) {
            auto x = comb::tilde_phi(y);
            Rational closed;
            BigInt factorials = 1;
            for (unsigned v : x.counts()) factorials *= factorial(v);
            if (std::string(name) == "mb") {
              closed = Rational(BigInt(1), boost::multiprecision::pow(BigInt(n), r));
            } else if (std::string(name) == "be") {
              closed = Rational(factorials, rising_factorial(n, r));
            } else {
              bool distinct = std::all_of(x.counts().begin(), x.counts().end(),
                                          [](unsigned v) { return v <= 1; });
              closed = distinct ? Rational(factorials, falling_factorial(n, r))
                                : Rational(0);
            }
            check.expect(ld.probability(y) == closed,
                         [&] { return std::string(name) + shape(n, r); });
          }
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("order-statistics-correspondence",
                "the law of psi(X) is the law of the sorted label vector");
    for (const auto& m : models) {
      auto direct = order_statistics_distribution(m.d);
      auto sorted = sorted_label_law(label_distribution(m.d));
      check.expect(direct == sorted, [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("uniform-transfer",
                "X is uniform on A(n,r) iff its order statistics are uniform on "
                "B(r,n)");
    for (const auto& m : models) {
      const unsigned n = m.d.cells();
      const unsigned r = m.d.particles();
      bool uniform_a = m.d == OccupancyDistribution::uniform(n, r);
      bool uniform_b = uniform_on_b(order_statistics_distribution(m.d), n, r);
      check.expect(uniform_a == uniform_b, [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("label-density-formula",
                "closed-form label density of product models matches the "
                "label law");
    for (const auto& m : models) {
      if (!m.weight) continue;
      const unsigned n = m.d.cells();
      const unsigned r = m.d.particles();
      auto ld = label_distribution(m.d);
      for (const auto& y : comb::enumerate_labels(r, n)) {
        check.expect(m_model_label_density(*m.weight, n, r, y) == ld.probability(y),
                     [&] { return m.label; });
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("sufficiency",
                "conditioning i.i.d. weights on their sum gives the product "
                "model and ignores the mixing law");
    const std::vector<MixingSpec> mixes = {
        MixingSpec({{Rational(1, 2), Rational(1)}}),
        MixingSpec({{Rational(1, 3), Rational(1, 4)}, {Rational(4, 5), Rational(3, 4)}}),
        MixingSpec({{Rational(1, 7), Rational(1, 3)},
                    {Rational(1, 2), Rational(1, 3)},
                    {Rational(9, 10), Rational(1, 3)}}),
    };
    for (const auto& m : models) {
      if (!m.weight) continue;
      const unsigned n = m.d.cells();
      const unsigned r = m.d.particles();
      const auto& q = m.weight->values();
      check.guard(m.label, [&] {
        auto plain = conditional_from_iid(q, std::nullopt, n, r);
        check.expect(plain == m.d, [&] { return m.label + " without mixing"; });
        for (const auto& mix : mixes) {
          check.expect(conditional_from_iid(q, mix, n, r) == plain,
                       [&] { return m.label + " under a mixing law"; });
        }
      });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("classical-models-from-iid",
                "Poisson, geometric, Bernoulli and negative binomial weights "
                "conditioned on their sum give MB, BE, FD and pseudo-contagious");
    const Rational lambda(3, 2);
    const Rational p(2, 5);
    for (unsigned n = 1; n <= options.max_n; ++n) {
      for (unsigned r = 0; r <= options.max_r; ++r) {
        std::vector<Rational> poisson(r + 1), geometric(r + 1), bernoulli(r + 1, Rational(0));
        bernoulli[0] = 1 - p;
        if (r >= 1) bernoulli[1] = p;
        for (unsigned x = 0; x <= r; ++x) {
          poisson[x] = pow(lambda, x) / Rational(factorial(x));
          geometric[x] = (1 - p) * pow(p, x);
        }
        std::vector<std::pair<std::string, std::vector<Rational>>> cases = {
            {"mb", poisson}, {"be", geometric}, {"fd", bernoulli}};
        for (unsigned s : {2u, 3u}) {
          std::vector<Rational> negbin(r + 1);
          for (unsigned x = 0; x <= r; ++x) {
            negbin[x] = Rational(binomial(s + x - 1, x)) * pow(p, x);
          }
          cases.emplace_back("pc:" + std::to_string(s), negbin);
        }
        for (const auto& [name, q] : cases) {
          auto a = builtin_weight(name, r);
          if (raw_normalization_constant(a, n, r) == 0) continue;
          check.guard(name + shape(n, r), [&] {
            check.expect(conditional_from_iid(q, std::nullopt, n, r) == m_model(a, n, r),
                         [&] { return name + shape(n, r); });
          });
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  return suite;
}

// --------------------------------------------------------- transforms suite

SuiteReport transforms_suite(const Options& options) {
  Rng rng(options.seed);
  auto models = catalogue(options, rng, true);
  SuiteReport suite{"transforms", {}};

  {
    Check check("conditioning-keeps-exchangeability",
                "conditioning an exchangeable model on a partial sum is "
                "exchangeable");
    for (const auto& m : models) {
      const unsigned big_n = m.d.cells();
      for (unsigned n = 1; n < big_n; ++n) {
        for (unsigned s = 0; s <= m.d.particles(); ++s) {
          try {
            auto c = transform::condition_on_partial_sum(m.d, n, s);
            check.expect(is_exchangeable(c), [&] {
              return m.label + " given S_" + std::to_string(n) + "=" + std::to_string(s);
            });
          } catch (const ConditioningError&) {
          }
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("k1-keeps-exchangeability",
                "dropping a random particle maps exchangeable models to "
                "exchangeable models");
    for (const auto& m : models) {
      if (m.d.particles() == 0) continue;
      check.expect(is_exchangeable(transform::k1_drop_particle(m.d)),
                   [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("k2-keeps-exchangeability",
                "erasing a cell and scattering its particles keeps "
                "exchangeability");
    for (const auto& m : models) {
      if (m.d.cells() < 2) continue;
      check.expect(is_exchangeable(transform::k2_erase_cell(m.d)),
                   [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("conditioning-keeps-product-form",
                "a product model conditioned on a partial sum is the product "
                "model with the same weights");
    for (const auto& m : models) {
      if (!m.weight) continue;
      for (unsigned n = 1; n < m.d.cells(); ++n) {
        for (unsigned s = 0; s <= m.d.particles(); ++s) {
          if (raw_normalization_constant(*m.weight, n, s) == 0 ||
              raw_normalization_constant(*m.weight, m.d.cells() - n,
                                         m.d.particles() - s) == 0) {
            continue;
          }
          check.guard(m.label, [&] {
            check.expect(transform::condition_on_partial_sum(m.d, n, s) ==
                             m_model(*m.weight, n, s),
                         [&] {
                           return m.label + " given S_" + std::to_string(n) + "=" +
                                  std::to_string(s);
                         });
          });
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("k1-keeps-product-form-under-condition",
                "when the weight condition holds, dropping a particle gives the "
                "product model with one particle fewer");
    for (const auto& m : models) {
      if (!m.weight || m.d.particles() == 0) continue;
      const unsigned n = m.d.cells();
      const unsigned r = m.d.particles();
      if (raw_normalization_constant(*m.weight, n, r - 1) == 0) continue;
      if (!transform::check_cond_eom(*m.weight, n, r).holds) continue;
      check.expect(transform::k1_drop_particle(m.d) == m_model(*m.weight, n, r - 1),
                   [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("weight-condition-builtins",
                "MB, BE, FD and pseudo-contagious weights satisfy the K1 "
                "weight condition");
    for (const auto& name : kBuiltins) {
      for (unsigned n = 1; n <= options.max_n; ++n) {
        for (unsigned r = 1; r <= options.max_r; ++r) {
          auto a = builtin_weight(name, r);
          if (raw_normalization_constant(a, n, r) == 0) continue;
          auto result = transform::check_cond_eom(a, n, r);
          check.expect(result.holds, [&] { return name + shape(n, r); });
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("weight-condition-counterexample",
                "the weights (1, 1, 5) violate the K1 weight condition for some "
                "small (n, r), with a witness composition");
    WeightFunction a({Rational(1), Rational(1), Rational(5), Rational(1), Rational(1)});
    std::optional<std::string> found;
    for (unsigned n = 2; n <= std::max(options.max_n, 3u) && !found; ++n) {
      for (unsigned r = 1; r <= 4 && !found; ++r) {
        auto result = transform::check_cond_eom(a, n, r);
        if (result.holds) continue;
        if (!result.witness) continue;
        std::string where = shape(n, r) + " at x' = (";
        for (unsigned j = 0; j < n; ++j) {
          where += (j > 0 ? "," : "") + std::to_string((*result.witness)[j]);
        }
        found = where + ")";
      }
    }
    check.expect(found.has_value(), [] { return std::string("condition holds everywhere"); });
    auto report = check.done();
    if (found) report.witness = *found;
    suite.checks.push_back(std::move(report));
  }
  {
    Check check("dropped-particle-label-marginal",
                "labels after dropping a particle are the (r-1)-dimensional "
                "label marginal");
    for (const auto& m : models) {
      const unsigned n = m.d.cells();
      const unsigned r = m.d.particles();
      if (r == 0 || n > 3) continue;
      std::set<unsigned> head;
      for (unsigned i = 1; i < r; ++i) head.insert(i);
      auto dropped = label_distribution(transform::k1_drop_particle(m.d));
      if (head.empty()) {
        check.expect(dropped.masses().size() == 1 && dropped.masses()[0] == 1,
                     [&] { return m.label; });
        continue;
      }
      check.expect(dropped == label_marginal(label_distribution(m.d), head),
                   [&] { return m.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("strict-containment",
                "some K1 or K2 image of a product model is exchangeable but "
                "not of product form");
    bool found = false;
    std::string example;
    for (unsigned n = 2; n <= std::max(options.max_n, 5u) && !found; ++n) {
      for (unsigned r = 1; r <= std::max(options.max_r, 4u) && !found; ++r) {
        for (const auto& name : kBuiltins) {
          auto a = builtin_weight(name, r);
          if (raw_normalization_constant(a, n, r) == 0) continue;
          auto base = m_model(a, n, r);
          auto image = transform::k2_erase_cell(base);
          if (!transform::fit_product_form(image).product_form) {
            found = true;
            example = "K2 image of " + name + shape(n, r);
            break;
          }
          image = transform::k1_drop_particle(base);
          if (!transform::fit_product_form(image).product_form) {
            found = true;
            example = "K1 image of " + name + shape(n, r);
            break;
          }
        }
      }
    }
    check.expect(found, [] { return std::string("no instance found"); });
    auto report = check.done();
    if (found) report.witness = example;
    suite.checks.push_back(std::move(report));
  }
  return suite;
}

// ------------------------------------------------------------ theorem suite

struct ProcessCase {
  std::string label;
  process::FiniteProcess p;
};

std::vector<Rational> truncated_geometric(unsigned size) {
  std::vector<Rational> law(size);
  Rational total = 0;
  for (unsigned k = 0; k < size; ++k) total += (law[k] = pow(Rational(1, 2), k));
  for (auto& v : law) v /= total;
  return law;
}

std::vector<ProcessCase> process_cases(const Options& options, Rng& rng) {
  std::vector<ProcessCase> out;
  const unsigned random_weights = std::max(5u, options.random_models / 4);
  for (unsigned horizon = 0; horizon <= options.horizon; ++horizon) {
    std::vector<std::pair<std::string, WeightFunction>> weights;
    const unsigned cap = std::min(5u, options.max_r + 1);
    for (const auto& name : kBuiltins) weights.emplace_back(name, builtin_weight(name, cap));
    for (unsigned i = 0; i < random_weights; ++i) {
      weights.emplace_back("random-weight#" + std::to_string(i), random_weight(cap, rng));
    }
    for (const auto& [name, a] : weights) {
      // FD supports at most one arrival per time.
      unsigned k_max = name == "fd" ? std::min(cap, horizon + 1) : cap;
      std::vector<std::pair<std::string, std::vector<Rational>>> laws = {
          {"uniform", std::vector<Rational>(k_max + 1, Rational(1, k_max + 1))},
          {"geometric", truncated_geometric(k_max + 1)},
          {"random", random_law(k_max + 1, rng)},
      };
      for (auto& [law_name, law] : laws) {
        out.push_back({name + "/M=" + std::to_string(horizon) + "/" + law_name,
                       process::build_process(a, horizon, law)});
      }
    }
  }
  return out;
}

/// Moves half of the smaller mass between two paths with the same total.
std::optional<process::FiniteProcess> mutate(const process::FiniteProcess& p) {
  const auto& joint = p.joint();
  for (auto first = joint.begin(); first != joint.end(); ++first) {
    unsigned total = 0;
    for (unsigned j : first->first) total += j;
    for (auto second = std::next(first); second != joint.end(); ++second) {
      unsigned other = 0;
      for (unsigned j : second->first) other += j;
      if (other != total) continue;
      auto perturbed = joint;
      Rational eps = std::min(first->second, second->second) / 2;
      perturbed[first->first] -= eps;
      perturbed[second->first] += eps;
      return process::FiniteProcess::from_joint(p.weight(), p.horizon(),
                                                std::move(perturbed));
    }
  }
  return std::nullopt;
}

SuiteReport theorem_suite(const Options& options) {
  Rng rng(options.seed);
  auto cases = process_cases(options, rng);
  SuiteReport suite{"theorem", {}};

  {
    Check check("characterization-equivalences",
                "conditional product law, density factorization, inter-arrival "
                "and arrival formulas all hold with one R table");
    for (const auto& c : cases) {
      auto report = process::check_theorem_equivalences(c.p);
      check.expect(report.ok(), [&] {
        for (const auto* part : {&report.uosp, &report.mixed_geometric,
                                 &report.interarrival, &report.arrival,
                                 &report.r_consistency}) {
          if (!part->ok) return c.label + ": " + part->witness;
        }
        return c.label;
      });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("verifier-detects-mutation",
                "moving mass between two paths with equal totals breaks the "
                "characterization checks");
    for (const auto& c : cases) {
      auto broken = mutate(c.p);
      if (!broken) continue;
      auto report = process::check_theorem_equivalences(*broken);
      check.expect(!report.uosp.ok && !report.ok(), [&] { return c.label; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("marginal-consistency",
                "the density at time t-1 is the sum of the time-t densities");
    for (const auto& c : cases) {
      for (unsigned t = 1; t <= c.p.horizon(); ++t) {
        std::map<process::JumpPath, Rational> summed;
        for (const auto& [path, mass] : c.p.marginal(t)) {
          summed[process::JumpPath(path.begin(), path.end() - 1)] += mass;
        }
        for (const auto& [prefix, mass] : summed) {
          check.expect(process::joint_jump_density(c.p, prefix) == mass,
                       [&] { return c.label + " t=" + std::to_string(t); });
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("markov-transitions",
                "a(i) R_{t+1}(k+i) / R_t(k) equals the enumerated transition "
                "probability");
    for (const auto& c : cases) {
      for (unsigned t = 0; t < c.p.horizon(); ++t) {
        auto counts = process::count_distribution(c.p, t);
        std::map<std::pair<unsigned, unsigned>, Rational> pair_mass;
        for (const auto& [path, mass] : c.p.marginal(t + 1)) {
          unsigned before = 0;
          for (unsigned h = 0; h < t + 1; ++h) before += path[h];
          pair_mass[{before, before + path[t + 1]}] += mass;
        }
        for (unsigned k = 0; k < counts.size(); ++k) {
          if (counts[k] == 0) continue;
          Rational row = 0;
          for (unsigned i = 0; k + i <= c.p.count_cap(); ++i) {
            Rational direct = pair_mass[{k, k + i}] / counts[k];
            Rational formula = process::transition_probability(c.p, t, k, i);
            row += formula;
            check.expect(direct == formula, [&] {
              return c.label + " t=" + std::to_string(t) + " k=" + std::to_string(k) +
                     " i=" + std::to_string(i);
            });
          }
          check.expect(row == 1, [&] { return c.label + " row sum"; });
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("r-recursion", "R_{t-1}(k) = sum_l a(l) R_t(k+l)");
    for (const auto& c : cases) {
      auto outcome = process::r_recursion_check(c.p);
      check.expect(outcome.ok, [&] { return c.label + ": " + outcome.witness; });
    }
    suite.checks.push_back(check.done());
  }
  {
    Check check("empty-count-identity",
                "P{N_t = 0} = a(0)^(t+1) R_t(0), which is R_t(0) when a(0) = 1");
    for (const auto& c : cases) {
      for (unsigned t = 0; t <= c.p.horizon(); ++t) {
        auto r0 = process::r_function(c.p, t, 0);
        process::JumpPath zeros(t + 1, 0);
        const Rational scale = pow(c.p.weight()(0), t + 1);
        const Rational empty = process::count_distribution(c.p, t)[0];
        check.expect(r0 && scale * *r0 == empty &&
                         empty == process::joint_jump_density(c.p, zeros),
                     [&] { return c.label + " t=" + std::to_string(t); });
      }
    }
    suite.checks.push_back(check.done());
  }
  return suite;
}

// ------------------------------------------------------------ classic suite

SuiteReport classic_suite(const Options& options) {
  SuiteReport suite{"classic", {}};
  struct Recovery {
    const char* weight;
    const char* name;
    const char* description;
  };
  const Recovery recoveries[] = {
      {"fd", "fd-recovers-unit-jump-law",
       "FD conditionals over c cells equal 1/binom(c, k)"},
      {"mb", "mb-recovers-multinomial-law",
       "MB conditionals equal k!/(j_0!...j_t!) (1/(t+1))^k"},
      {"be", "be-recovers-uniform-tuple-law", "BE conditionals equal 1/binom(t+k, k)"},
  };
  for (const auto& rec : recoveries) {
    Check check(rec.name, rec.description);
    for (unsigned horizon = 0; horizon <= options.horizon; ++horizon) {
      const std::string weight_name = rec.weight;
      const unsigned cap = weight_name == "fd" ? horizon + 1 : options.max_r + 1;
      auto a = builtin_weight(weight_name, cap);
      auto p = process::build_process(
          a, horizon, std::vector<Rational>(cap + 1, Rational(1, cap + 1)));
      for (unsigned t = 0; t <= horizon; ++t) {
        auto counts = process::count_distribution(p, t);
        for (unsigned k = 0; k < counts.size(); ++k) {
          if (counts[k] == 0) continue;
          auto conditional = process::conditional_jumps_given_count(p, t, k);
          for (const auto& x : comb::enumerate_compositions(t + 1, k)) {
            auto times = process::arrival_times(x.counts());
            Rational expected;
            if (weight_name == "fd") {
              for (auto& s : times) ++s;  // unit-jump times live in 1..cells
              expected = process::classic_uosp_value(process::ClassicKind::Strict,
                                                     t + 1, k, times);
            } else if (weight_name == "mb") {
              expected = process::classic_uosp_value(process::ClassicKind::Leq1, t, k,
                                                     times);
            } else {
              expected = process::classic_uosp_value(process::ClassicKind::Leq2, t, k,
                                                     times);
            }
            check.expect(conditional.probability(x) == expected, [&] {
              return weight_name + " M=" + std::to_string(horizon) +
                     " t=" + std::to_string(t) + " k=" + std::to_string(k);
            });
          }
        }
      }
    }
    suite.checks.push_back(check.done());
  }
  return suite;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.passed; });
}

std::vector<std::string> suite_names() { return {"eom", "transforms", "theorem", "classic"}; }

SuiteReport run_suite(std::string_view suite, const Options& options) {
  if (suite == "eom") return eom_suite(options);
  if (suite == "transforms") return transforms_suite(options);
  if (suite == "theorem") return theorem_suite(options);
  if (suite == "classic") return classic_suite(options);
  throw ArgumentError("unknown suite \"" + std::string(suite) +
                      "\" (expected eom, transforms, theorem or classic)");
}

io::Json to_json(const SuiteReport& report, const Options& options) {
  io::Json checks = io::Json::array();
  for (const auto& c : report.checks) {
    io::Json entry{{"name", c.name},
                   {"description", c.description},
                   {"status", c.passed ? "pass" : "fail"},
                   {"cases", c.cases}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return io::Json{{"suite", report.suite},
                  {"seed", options.seed},
                  {"max_n", options.max_n},
                  {"max_r", options.max_r},
                  {"horizon", options.horizon},
                  {"passed", report.passed()},
                  {"checks", std::move(checks)}};
}

}  // namespace eom::verify
