// eomctl: build, transform, sample and verify exchangeable occupancy models.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or contract error.

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "eom/errors.hpp"
#include "eom/json_io.hpp"
#include "eom/process.hpp"
#include "eom/sampler.hpp"
#include "eom/transform.hpp"
#include "eom/verify.hpp"

namespace {

using eom::io::Json;

struct ModelFlags {
  std::string weight;
  unsigned n = 0;
  unsigned r = 0;

  void attach(CLI::App* cmd, bool required) {
    auto* w = cmd->add_option("--weight", weight, "mb, be, fd, pc:s or @file.json");
    auto* n_opt = cmd->add_option("--n", n, "number of cells");
    auto* r_opt = cmd->add_option("--r", r, "number of particles");
    if (required) {
      w->required();
      n_opt->required();
      r_opt->required();
    }
  }

  eom::OccupancyDistribution build() const {
    if (weight.empty()) throw eom::ArgumentError("--weight is required");
    eom::WeightFunction a =
        weight.front() == '@'
            ? eom::io::weight_from_json(eom::io::read_json_file(weight.substr(1)), r)
            : eom::builtin_weight(weight, r);
    return eom::m_model(a, n, r);
  }
};

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw eom::ArgumentError("--format must be json or csv, got \"" + format + "\"");
  }
}

void print_occupancy(const eom::OccupancyDistribution& d, const std::string& format) {
  if (format == "csv") {
    eom::io::write_csv(std::cout, d);
  } else {
    emit(eom::io::to_json(d));
  }
}

int cmd_enumerate(unsigned n, unsigned r, const std::string& format) {
  check_format(format);
  auto all = eom::comb::enumerate_compositions(n, r);
  if (format == "csv") {
    for (unsigned j = 1; j <= n; ++j) std::cout << (j > 1 ? "," : "") << 'x' << j;
    std::cout << '\n';
    for (const auto& x : all) {
      for (unsigned j = 0; j < n; ++j) std::cout << (j > 0 ? "," : "") << x[j];
      std::cout << '\n';
    }
    return 0;
  }
  Json entries = Json::array();
  for (const auto& x : all) entries.push_back(x.counts());
  emit(Json{{"kind", "compositions"},
            {"n", n},
            {"r", r},
            {"count", all.size()},
            {"entries", std::move(entries)}});
  return 0;
}

struct ModelView {
  bool labels = false;
  bool order_stats = false;
  std::optional<unsigned> marginal;
};

int cmd_model(const ModelFlags& flags, const ModelView& view, const std::string& format) {
  check_format(format);
  auto d = flags.build();
  if (view.labels + view.order_stats + view.marginal.has_value() > 1) {
    throw eom::ArgumentError("--labels, --order-stats and --marginal are exclusive");
  }
  if (view.labels || view.marginal) {
    auto ld = eom::label_distribution(d);
    if (view.marginal) ld = eom::label_marginal(ld, {*view.marginal});
    if (format == "csv") {
      eom::io::write_csv(std::cout, ld);
    } else {
      emit(eom::io::to_json(ld));
    }
    return 0;
  }
  if (view.order_stats) {
    auto law = eom::order_statistics_distribution(d);
    if (format == "csv") {
      eom::io::write_csv(std::cout, law, d.particles());
    } else {
      emit(eom::io::to_json(law, d.cells(), d.particles()));
    }
    return 0;
  }
  print_occupancy(d, format);
  return 0;
}

eom::OccupancyDistribution apply_op(const std::string& op,
                                    const eom::OccupancyDistribution& d) {
  if (op == "k1") return eom::transform::k1_drop_particle(d);
  if (op == "k2") return eom::transform::k2_erase_cell(d);
  if (op.rfind("cond:", 0) == 0) {
    auto body = op.substr(5);
    auto comma = body.find(',');
    if (comma == std::string::npos) {
      throw eom::ArgumentError("expected cond:n,s, got \"" + op + "\"");
    }
    try {
      std::size_t used_n = 0;
      std::size_t used_s = 0;
      unsigned long n = std::stoul(body.substr(0, comma), &used_n);
      unsigned long s = std::stoul(body.substr(comma + 1), &used_s);
      if (used_n != comma || used_s != body.size() - comma - 1) throw std::invalid_argument(op);
      return eom::transform::condition_on_partial_sum(d, n, s);
    } catch (const std::logic_error&) {
      throw eom::ArgumentError("expected cond:n,s, got \"" + op + "\"");
    }
  }
  throw eom::ArgumentError("unknown --op \"" + op + "\" (expected k1, k2 or cond:n,s)");
}

int cmd_transform(const std::string& op, const std::string& input, const ModelFlags& flags,
                  const std::string& format) {
  check_format(format);
  auto d = input.empty() ? flags.build()
                         : eom::io::occupancy_from_json(eom::io::read_json_file(input));
  print_occupancy(apply_op(op, d), format);
  return 0;
}

int cmd_verify(const std::string& suite, const eom::verify::Options& options) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = eom::verify::suite_names();
  } else {
    suites = {suite};
  }
  bool passed = true;
  Json reports = Json::array();
  for (const auto& name : suites) {
    auto report = eom::verify::run_suite(name, options);
    passed = passed && report.passed();
    reports.push_back(eom::verify::to_json(report, options));
  }
  emit(suite == "all" ? reports : reports.front());
  return passed ? 0 : 1;
}

int cmd_sample(const std::string& spec, const ModelFlags& flags, std::size_t count,
               std::uint64_t seed) {
  eom::Rng rng(seed);
  if (!spec.empty()) {
    auto parsed = eom::io::process_spec_from_json(eom::io::read_json_file(spec));
    auto p = eom::process::build_process(parsed.weight, parsed.horizon, parsed.terminal_law);
    eom::process::PathSampler draw(p);
    for (unsigned t = 0; t <= p.horizon(); ++t) std::cout << (t > 0 ? "," : "") << 'j' << t;
    std::cout << '\n';
    for (std::size_t i = 0; i < count; ++i) {
      const auto& path = draw(rng);
      for (std::size_t t = 0; t < path.size(); ++t) std::cout << (t > 0 ? "," : "") << path[t];
      std::cout << '\n';
    }
    return 0;
  }
  auto d = flags.build();
  eom::OccupancySampler draw(d);
  for (unsigned j = 1; j <= d.cells(); ++j) std::cout << (j > 1 ? "," : "") << 'x' << j;
  std::cout << '\n';
  for (std::size_t i = 0; i < count; ++i) {
    auto x = draw(rng);
    for (unsigned j = 0; j < d.cells(); ++j) std::cout << (j > 0 ? "," : "") << x[j];
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exchangeable occupancy models and mixed geometric processes"};
  app.require_subcommand(1);

  std::string format = "json";

  auto* enumerate = app.add_subcommand("enumerate", "list A(n,r) in lexicographic order");
  unsigned en = 0;
  unsigned er = 0;
  enumerate->add_option("--n", en, "number of cells")->required();
  enumerate->add_option("--r", er, "number of particles")->required();
  enumerate->add_option("--format", format, "json or csv");

  auto* model = app.add_subcommand("model", "print an M^(a) model or derived law");
  ModelFlags model_flags;
  model_flags.attach(model, true);
  ModelView view;
  unsigned marginal = 0;
  model->add_flag("--labels", view.labels, "label law instead of occupancy law");
  model->add_flag("--order-stats", view.order_stats, "law of the sorted labels");
  auto* marginal_opt = model->add_option("--marginal", marginal, "univariate label marginal (1-based)");
  model->add_option("--format", format, "json or csv");

  auto* transform = app.add_subcommand("transform", "apply K1, K2 or partial-sum conditioning");
  std::string op;
  std::string input;
  ModelFlags transform_flags;
  transform->add_option("--op", op, "k1, k2 or cond:n,s")->required();
  transform->add_option("--input", input, "occupancy JSON document, - for stdin");
  transform_flags.attach(transform, false);
  transform->add_option("--format", format, "json or csv");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  eom::verify::Options options;
  verify->add_option("--suite", suite, "eom, transforms, theorem, classic or all")->required();
  verify->add_option("--seed", options.seed, "random model seed");
  verify->add_option("--max-n", options.max_n, "largest number of cells");
  verify->add_option("--max-r", options.max_r, "largest number of particles");
  verify->add_option("--horizon", options.horizon, "largest process horizon");
  verify->add_option("--random-models", options.random_models, "random models per shape");

  auto* sample = app.add_subcommand("sample", "draw process paths or occupancy vectors");
  std::string spec;
  ModelFlags sample_flags;
  std::size_t count = 0;
  std::uint64_t seed = 7;
  sample->add_option("--spec", spec, "process specification JSON");
  sample_flags.attach(sample, false);
  auto* paths_opt = sample->add_option("--paths", count, "number of paths to draw");
  auto* draws_opt = sample->add_option("--draws", count, "number of occupancy vectors");
  paths_opt->excludes(draws_opt);
  sample->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(en, er, format);
    if (*model) {
      if (*marginal_opt) view.marginal = marginal;
      return cmd_model(model_flags, view, format);
    }
    if (*transform) return cmd_transform(op, input, transform_flags, format);
    if (*verify) return cmd_verify(suite, options);
    if (*sample) {
      if (spec.empty() && *paths_opt) throw eom::ArgumentError("--paths needs --spec");
      if (!spec.empty() && *draws_opt) throw eom::ArgumentError("--draws needs model flags");
      return cmd_sample(spec, sample_flags, count, seed);
    }
  } catch (const eom::Error& e) {
    std::cerr << "eomctl: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "eomctl: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
