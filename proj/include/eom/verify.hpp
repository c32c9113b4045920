#pragma once

// Exhaustive verification sweeps. Each suite runs a list of named checks over
// a matrix of models and reports pass/fail with the first failing instance.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eom/json_io.hpp"

namespace eom::verify {

struct Options {
  std::uint64_t seed = 7;
  unsigned max_n = 4;
  unsigned max_r = 4;
  unsigned horizon = 4;
  unsigned random_models = 20;
};

struct CheckReport {
  std::string name;
  std::string description;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckReport> checks;
  bool passed() const;
};

/// "eom", "transforms", "theorem" or "classic"; ArgumentError otherwise.
SuiteReport run_suite(std::string_view suite, const Options& options);

std::vector<std::string> suite_names();

io::Json to_json(const SuiteReport& report, const Options& options);

}  // namespace eom::verify
