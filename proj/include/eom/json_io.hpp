#pragma once

// Canonical JSON and CSV forms. Probabilities and weights are always written
// as exact "num/den" strings; integers are accepted on input.
//
//   {"kind": "occupancy", "n": 2, "r": 2,
//    "entries": [[0, 2, "1/3"], [1, 1, "1/3"], [2, 0, "1/3"]]}
//
// Label and order-statistic documents use kinds "labels" and
// "order_statistics" with label tuples in place of counts. Only positive
// entries are written.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eom/occupancy.hpp"
#include "eom/process.hpp"
#include "eom/weight.hpp"

namespace eom::io {

using Json = nlohmann::ordered_json;

Json to_json(const OccupancyDistribution& d);
Json to_json(const LabelDistribution& ld);
Json to_json(const OrderStatisticsLaw& law, unsigned n, unsigned r);
Json to_json(const WeightFunction& a);

OccupancyDistribution occupancy_from_json(const Json& doc);
LabelDistribution labels_from_json(const Json& doc);

Rational rational_from_json(const Json& value);

/// Either a builtin name ("mb", "be", "fd", "pc:s"), tabulated up to x_max, or
/// an array of rationals, or {"values": [...]}.
WeightFunction weight_from_json(const Json& value, unsigned x_max);

struct ProcessSpec {
  WeightFunction weight;
  unsigned horizon;
  std::vector<Rational> terminal_law;
};

/// {"weight": "be" | [...], "horizon": M, "terminal_law": ["1/3", ...]}
ProcessSpec process_spec_from_json(const Json& doc);

/// Header x1..xn,p then one row per support element.
void write_csv(std::ostream& out, const OccupancyDistribution& d);
void write_csv(std::ostream& out, const LabelDistribution& ld);
void write_csv(std::ostream& out, const OrderStatisticsLaw& law, unsigned r);

Json read_json_file(const std::string& path);

}  // namespace eom::io
