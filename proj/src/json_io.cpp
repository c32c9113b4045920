#include "eom/json_io.hpp"

#include <fstream>
#include <iostream>

#include "eom/errors.hpp"

namespace eom::io {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ArgumentError(std::string("document is missing \"") + key + "\"");
  }
  return doc.at(key);
}

unsigned unsigned_from_json(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ArgumentError(std::string(what) + " must be a nonnegative integer");
  }
  return value.get<unsigned>();
}

void check_kind(const Json& doc, const char* expected) {
  if (doc.contains("kind") && doc.at("kind") != expected) {
    throw ArgumentError(std::string("expected a document of kind \"") + expected +
                        "\", got " + doc.at("kind").dump());
  }
}

/// Splits an entry [v_1, ..., v_m, "p"] into its integer prefix and mass.
std::pair<std::vector<unsigned>, Rational> split_entry(const Json& entry,
                                                       std::size_t width) {
  if (!entry.is_array() || entry.size() != width + 1) {
    throw ArgumentError("entry " + entry.dump() + " should have " +
                        std::to_string(width) + " integers and a probability");
  }
  std::vector<unsigned> head;
  head.reserve(width);
  for (std::size_t i = 0; i < width; ++i) head.push_back(unsigned_from_json(entry[i], "entry"));
  return {std::move(head), rational_from_json(entry[width])};
}

template <typename Row>
void write_row(std::ostream& out, const Row& values, const Rational& p) {
  for (unsigned v : values) out << v << ',';
  out << to_string(p) << '\n';
}

void write_header(std::ostream& out, const char* prefix, unsigned width) {
  for (unsigned i = 1; i <= width; ++i) out << prefix << i << ',';
  out << "p\n";
}

}  // namespace

Json to_json(const OccupancyDistribution& d) {
  Json entries = Json::array();
  for (const auto& [x, p] : d.table()) {
    Json row(x.counts());
    row.push_back(to_string(p));
    entries.push_back(std::move(row));
  }
  return Json{{"kind", "occupancy"}, {"n", d.cells()}, {"r", d.particles()},
              {"entries", std::move(entries)}};
}

Json to_json(const LabelDistribution& ld) {
  Json entries = Json::array();
  const auto& masses = ld.masses();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i] == 0) continue;
    Json row(comb::label_at(ld.length(), ld.cells(), i).labels());
    row.push_back(to_string(masses[i]));
    entries.push_back(std::move(row));
  }
  return Json{{"kind", "labels"}, {"n", ld.cells()}, {"r", ld.length()},
              {"entries", std::move(entries)}};
}

Json to_json(const OrderStatisticsLaw& law, unsigned n, unsigned r) {
  Json entries = Json::array();
  for (const auto& [u, p] : law) {
    Json row(u.labels());
    row.push_back(to_string(p));
    entries.push_back(std::move(row));
  }
  return Json{{"kind", "order_statistics"}, {"n", n}, {"r", r},
              {"entries", std::move(entries)}};
}

Json to_json(const WeightFunction& a) {
  Json values = Json::array();
  for (const auto& v : a.values()) values.push_back(to_string(v));
  Json doc{{"kind", "weight"}, {"values", std::move(values)}};
  if (a.tag()) doc["tag"] = *a.tag();
  return doc;
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ArgumentError("expected an exact rational (\"num/den\" or integer), got " +
                      value.dump());
}

OccupancyDistribution occupancy_from_json(const Json& doc) {
  check_kind(doc, "occupancy");
  const unsigned n = unsigned_from_json(require(doc, "n"), "n");
  const unsigned r = unsigned_from_json(require(doc, "r"), "r");
  OccupancyDistribution::Table table;
  for (const auto& entry : require(doc, "entries")) {
    auto [counts, p] = split_entry(entry, n);
    auto [it, fresh] = table.emplace(comb::Composition(std::move(counts)), p);
    if (!fresh) throw ArgumentError("duplicate entry " + entry.dump());
  }
  return OccupancyDistribution::from_table(n, r, std::move(table));
}

LabelDistribution labels_from_json(const Json& doc) {
  check_kind(doc, "labels");
  const unsigned n = unsigned_from_json(require(doc, "n"), "n");
  const unsigned r = unsigned_from_json(require(doc, "r"), "r");
  if (n == 0) throw ArgumentError("label law needs n >= 1");
  std::vector<Rational> masses(
      boost::multiprecision::pow(BigInt(n), r).convert_to<std::size_t>(), Rational(0));
  for (const auto& entry : require(doc, "entries")) {
    auto [labels, p] = split_entry(entry, r);
    masses[comb::label_index(comb::LabelVector(n, std::move(labels)))] += p;
  }
  return LabelDistribution::from_dense(r, n, std::move(masses));
}

WeightFunction weight_from_json(const Json& value, unsigned x_max) {
  if (value.is_string()) return builtin_weight(value.get<std::string>(), x_max);
  const Json& table = value.is_object() ? require(value, "values") : value;
  if (!table.is_array()) {
    throw ArgumentError("weight must be a builtin name or an array of rationals");
  }
  std::vector<Rational> values;
  for (const auto& v : table) values.push_back(rational_from_json(v));
  std::optional<std::string> tag;
  if (value.is_object() && value.contains("tag")) tag = value.at("tag").get<std::string>();
  return WeightFunction(std::move(values), std::move(tag));
}

ProcessSpec process_spec_from_json(const Json& doc) {
  const unsigned horizon = unsigned_from_json(require(doc, "horizon"), "horizon");
  std::vector<Rational> law;
  for (const auto& v : require(doc, "terminal_law")) law.push_back(rational_from_json(v));
  if (law.empty()) throw ArgumentError("terminal_law must be nonempty");
  auto cap = static_cast<unsigned>(law.size() - 1);
  return {weight_from_json(require(doc, "weight"), cap), horizon, std::move(law)};
}

void write_csv(std::ostream& out, const OccupancyDistribution& d) {
  write_header(out, "x", d.cells());
  for (const auto& [x, p] : d.table()) write_row(out, x.counts(), p);
}

void write_csv(std::ostream& out, const LabelDistribution& ld) {
  write_header(out, "y", ld.length());
  const auto& masses = ld.masses();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i] == 0) continue;
    write_row(out, comb::label_at(ld.length(), ld.cells(), i).labels(), masses[i]);
  }
}

void write_csv(std::ostream& out, const OrderStatisticsLaw& law, unsigned r) {
  write_header(out, "u", r);
  for (const auto& [u, p] : law) write_row(out, u.labels(), p);
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open \"" + path + "\"");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ArgumentError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

}  // namespace eom::io
