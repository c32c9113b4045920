#pragma once

#include <string>

#include "eom/occupancy.hpp"
#include "eom/process.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Law as_law(const eom::OccupancyDistribution& d) {
  oracle::Law out;
  for (const auto& [x, p] : d.table()) out[x.counts()] = p;
  return out;
}

inline oracle::Law as_law(const eom::process::PathTable& table) {
  return oracle::Law(table.begin(), table.end());
}

inline eom::Rational q(const std::string& text) { return eom::parse_rational(text); }

}  // namespace support
