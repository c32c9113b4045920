#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "eom/comb.hpp"
#include "eom/occupancy.hpp"
#include "eom/rational.hpp"

namespace eom {

using Rng = std::mt19937_64;

/// Exact cumulative-inversion sampler over a finite list of rational masses.
///
/// Masses are brought to a common denominator L; a draw picks a uniform
/// integer in [0, L) by rejection on 64-bit words, then returns the first
/// index whose cumulative integer mass exceeds it. No floating point is
/// involved, so the drawn law is exactly the given one.
class ExactSampler {
 public:
  explicit ExactSampler(const std::vector<Rational>& masses);

  std::size_t operator()(Rng& rng) const;

 private:
  BigInt uniform_below(Rng& rng) const;

  std::vector<BigInt> cumulative_;
  BigInt total_;
  unsigned bits_ = 0;
};

/// Reusable sampler for one occupancy model; walks the support in
/// lexicographic order.
class OccupancySampler {
 public:
  explicit OccupancySampler(const OccupancyDistribution& d);
  const comb::Composition& operator()(Rng& rng) const;

 private:
  std::vector<comb::Composition> support_;
  ExactSampler pick_;
};

/// One draw; builds the inversion table on every call.
comb::Composition sample(const OccupancyDistribution& d, Rng& rng);

}  // namespace eom
