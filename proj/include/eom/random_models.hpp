#pragma once

// Seeded generators of test models. Draws use plain modular reduction of the
// 64-bit engine output so that sequences are identical across standard
// libraries.

#include <vector>

#include "eom/occupancy.hpp"
#include "eom/sampler.hpp"
#include "eom/weight.hpp"

namespace eom {

/// Random exchangeable model on A(n,r): a positive integer mass in [1, 20]
/// per permutation orbit, spread evenly over the orbit, then normalized.
/// Covers models outside the product-form class.
OccupancyDistribution random_eom(unsigned n, unsigned r, Rng& rng);

/// Random strictly positive weights p/q with p, q in [1, 9].
WeightFunction random_weight(unsigned x_max, Rng& rng);

/// Random law on {0..size-1} with positive integer masses in [1, 12].
std::vector<Rational> random_law(unsigned size, Rng& rng);

}  // namespace eom
