#include "eom/sampler.hpp"

#include <algorithm>

#include "eom/errors.hpp"

namespace eom {

namespace {

std::vector<Rational> masses_of(const OccupancyDistribution& d) {
  std::vector<Rational> out;
  out.reserve(d.table().size());
  for (const auto& [x, p] : d.table()) out.push_back(p);
  return out;
}

std::vector<comb::Composition> support_of(const OccupancyDistribution& d) {
  std::vector<comb::Composition> out;
  out.reserve(d.table().size());
  for (const auto& [x, p] : d.table()) out.push_back(x);
  return out;
}

}  // namespace

ExactSampler::ExactSampler(const std::vector<Rational>& masses) {
  if (masses.empty()) throw ArgumentError("sampler needs at least one outcome");
  BigInt common = 1;
  for (const auto& p : masses) {
    if (p < 0) throw ArgumentError("negative mass in sampler");
    common = boost::multiprecision::lcm(common, denominator(p));
  }
  cumulative_.reserve(masses.size());
  BigInt running = 0;
  for (const auto& p : masses) {
    running += numerator(p) * (common / denominator(p));
    cumulative_.push_back(running);
  }
  if (running == 0) throw ArgumentError("sampler masses sum to zero");
  total_ = running;
  bits_ = static_cast<unsigned>(msb(total_)) + 1;
}

BigInt ExactSampler::uniform_below(Rng& rng) const {
  for (;;) {
    BigInt candidate = 0;
    unsigned have = 0;
    while (have < bits_) {
      candidate <<= 64;
      candidate += rng();
      have += 64;
    }
    candidate >>= (have - bits_);
    if (candidate < total_) return candidate;
  }
}

std::size_t ExactSampler::operator()(Rng& rng) const {
  BigInt u = uniform_below(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

OccupancySampler::OccupancySampler(const OccupancyDistribution& d)
    : support_(support_of(d)), pick_(masses_of(d)) {}

const comb::Composition& OccupancySampler::operator()(Rng& rng) const {
  return support_[pick_(rng)];
}

comb::Composition sample(const OccupancyDistribution& d, Rng& rng) {
  return OccupancySampler(d)(rng);
}

}  // namespace eom
