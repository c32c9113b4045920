#include "eom/comb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "eom/errors.hpp"

namespace eom::comb {

namespace {

void check_budget(const BigInt& count, const std::string& space) {
  if (count > kEnumerationBudget) throw EnumerationTooLarge(space, count.str());
}

std::string space_name(const char* symbol, unsigned a, unsigned b) {
  return std::string(symbol) + "(" + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

}  // namespace

Composition::Composition(std::vector<unsigned> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), 0u)) {}

Composition Composition::canonical() const {
  auto sorted = counts_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return Composition(std::move(sorted));
}

OrderedLabels::OrderedLabels(unsigned n, std::vector<unsigned> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n_ == 0) throw ArgumentError("label space needs at least one cell");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1 || labels_[i] > n_) {
      throw ArgumentError("label " + std::to_string(labels_[i]) +
                          " outside [1, " + std::to_string(n_) + "]");
    }
    if (i > 0 && labels_[i - 1] > labels_[i]) {
      throw ArgumentError("ordered labels must be nondecreasing");
    }
  }
}

LabelVector::LabelVector(unsigned n, std::vector<unsigned> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n_ == 0) throw ArgumentError("label space needs at least one cell");
  for (unsigned y : labels_) {
    if (y < 1 || y > n_) {
      throw ArgumentError("label " + std::to_string(y) + " outside [1, " +
                          std::to_string(n_) + "]");
    }
  }
}

OrderedLabels LabelVector::sorted() const {
  auto copy = labels_;
  std::sort(copy.begin(), copy.end());
  return OrderedLabels(n_, std::move(copy));
}

BigInt composition_count(unsigned n, unsigned r) {
  if (n == 0) throw ArgumentError("composition space needs n >= 1");
  return binomial(n + r - 1, n - 1);
}

std::vector<Composition> enumerate_compositions(unsigned n, unsigned r) {
  check_budget(composition_count(n, r), space_name("A", n, r));
  std::vector<Composition> out;
  out.reserve(composition_count(n, r).convert_to<std::size_t>());
  std::vector<unsigned> counts(n, 0);
  // Fill cell j with every feasible value in increasing order; the last cell
  // takes whatever is left, which yields lexicographic order.
  std::function<void(unsigned, unsigned)> fill = [&](unsigned j, unsigned left) {
    if (j + 1 == n) {
      counts[j] = left;
      out.emplace_back(counts);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      counts[j] = v;
      fill(j + 1, left - v);
    }
  };
  fill(0, r);
  return out;
}

std::vector<Composition> enumerate_binary_compositions(unsigned n, unsigned r) {
  if (n == 0) throw ArgumentError("composition space needs n >= 1");
  if (r > n) {
    throw EmptySupport("no 0/1 composition of " + std::to_string(r) +
                       " particles into " + std::to_string(n) + " cells");
  }
  check_budget(binomial(n, r), space_name("binary A", n, r));
  // Lexicographic order on 0/1 vectors: start from 0...01...1 and step with
  // next_permutation.
  std::vector<unsigned> counts(n, 0);
  std::fill(counts.end() - r, counts.end(), 1u);
  std::vector<Composition> out;
  do {
    out.emplace_back(counts);
  } while (std::next_permutation(counts.begin(), counts.end()));
  return out;
}

std::vector<LabelVector> enumerate_labels(unsigned r, unsigned n) {
  if (n == 0) throw ArgumentError("label space needs n >= 1");
  BigInt count = boost::multiprecision::pow(BigInt(n), r);
  check_budget(count, space_name("D", r, n));
  auto total = count.convert_to<std::size_t>();
  std::vector<LabelVector> out;
  out.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    out.push_back(label_at(r, n, index));
  }
  return out;
}

std::size_t label_index(const LabelVector& y) {
  std::size_t index = 0;
  for (unsigned label : y.labels()) index = index * y.cells() + (label - 1);
  return index;
}

LabelVector label_at(unsigned r, unsigned n, std::size_t index) {
  std::vector<unsigned> labels(r);
  for (unsigned i = r; i-- > 0;) {
    labels[i] = static_cast<unsigned>(index % n) + 1;
    index /= n;
  }
  return LabelVector(n, std::move(labels));
}

Composition phi(const OrderedLabels& u) {
  std::vector<unsigned> counts(u.cells(), 0);
  for (unsigned label : u.labels()) ++counts[label - 1];
  return Composition(std::move(counts));
}

OrderedLabels psi(const Composition& x) {
  if (x.cells() == 0) throw ArgumentError("composition has no cells");
  // psi_i(x) = min{ s : x_1 + ... + x_s >= i }
  std::vector<unsigned> labels;
  labels.reserve(x.total());
  for (unsigned j = 0; j < x.cells(); ++j) {
    labels.insert(labels.end(), x[j], j + 1);
  }
  return OrderedLabels(x.cells(), std::move(labels));
}

Composition tilde_phi(const LabelVector& y) {
  std::vector<unsigned> counts(y.cells(), 0);
  for (unsigned label : y.labels()) ++counts[label - 1];
  return Composition(std::move(counts));
}

BigInt multinomial(unsigned r, const Composition& x) {
  if (x.total() != r) {
    throw ArgumentError("multinomial: composition sums to " +
                        std::to_string(x.total()) + ", expected " +
                        std::to_string(r));
  }
  BigInt out = factorial(r);
  for (unsigned v : x.counts()) out /= factorial(v);
  return out;
}

BigInt orbit_size(const Composition& x) {
  std::map<unsigned, unsigned> multiplicity;
  for (unsigned v : x.counts()) ++multiplicity[v];
  BigInt out = factorial(x.cells());
  for (const auto& [value, m] : multiplicity) out /= factorial(m);
  return out;
}

Composition increment(const Composition& x, std::size_t h) {
  auto counts = x.counts();
  ++counts.at(h);
  return Composition(std::move(counts));
}

Composition decrement(const Composition& x, std::size_t h) {
  auto counts = x.counts();
  if (counts.at(h) == 0) throw ArgumentError("decrement of an empty cell");
  --counts[h];
  return Composition(std::move(counts));
}

}  // namespace eom::comb
