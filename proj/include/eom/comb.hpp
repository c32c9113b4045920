#pragma once

// Combinatorial spaces behind occupancy models.
//
//   A(n,r)  occupancy vectors: n cell counts summing to r        (Composition)
//   B(r,n)  nondecreasing label tuples of length r over {1..n}   (OrderedLabels)
//   D(r,n)  arbitrary label tuples of length r over {1..n}       (LabelVector)
//
// phi: B -> A and psi: A -> B are mutually inverse; tilde_phi: D -> A counts
// label occurrences and agrees with phi on B. Cell labels are 1-based.

#include <compare>
#include <cstddef>
#include <vector>

#include "eom/rational.hpp"

namespace eom::comb {

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<unsigned> counts);

  unsigned cells() const { return static_cast<unsigned>(counts_.size()); }
  unsigned total() const { return total_; }
  const std::vector<unsigned>& counts() const { return counts_; }
  unsigned operator[](std::size_t j) const { return counts_[j]; }

  /// Counts sorted in decreasing order: the representative of the
  /// permutation orbit of this vector.
  Composition canonical() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<unsigned> counts_;
  unsigned total_ = 0;
};

class OrderedLabels {
 public:
  OrderedLabels(unsigned n, std::vector<unsigned> labels);

  unsigned cells() const { return n_; }
  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<unsigned>& labels() const { return labels_; }
  unsigned operator[](std::size_t i) const { return labels_[i]; }

  auto operator<=>(const OrderedLabels&) const = default;

 private:
  unsigned n_;
  std::vector<unsigned> labels_;
};

class LabelVector {
 public:
  LabelVector(unsigned n, std::vector<unsigned> labels);

  unsigned cells() const { return n_; }
  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<unsigned>& labels() const { return labels_; }
  unsigned operator[](std::size_t i) const { return labels_[i]; }

  OrderedLabels sorted() const;

  auto operator<=>(const LabelVector&) const = default;

 private:
  unsigned n_;
  std::vector<unsigned> labels_;
};

BigInt composition_count(unsigned n, unsigned r);

/// Every element of A(n,r) once, lexicographic on counts.
/// Throws EnumerationTooLarge past the 10^7 budget.
std::vector<Composition> enumerate_compositions(unsigned n, unsigned r);

/// 0/1 compositions of r into n cells, lexicographic. Throws EmptySupport
/// when r > n.
std::vector<Composition> enumerate_binary_compositions(unsigned n, unsigned r);

/// D(r,n) in odometer order (last coordinate fastest).
std::vector<LabelVector> enumerate_labels(unsigned r, unsigned n);

/// Odometer position of y within enumerate_labels(r, n).
std::size_t label_index(const LabelVector& y);
LabelVector label_at(unsigned r, unsigned n, std::size_t index);

Composition phi(const OrderedLabels& u);
OrderedLabels psi(const Composition& x);
Composition tilde_phi(const LabelVector& y);

/// r! / prod x_j!. Throws ArgumentError when x does not sum to r.
BigInt multinomial(unsigned r, const Composition& x);

/// Size of the permutation orbit of x under cell relabelling: n! / prod m_v!
/// where m_v is the number of cells holding v particles.
BigInt orbit_size(const Composition& x);

/// x with one particle added to (or removed from) cell h (0-based).
Composition increment(const Composition& x, std::size_t h);
Composition decrement(const Composition& x, std::size_t h);

}  // namespace eom::comb
