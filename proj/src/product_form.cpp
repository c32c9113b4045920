// Exact product-form detection.
//
// P{X=x} = K prod_j a(x_j) is linear in logarithms: log P(x) = log K +
// sum_v m_v(x) log a(v), where m_v(x) counts the cells holding v particles.
// To stay exact, the logarithms of the probabilities are expressed as integer
// vectors over a coprime base of their numerators and denominators (found by
// gcd refinement, no factoring). Logs of pairwise coprime integers > 1 are
// linearly independent over Q, so the real system is solvable iff each base
// coordinate is solvable over Q, which is a rational Gaussian elimination.

#include <algorithm>
#include <map>
#include <set>

#include "eom/errors.hpp"
#include "eom/transform.hpp"

namespace eom::transform {

using comb::Composition;

namespace {

std::vector<BigInt> coprime_base(std::vector<BigInt> values) {
  std::vector<BigInt> base;
  for (auto& v : values) {
    if (v > 1) base.push_back(std::move(v));
  }
  auto tidy = [&] {
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    base.erase(std::remove(base.begin(), base.end(), BigInt(1)), base.end());
  };
  tidy();
  for (bool refined = true; refined;) {
    refined = false;
    for (std::size_t i = 0; i < base.size() && !refined; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !refined; ++j) {
        BigInt g = boost::multiprecision::gcd(base[i], base[j]);
        if (g == 1) continue;
        BigInt left = base[i] / g;
        BigInt right = base[j] / g;
        base[i] = left;
        base[j] = right;
        base.push_back(g);
        tidy();
        refined = true;
      }
    }
  }
  return base;
}

/// Integer exponents of value over a coprime base it factors over.
std::vector<Rational> exponents(BigInt value, const std::vector<BigInt>& base) {
  std::vector<Rational> out(base.size(), Rational(0));
  for (std::size_t i = 0; i < base.size(); ++i) {
    long count = 0;
    while (value % base[i] == 0) {
      value /= base[i];
      ++count;
    }
    out[i] = count;
  }
  if (value != 1) throw Error("internal: coprime base does not cover value");
  return out;
}

/// base^e for an integer exponent e (possibly negative); nullopt otherwise.
std::optional<Rational> integer_power(const BigInt& base, const Rational& e) {
  if (denominator(e) != 1) return std::nullopt;
  BigInt k = numerator(e);
  BigInt magnitude = k < 0 ? BigInt(-k) : k;
  Rational out = pow(Rational(base), magnitude.convert_to<unsigned>());
  return k < 0 ? Rational(1) / out : out;
}

}  // namespace

ProductFormFit fit_product_form(const OccupancyDistribution& d) {
  ProductFormFit fit;
  const unsigned n = d.cells();
  const unsigned r = d.particles();
  if (!is_exchangeable(d)) {
    fit.reason = "not exchangeable";
    return fit;
  }

  // Occupied levels: values of a that must be positive.
  std::set<unsigned> levels;
  for (const auto& [x, p] : d.table()) levels.insert(x.counts().begin(), x.counts().end());

  // A product form is positive exactly on compositions built from occupied
  // levels.
  for (const auto& x : comb::enumerate_compositions(n, r)) {
    bool inside = std::all_of(x.counts().begin(), x.counts().end(),
                              [&](unsigned v) { return levels.contains(v); });
    if (inside && d.probability(x) == 0) {
      fit.reason = "support is not closed under occupied levels";
      return fit;
    }
  }

  std::map<Composition, Rational> orbits;
  for (const auto& [x, p] : d.table()) orbits.emplace(x.canonical(), p);

  std::vector<BigInt> raw;
  for (const auto& [rep, p] : orbits) {
    raw.push_back(numerator(p));
    raw.push_back(denominator(p));
  }
  const std::vector<BigInt> base = coprime_base(std::move(raw));

  // Unknowns: column 0 is log K, then one column per occupied level.
  const std::vector<unsigned> level_list(levels.begin(), levels.end());
  const std::size_t unknowns = 1 + level_list.size();
  const std::size_t width = unknowns + base.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& [rep, p] : orbits) {
    std::vector<Rational> row(width, Rational(0));
    row[0] = 1;
    for (unsigned v : rep.counts()) {
      auto col = std::lower_bound(level_list.begin(), level_list.end(), v) -
                 level_list.begin();
      row[1 + col] += 1;
    }
    auto top = exponents(numerator(p), base);
    auto bottom = exponents(denominator(p), base);
    for (std::size_t i = 0; i < base.size(); ++i) row[unknowns + i] = top[i] - bottom[i];
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form on the unknown columns.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    Rational lead = rows[rank][col];
    for (auto& entry : rows[rank]) entry /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational factor = rows[i][col];
      for (std::size_t c = 0; c < width; ++c) rows[i][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    for (std::size_t c = unknowns; c < width; ++c) {
      if (rows[i][c] != 0) {
        fit.reason = "log-linear system is inconsistent";
        return fit;
      }
    }
  }
  fit.product_form = true;

  // Particular solution with free unknowns set to 0 (weight 1).
  std::vector<std::vector<Rational>> solution(
      unknowns, std::vector<Rational>(base.size(), Rational(0)));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t b = 0; b < base.size(); ++b) {
      solution[pivot_col[i]][b] = rows[i][unknowns + b];
    }
  }

  std::vector<Rational> values(r + 1, Rational(0));
  for (std::size_t l = 0; l < level_list.size(); ++l) {
    Rational value = 1;
    for (std::size_t b = 0; b < base.size(); ++b) {
      auto factor = integer_power(base[b], solution[1 + l][b]);
      if (!factor) {
        fit.reason = "product form needs irrational weights in this gauge";
        return fit;
      }
      value *= *factor;
    }
    values[level_list[l]] = value;
  }
  if (levels.contains(0)) {
    Rational a0 = values[0];
    for (auto& v : values) v /= a0;
  }
  if (levels.contains(1)) {
    Rational lambda = Rational(1) / values[1];
    for (unsigned v = 0; v <= r; ++v) values[v] *= pow(lambda, v);
  }

  WeightFunction candidate(std::move(values));
  if (m_model(candidate, n, r) == d) {
    fit.weight = std::move(candidate);
  } else {
    fit.reason = "internal: reconstructed weights do not reproduce the table";
  }
  return fit;
}

}  // namespace eom::transform
