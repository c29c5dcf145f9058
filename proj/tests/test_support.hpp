#pragma once

// Test-only oracles and random generators. Nothing here calls into the
// code paths it is used to check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/scalar.hpp"

namespace hecke::oracles {

/// Counts standard tableaux by trying every row-increasing filling.
inline std::uint64_t brute_force_standard_count(const Partition& shape) {
  const int n = shape.size();
  std::vector<int> row_of;  // multiset permutation: row index of each entry
  for (int r = 0; r < shape.num_rows(); ++r)
    for (int k = 0; k < shape.row_length(r); ++k) row_of.push_back(r);
  std::uint64_t count = 0;
  do {
    std::vector<std::vector<int>> rows(shape.num_rows());
    for (int e = 0; e < n; ++e) rows[row_of[e]].push_back(e + 1);
    bool ok = true;
    for (int r = 1; r < shape.num_rows() && ok; ++r)
      for (int c = 0; c < shape.row_length(r); ++c)
        if (rows[r][c] < rows[r - 1][c]) {
          ok = false;
          break;
        }
    count += ok;
  } while (std::next_permutation(row_of.begin(), row_of.end()));
  return count;
}

/// Inversion count by bubble sort swaps.
inline int bubble_sort_swaps(std::vector<int> v) {
  int swaps = 0;
  for (std::size_t pass = 0; pass < v.size(); ++pass)
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        ++swaps;
      }
  return swaps;
}

/// A reduced word built from right descents, rightmost first. Differs from
/// hecke::reduced_word in general but represents the same permutation.
inline std::vector<int> right_descent_word(const Permutation& w) {
  std::vector<int> im = w.images();
  std::vector<int> collected;
  while (true) {
    int pos = -1;
    for (int i = static_cast<int>(im.size()) - 2; i >= 0; --i)
      if (im[i] > im[i + 1]) {
        pos = i;
        break;
      }
    if (pos < 0) break;
    std::swap(im[pos], im[pos + 1]);
    collected.push_back(pos + 1);
  }
  // w s_{j1} s_{j2} ... s_{jk} = e, so w = s_{jk} ... s_{j1}.
  std::reverse(collected.begin(), collected.end());
  return collected;
}

/// Coefficients of the n-th cyclotomic polynomial from its complex roots.
inline std::vector<long long> cyclotomic_by_roots(int n) {
  std::vector<std::complex<double>> poly{1.0};
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const std::complex<double> root = std::polar(1.0, 2 * pi * k / n);
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  std::vector<long long> out;
  for (const auto& c : poly) out.push_back(std::llround(c.real()));
  return out;
}

inline LaurentScalar random_laurent(std::mt19937& rng, int max_terms = 4, int max_exp = 5, int max_coeff = 9) {
  std::uniform_int_distribution<int> terms(0, max_terms), expo(-max_exp, max_exp), coeff(-max_coeff, max_coeff);
  LaurentScalar x;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) x += LaurentScalar::monomial(coeff(rng), expo(rng));
  return x;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

/// A uniformly random filling of the shape (not necessarily standard).
inline Tableau random_tableau(std::mt19937& rng, const Partition& shape) {
  return superstandard(shape).relabeled(random_permutation(rng, shape.size()));
}

inline Partition random_partition(std::mt19937& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  const auto all = partitions_of(size(rng));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace hecke::oracles
