#pragma once

/**
 * @file roots.hpp
 * @brief Two-row Specht modules at a primitive p-th root of unity.
 *
 * For lambda = (l1, l2) and q a primitive p-th root of unity, S^lambda is
 * reducible iff some k > 0 satisfies
 *     l1 - l2 + 2 <= k p <= min(l1 + 1, l1 - l2 + p),
 * equivalently iff the diagram has a boundary strip of length k p with
 * between 1 and p - 1 boxes in the second row. In that case S^lambda has the
 * irreducible submodule D^mu obtained by moving the strip's second-row boxes
 * to the first row, and the quotient is D^lambda.
 *
 * The brute-force oracle (find_submodule_generators) works for any shapes:
 * it searches S^lambda for vectors killed by every column and Garnir element
 * of mu.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/linalg.hpp"
#include "hecke/scalar.hpp"
#include "hecke/specht.hpp"

namespace hecke {

namespace detail {

inline void require_root_order(int p) {
  if (p < 3) throw std::domain_error("p must be >= 3, got " + std::to_string(p));
}

inline void require_two_rows(const Partition& shape) {
  if (shape.num_rows() > 2)
    throw std::domain_error("expected a partition with at most two parts, got " + shape.to_string());
}

inline int floor_mod(int a, int p) { return ((a % p) + p) % p; }

}  // namespace detail

/// No part is repeated p or more times.
inline bool is_p_regular(const Partition& shape, int p) {
  if (p < 2) throw std::domain_error("is_p_regular: p must be >= 2");
  std::map<int, int> mult;
  for (int part : shape.parts())
    if (++mult[part] >= p) return false;
  return true;
}

/// The k > 0 with l1 - l2 + 2 <= k p <= min(l1 + 1, l1 - l2 + p), if any.
/// The window is at most p - 2 wide, so k is unique when it exists.
inline std::optional<int> strip_multiplier(const Partition& shape, int p) {
  detail::require_root_order(p);
  detail::require_two_rows(shape);
  const int l1 = shape.row_length(0), l2 = shape.row_length(1);
  const int lo = l1 - l2 + 2;
  const int hi = std::min(l1 + 1, l1 - l2 + p);
  const int k = (lo + p - 1) / p;
  if (k > 0 && k * p <= hi) return k;
  return std::nullopt;
}

/// (l1 + p - 1 - (l1 - l2) mod p, l2 - p + 1 + (l1 - l2) mod p); meaningful when reducible.
inline Partition submodule_label(const Partition& shape, int p) {
  detail::require_root_order(p);
  detail::require_two_rows(shape);
  const int l1 = shape.row_length(0), l2 = shape.row_length(1);
  const int r = detail::floor_mod(l1 - l2, p);
  return Partition{l1 + p - 1 - r, l2 - p + 1 + r};
}

/// A boundary strip of length k p with 1..p-1 boxes in the second row, if any.
inline std::optional<BoundaryStrip> reducing_strip(const Partition& shape, int p) {
  detail::require_root_order(p);
  detail::require_two_rows(shape);
  for (const auto& strip : boundary_strips(shape)) {
    const int in_row2 = strip.second_row_boxes();
    if (strip.length() % p == 0 && in_row2 >= 1 && in_row2 <= p - 1) return strip;
  }
  return std::nullopt;
}

/// True iff the boundary-strip form and the inequality form of the
/// reducibility criterion agree.
inline bool strip_criterion_equivalence(const Partition& shape, int p) {
  return reducing_strip(shape, p).has_value() == strip_multiplier(shape, p).has_value();
}

/// dim D^lambda_p for a two-row lambda: hook_count(lambda) when S^lambda is
/// irreducible, otherwise the alternating sum
///   sum_{j=0}^{[l2/p]} d(l1 + jp, l2 - jp) - sum_{j=0}^{[m2/p]} d(m1 + jp, m2 - jp).
inline std::uint64_t dimension_D(const Partition& shape, int p) {
  detail::require_root_order(p);
  detail::require_two_rows(shape);
  if (!strip_multiplier(shape, p)) return hook_count(shape);
  auto ladder = [p](const Partition& x) {
    const int x1 = x.row_length(0), x2 = x.row_length(1);
    std::int64_t sum = 0;
    for (int j = 0; j <= x2 / p; ++j) sum += static_cast<std::int64_t>(hook_count(Partition{x1 + j * p, x2 - j * p}));
    return sum;
  };
  const std::int64_t dim = ladder(shape) - ladder(submodule_label(shape, p));
  if (dim <= 0) throw std::logic_error("dimension_D: non-positive dimension for " + shape.to_string());
  return static_cast<std::uint64_t>(dim);
}

struct DecompositionReport {
  Partition shape;
  int p = 0;
  bool reducible = false;
  std::optional<int> k;
  std::optional<Partition> mu;
  std::optional<BoundaryStrip> strip;
  std::uint64_t dim_S = 0;
  std::uint64_t dim_D_lambda = 0;
  std::optional<std::uint64_t> dim_D_mu;
};

/// Reducibility, submodule label and composition dimensions of S^(l1,l2) at p.
inline DecompositionReport analyze(const Partition& shape, int p) {
  detail::require_root_order(p);
  detail::require_two_rows(shape);
  DecompositionReport rep;
  rep.shape = shape;
  rep.p = p;
  rep.k = strip_multiplier(shape, p);
  rep.reducible = rep.k.has_value();
  rep.dim_S = hook_count(shape);
  rep.dim_D_lambda = dimension_D(shape, p);
  if (rep.reducible) {
    rep.mu = submodule_label(shape, p);
    rep.strip = reducing_strip(shape, p);
    rep.dim_D_mu = dimension_D(*rep.mu, p);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// p-root standard tableaux
// ---------------------------------------------------------------------------

/// Rows of a two-row tableau: a_1..a_{l1} on top, b_1..b_{l2} below.
struct TwoRowTableauView {
  std::vector<int> a;
  std::vector<int> b;

  explicit TwoRowTableauView(const Tableau& t) {
    detail::require_two_rows(t.shape());
    a = t.rows().at(0);
    if (t.rows().size() > 1) b = t.rows()[1];
  }
};

/// b_i < a_{i+s-2} (1-based), vacuously true when a_{i+s-2} does not exist.
inline bool is_s_strip_standard(const TwoRowTableauView& t, int s, int i) {
  if (i < 1 || i > static_cast<int>(t.b.size())) throw std::out_of_range("strip position out of range");
  const int j = i + s - 2;
  if (j > static_cast<int>(t.a.size())) return true;
  if (j < 1) return false;
  return t.b[i - 1] < t.a[j - 1];
}

/// Standard, and either kp-strip standard at every position, or
/// ((k-1)p+2)-strip standard at some position right of the last position
/// where kp-strip standardness fails. With no admissible k every standard
/// tableau qualifies.
inline bool is_p_root_standard(const Tableau& t, int p) {
  detail::require_two_rows(t.shape());
  detail::require_root_order(p);
  if (!t.is_standard()) return false;
  const auto k = strip_multiplier(t.shape(), p);
  if (!k) return true;
  const TwoRowTableauView view(t);
  const int l2 = static_cast<int>(view.b.size());
  const int s = *k * p;
  int last_fail = 0;
  for (int i = 1; i <= l2; ++i)
    if (!is_s_strip_standard(view, s, i)) last_fail = i;
  if (last_fail == 0) return true;
  const int s2 = (*k - 1) * p + 2;
  for (int j = last_fail + 1; j <= l2; ++j)
    if (is_s_strip_standard(view, s2, j)) return true;
  return false;
}

/// p-root standard tableaux in basis order.
inline std::vector<Tableau> enumerate_p_root_standard(const Partition& shape, int p) {
  detail::require_two_rows(shape);
  detail::require_root_order(p);
  std::vector<Tableau> out;
  for (auto& t : enumerate_standard(shape))
    if (is_p_root_standard(t, p)) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Submodule oracle
// ---------------------------------------------------------------------------

using RootModule = SpechtModule<CyclotomicRing>;
using RootVector = SpechtVector<CyclotomicScalar>;

/// Basis of the vectors in `module` annihilated by every column and Garnir
/// element of mu. A nonzero result exhibits a homomorphic image of S^mu in the module.
inline std::vector<RootVector> find_submodule_generators(const RootModule& module, const Partition& mu) {
  if (mu.size() != module.degree())
    throw std::invalid_argument("find_submodule_generators: " + mu.to_string() + " and " +
                                module.shape().to_string() + " have different sizes");
  if (!is_p_regular(mu, module.ring().p))
    throw std::invalid_argument("find_submodule_generators: " + mu.to_string() + " is not p-regular");
  const auto zero = module.ring().zero();
  std::vector<Matrix<CyclotomicScalar>> blocks;
  for (const auto& x : annihilator_elements(mu)) blocks.push_back(annihilator_matrix(x, module));
  const auto stacked = Matrix<CyclotomicScalar>::vstack(blocks, module.dimension(), zero);
  std::vector<RootVector> out;
  for (auto& v : kernel(stacked)) out.push_back({module.shape(), std::move(v)});
  return out;
}

inline std::vector<RootVector> find_submodule_generators(const Partition& lambda, const Partition& mu, int p) {
  detail::require_root_order(p);
  return find_submodule_generators(RootModule(lambda, CyclotomicRing(p)), mu);
}

/// Dimension of the smallest h-stable subspace containing the generators.
inline int submodule_dimension(const RootModule& module, const std::vector<RootVector>& generators) {
  EchelonBasis<CyclotomicScalar> span(module.dimension());
  std::vector<RootVector> queue;
  for (const auto& g : generators)
    if (span.insert(g.coords)) queue.push_back(g);
  while (!queue.empty()) {
    const RootVector v = std::move(queue.back());
    queue.pop_back();
    for (int i = 1; i < module.degree(); ++i) {
      auto w = module.apply_generator(i, v);
      if (span.insert(w.coords)) queue.push_back(std::move(w));
    }
  }
  return span.dimension();
}

inline int submodule_dimension(const Partition& lambda, const std::vector<RootVector>& generators, int p) {
  detail::require_root_order(p);
  return submodule_dimension(RootModule(lambda, CyclotomicRing(p)), generators);
}

}  // namespace hecke
