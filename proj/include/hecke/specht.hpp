#pragma once

/**
 * @file specht.hpp
 * @brief Specht modules of the Hecke algebra H_n(q).
 *
 * A Specht module S^lambda is spanned by vectors v_t for tableaux t of shape
 * lambda, modulo
 *  - column relations: swapping two entries of a column negates v_t;
 *  - Garnir relations: for a column-increasing t with t(r,c) > t(r,c+1),
 *      sum_{t'} (-q)^{-l(w_t')} v_t' = 0
 *    over the reshuffles t' of the entries at and below (r,c) and at and
 *    above (r,c+1) that keep both column segments increasing.
 * The standard tableaux form a basis. The generator h_i acts by
 *    h_i v_t = v_x                       if i precedes i+1 in t,
 *    h_i v_t = q v_x + (q - 1) v_t        otherwise,
 * where x is t with i and i+1 interchanged.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/linalg.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Which row descent the straightening algorithm resolves first.
enum class GarnirPolicy {
  TopmostLeftmost,      // smallest row, then smallest column
  BottommostRightmost,  // largest row, then largest column
};

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// Formal combination of (not necessarily standard) tableaux of one shape.
template <class S>
class TableauVector {
 public:
  TableauVector() = default;

  void add(const Tableau& t, const S& c) {
    if (c.is_zero()) return;
    if (!terms_.empty() && terms_.begin()->first.shape() != t.shape())
      throw std::invalid_argument("TableauVector: mixed shapes " + terms_.begin()->first.shape().to_string() + " and " +
                                  t.shape().to_string());
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const std::map<Tableau, S>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::optional<S> coefficient(const Tableau& t) const {
    auto it = terms_.find(t);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<Tableau, S> terms_;
};

/// Coordinates in the ordered standard basis of enumerate_standard(shape).
template <class S>
struct SpechtVector {
  Partition shape;
  Matrix<S> coords;  // dim x 1

  friend bool operator==(const SpechtVector&, const SpechtVector&) = default;
};

// ---------------------------------------------------------------------------
// Column and Garnir relations on single tableaux
// ---------------------------------------------------------------------------

struct ColumnSorted {
  int sign;
  Tableau tableau;
};

/// Sorts every column increasingly; sign is (-1)^(transpositions used).
inline ColumnSorted column_sort(const Tableau& t) {
  auto rows = t.rows();
  int parity = 0;
  const Partition& shape = t.shape();
  for (int c = 0; c < shape.num_cols(); ++c) {
    std::vector<int> col = t.column(c);
    for (std::size_t i = 0; i < col.size(); ++i)
      for (std::size_t j = i + 1; j < col.size(); ++j) parity += col[i] > col[j];
    std::sort(col.begin(), col.end());
    for (std::size_t r = 0; r < col.size(); ++r) rows[r][c] = col[r];
  }
  return {parity % 2 ? -1 : 1, Tableau(std::move(rows))};
}

/// A row descent: t(row, col) > t(row, col + 1).
struct GarnirPair {
  int row;
  int col;
  friend bool operator==(const GarnirPair&, const GarnirPair&) = default;
};

inline std::optional<GarnirPair> find_row_descent(const Tableau& t, GarnirPolicy policy) {
  const auto& rows = t.rows();
  const int nrows = static_cast<int>(rows.size());
  if (policy == GarnirPolicy::TopmostLeftmost) {
    for (int r = 0; r < nrows; ++r)
      for (int c = 0; c + 1 < static_cast<int>(rows[r].size()); ++c)
        if (rows[r][c] > rows[r][c + 1]) return GarnirPair{r, c};
  } else {
    for (int r = nrows - 1; r >= 0; --r)
      for (int c = static_cast<int>(rows[r].size()) - 2; c >= 0; --c)
        if (rows[r][c] > rows[r][c + 1]) return GarnirPair{r, c};
  }
  return std::nullopt;
}

/// The Garnir relation at a row descent of a column-increasing tableau z,
/// scaled so that z itself has coefficient 1: the coefficient of each
/// reshuffle t is (-q)^(l(w_z) - l(w_t)). The returned vector sums to zero in S^lambda.
template <ScalarRing R>
TableauVector<typename R::value_type> garnir_relation(const Tableau& z, GarnirPair pair, const R& ring) {
  const int r0 = pair.row, c0 = pair.col;
  if (!z.is_column_increasing()) throw std::invalid_argument("garnir_relation: tableau must be column-increasing");
  if (!z.shape().contains(r0, c0 + 1) || z.at(r0, c0) < z.at(r0, c0 + 1))
    throw std::invalid_argument("garnir_relation: (" + std::to_string(r0) + "," + std::to_string(c0) +
                                ") is not a row descent of " + z.to_string());
  const int left_len = z.shape().column_length(c0) - r0;  // rows r0.. of column c0
  const int right_len = r0 + 1;                            // rows ..r0 of column c0+1
  std::vector<int> pool;
  for (int r = r0; r < r0 + left_len; ++r) pool.push_back(z.at(r, c0));
  for (int r = 0; r <= r0; ++r) pool.push_back(z.at(r, c0 + 1));
  std::sort(pool.begin(), pool.end());

  const int base_length = word_of_tableau(z).length();
  TableauVector<typename R::value_type> out;
  std::vector<bool> choose(pool.size(), false);
  std::fill(choose.begin(), choose.begin() + left_len, true);
  do {
    std::vector<int> left, right;
    for (std::size_t k = 0; k < pool.size(); ++k) (choose[k] ? left : right).push_back(pool[k]);
    auto rows = z.rows();
    for (int k = 0; k < left_len; ++k) rows[r0 + k][c0] = left[k];
    for (int k = 0; k < right_len; ++k) rows[k][c0 + 1] = right[k];
    Tableau t(std::move(rows));
    const int rel = base_length - word_of_tableau(t).length();
    auto coeff = ring.q_power(rel);
    if (rel % 2 != 0) coeff = -coeff;
    out.add(t, coeff);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

/// The natural action of h_i on a single tableau vector, before straightening.
template <ScalarRing R>
TableauVector<typename R::value_type> act_on_tableau(int i, const Tableau& t, const R& ring) {
  if (i < 1 || i >= t.size())
    throw std::out_of_range("generator h_" + std::to_string(i) + " out of range for n=" + std::to_string(t.size()));
  TableauVector<typename R::value_type> out;
  const Tableau x = t.swapped(i, i + 1);
  if (precedes(i, i + 1, t)) {
    out.add(x, ring.one());
  } else {
    out.add(x, ring.q_power(1));
    out.add(t, ring.q_power(1) - ring.one());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Straightening
// ---------------------------------------------------------------------------

/// Sparse coordinates: basis index -> nonzero coefficient.
template <class S>
using SparseCoords = std::map<int, S>;

template <class S>
void axpy(SparseCoords<S>& y, const S& a, const SparseCoords<S>& x) {
  for (const auto& [k, c] : x) {
    const S term = a * c;
    if (term.is_zero()) continue;
    auto [it, inserted] = y.try_emplace(k, term);
    if (!inserted) {
      it->second += term;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

/// Expresses arbitrary tableau vectors in the standard basis. Results for
/// column-sorted tableaux are memoized; not thread-safe on its own.
template <ScalarRing R>
class Straightener {
 public:
  using S = typename R::value_type;

  Straightener(Partition shape, R ring, GarnirPolicy policy = GarnirPolicy::TopmostLeftmost)
      : shape_(std::move(shape)), ring_(std::move(ring)), policy_(policy), basis_(enumerate_standard(shape_)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], static_cast<int>(k));
  }

  const Partition& shape() const noexcept { return shape_; }
  const R& ring() const noexcept { return ring_; }
  const std::vector<Tableau>& basis() const noexcept { return basis_; }
  std::optional<int> index_of(const Tableau& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
  }

  SparseCoords<S> coords(const Tableau& t) {
    if (t.shape() != shape_)
      throw std::invalid_argument("straighten: tableau shape " + t.shape().to_string() + " is not " + shape_.to_string());
    auto [sign, sorted] = column_sort(t);
    SparseCoords<S> out = sorted_coords(sorted);
    if (sign < 0)
      for (auto& [k, x] : out) x = -x;
    return out;
  }

  SparseCoords<S> coords(const TableauVector<S>& v) {
    SparseCoords<S> out;
    for (const auto& [t, c] : v.terms()) axpy(out, c, coords(t));
    return out;
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const SparseCoords<S>& sorted_coords(const Tableau& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    SparseCoords<S> out;
    if (auto idx = index_of(s)) {
      out.emplace(*idx, ring_.one());
    } else {
      if (!active_.insert(s).second)
        throw std::logic_error("straighten: cyclic Garnir expansion at " + s.to_string());
      // s is column-increasing and not standard, so a row descent exists.
      const auto pair = find_row_descent(s, policy_);
      const auto relation = garnir_relation(s, *pair, ring_);
      for (const auto& [t, c] : relation.terms()) {
        if (t == s) continue;
        axpy(out, -c, coords(t));
      }
      active_.erase(s);
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

  Partition shape_;
  R ring_;
  GarnirPolicy policy_;
  std::vector<Tableau> basis_;
  std::map<Tableau, int> index_;
  std::map<Tableau, SparseCoords<S>> memo_;
  std::set<Tableau> active_;
};

// ---------------------------------------------------------------------------
// Hecke algebra elements: column and Garnir elements
// ---------------------------------------------------------------------------

/// sum_k coeff_k * h_{word_k[0]} h_{word_k[1]} ...
struct HeckeElement {
  struct Term {
    LaurentScalar coeff;
    std::vector<int> word;
  };
  std::vector<Term> terms;

  int max_generator() const {
    int m = 0;
    for (const auto& t : terms)
      for (int i : t.word) m = std::max(m, i);
    return m;
  }

  HeckeElement scaled(const LaurentScalar& s) const {
    HeckeElement out = *this;
    for (auto& t : out.terms) t.coeff = s * t.coeff;
    return out;
  }

  /// Compact rendering such as "q^3-q^2h_10+qh_9h_10-h_8h_9h_10".
  std::string to_string() const {
    std::string out;
    for (const auto& term : terms) {
      if (term.coeff.is_zero()) continue;
      std::string coeff;
      bool negative = false;
      if (term.coeff.terms().size() == 1) {
        const auto& [e, c] = *term.coeff.terms().begin();
        negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (mag != 1 || (e == 0 && term.word.empty())) {
          std::ostringstream os;
          os << mag;
          coeff = os.str();
        }
        if (e == 1) coeff += "q";
        if (e != 0 && e != 1) coeff += "q^" + std::to_string(e);
      } else {
        coeff = "(" + term.coeff.to_string() + ")";
      }
      if (negative) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      out += coeff;
      for (int i : term.word) out += "h_" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }
};

/// 1 + h_a, for an entry a of t_minus that is not at the bottom of its column.
struct ColumnElement {
  int anchor;

  HeckeElement element() const { return {{{LaurentScalar(1), {}}, {LaurentScalar(1), {anchor}}}}; }
};

/// sum over minimal-length left coset representatives w of W_{a..b} x W_{c..d}
/// in W_{a..d} of (-q)^(-l(w)) h(w).
struct GarnirElement {
  struct Term {
    LaurentScalar coeff;  // (-q)^(-length)
    int length;
    std::vector<int> word;  // reduced word of the representative
  };
  int anchor;  // a
  int bottom;  // b: bottom of a's column in t_minus
  int top;     // c = b + 1: top of the next column
  int right;   // d: entry right of a
  std::vector<Term> terms;

  int max_length() const {
    int m = 0;
    for (const auto& t : terms) m = std::max(m, t.length);
    return m;
  }

  HeckeElement element() const {
    HeckeElement out;
    for (const auto& t : terms) out.terms.push_back({t.coeff, t.word});
    return out;
  }

  /// Rendering scaled by q^(max length), so every coefficient is +-q^k with k >= 0.
  std::string to_string() const { return element().scaled(LaurentScalar::q(max_length())).to_string(); }
};

inline std::vector<ColumnElement> column_elements(const Partition& shape) {
  const Tableau t = superstandard(shape);
  std::vector<ColumnElement> out;
  for (int c = 0; c < shape.num_cols(); ++c)
    for (int r = 0; r + 1 < shape.column_length(c); ++r) out.push_back({t.at(r, c)});
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.anchor < y.anchor; });
  return out;
}

inline GarnirElement garnir_element(const Partition& shape, int a) {
  const Tableau t = superstandard(shape);
  if (a < 1 || a > shape.size()) throw std::out_of_range("garnir_element: entry out of range");
  const auto [row, col] = t.position_of(a);
  if (col + 1 >= shape.row_length(row))
    throw std::invalid_argument("garnir_element: entry " + std::to_string(a) + " is at the end of its row");
  GarnirElement g;
  g.anchor = a;
  g.right = t.at(row, col + 1);
  g.bottom = t.at(shape.column_length(col) - 1, col);
  g.top = t.at(0, col + 1);
  const int left_len = g.bottom - g.anchor + 1;
  const int span = g.right - g.anchor + 1;
  std::vector<bool> choose(span, false);
  std::fill(choose.begin(), choose.begin() + left_len, true);
  do {
    // w sends a..b increasingly onto the chosen values and c..d onto the rest.
    auto images = Permutation::identity(shape.size()).images();
    int next_left = g.anchor, next_right = g.top;
    for (int k = 0; k < span; ++k) {
      const int value = g.anchor + k;
      if (choose[k]) {
        images[next_left++ - 1] = value;
      } else {
        images[next_right++ - 1] = value;
      }
    }
    const Permutation w(std::move(images));
    const int len = w.length();
    g.terms.push_back({LaurentScalar::neg_q_power(-len), len, reduced_word(w)});
  } while (std::prev_permutation(choose.begin(), choose.end()));
  std::stable_sort(g.terms.begin(), g.terms.end(), [](const auto& x, const auto& y) {
    return x.length != y.length ? x.length < y.length : x.word < y.word;
  });
  return g;
}

/// Garnir elements for every entry of t_minus not at the end of its row, by anchor.
inline std::vector<GarnirElement> garnir_elements(const Partition& shape) {
  const Tableau t = superstandard(shape);
  std::vector<int> anchors;
  for (int r = 0; r < shape.num_rows(); ++r)
    for (int c = 0; c + 1 < shape.row_length(r); ++c) anchors.push_back(t.at(r, c));
  std::sort(anchors.begin(), anchors.end());
  std::vector<GarnirElement> out;
  for (int a : anchors) out.push_back(garnir_element(shape, a));
  return out;
}

/// All column elements followed by all Garnir elements of the shape.
inline std::vector<HeckeElement> annihilator_elements(const Partition& shape) {
  std::vector<HeckeElement> out;
  for (const auto& c : column_elements(shape)) out.push_back(c.element());
  for (const auto& g : garnir_elements(shape)) out.push_back(g.element());
  return out;
}

// ---------------------------------------------------------------------------
// SpechtModule
// ---------------------------------------------------------------------------

/// S^lambda over a chosen ground ring.
///
/// Generator images are computed on demand (straightening h_i v_t for a basis
/// tableau t) and cached, so large modules can be probed without building
/// full matrices. Copies share the cache; all access is mutex-guarded and the
/// cached values are deterministic.
template <ScalarRing R>
class SpechtModule {
 public:
  using S = typename R::value_type;
  using Vector = SpechtVector<S>;
  using Sparse = SparseCoords<S>;

  SpechtModule(Partition shape, R ring, GarnirPolicy policy = GarnirPolicy::TopmostLeftmost)
      : shape_(std::move(shape)), ring_(std::move(ring)), cache_(std::make_shared<Cache>(shape_, ring_, policy)) {}

  const Partition& shape() const noexcept { return shape_; }
  const R& ring() const noexcept { return ring_; }
  int degree() const noexcept { return shape_.size(); }
  int dimension() const { return static_cast<int>(basis().size()); }
  const std::vector<Tableau>& basis() const { return cache_->straightener.basis(); }
  std::optional<int> index_of(const Tableau& t) const { return cache_->straightener.index_of(t); }

  /// h_i applied to the k-th basis vector, in sparse coordinates.
  const Sparse& generator_image(int i, int k) const {
    check_generator(i);
    std::lock_guard lock(cache_->mutex);
    return image_locked(i, k);
  }

  /// Matrix of h_i; column k is the image of the k-th basis vector.
  const Matrix<S>& generator_matrix(int i) const {
    check_generator(i);
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->matrices[i - 1];
    if (!slot) {
      Matrix<S> m(dimension(), dimension(), ring_.zero());
      for (int k = 0; k < dimension(); ++k)
        for (const auto& [r, c] : image_locked(i, k)) m(r, k) = c;
      slot = std::move(m);
    }
    return *slot;
  }

  /// Matrix of h_{w1} h_{w2} ... h_{wk}.
  Matrix<S> word_matrix(const std::vector<int>& word) const {
    Matrix<S> m = Matrix<S>::identity(dimension(), ring_);
    for (int i : word) m = mat_mul(m, generator_matrix(i));
    return m;
  }

  /// Matrix of an algebra element. Words sharing a suffix share work.
  Matrix<S> element_matrix(const HeckeElement& x) const {
    std::map<std::vector<int>, Matrix<S>> memo;
    auto word_mat = [&](auto&& self, const std::vector<int>& w) -> const Matrix<S>& {
      if (auto it = memo.find(w); it != memo.end()) return it->second;
      Matrix<S> m = w.empty() ? Matrix<S>::identity(dimension(), ring_)
                              : mat_mul(generator_matrix(w.front()), self(self, std::vector<int>(w.begin() + 1, w.end())));
      return memo.emplace(w, std::move(m)).first->second;
    };
    Matrix<S> out(dimension(), dimension(), ring_.zero());
    for (const auto& term : x.terms) {
      if (term.coeff.is_zero()) continue;
      out += ring_.from_laurent(term.coeff) * word_mat(word_mat, term.word);
    }
    return out;
  }

  Vector basis_vector(int k) const {
    Matrix<S> v(dimension(), 1, ring_.zero());
    v(k, 0) = ring_.one();
    return {shape_, std::move(v)};
  }
  Vector superstandard_vector() const { return basis_vector(*index_of(superstandard(shape_))); }
  Vector zero_vector() const { return {shape_, Matrix<S>(dimension(), 1, ring_.zero())}; }

  Vector straighten(const TableauVector<S>& v) const { return to_dense(straighten_sparse(v)); }
  Vector straighten(const Tableau& t) const {
    std::lock_guard lock(cache_->mutex);
    return to_dense(cache_->straightener.coords(t));
  }
  Sparse straighten_sparse(const TableauVector<S>& v) const {
    std::lock_guard lock(cache_->mutex);
    return cache_->straightener.coords(v);
  }

  Vector apply_generator(int i, const Vector& v) const {
    check_vector(v);
    return to_dense(apply_generator(i, to_sparse(v)));
  }
  Sparse apply_generator(int i, const Sparse& v) const {
    check_generator(i);
    std::lock_guard lock(cache_->mutex);
    Sparse out;
    for (const auto& [k, c] : v) axpy(out, c, image_locked(i, k));
    return out;
  }

  /// h_{w1} ... h_{wk} v, i.e. the rightmost generator acts first.
  Vector apply_word(const std::vector<int>& word, const Vector& v) const {
    check_vector(v);
    return to_dense(apply_word(word, to_sparse(v)));
  }
  Sparse apply_word(const std::vector<int>& word, Sparse v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(*it, v);
    return v;
  }

  Vector apply(const HeckeElement& x, const Vector& v) const {
    check_vector(v);
    return to_dense(apply(x, to_sparse(v)));
  }
  Sparse apply(const HeckeElement& x, const Sparse& v) const {
    Sparse out;
    for (const auto& term : x.terms) {
      if (term.coeff.is_zero()) continue;
      axpy(out, ring_.from_laurent(term.coeff), apply_word(term.word, v));
    }
    return out;
  }

  Sparse to_sparse(const Vector& v) const {
    Sparse out;
    for (int k = 0; k < v.coords.rows(); ++k)
      if (!v.coords(k, 0).is_zero()) out.emplace(k, v.coords(k, 0));
    return out;
  }
  Vector to_dense(const Sparse& v) const {
    Vector out = zero_vector();
    for (const auto& [k, c] : v) out.coords(k, 0) = c;
    return out;
  }

 private:
  struct Cache {
    Cache(const Partition& shape, const R& ring, GarnirPolicy policy)
        : straightener(shape, ring, policy),
          images(std::max(shape.size() - 1, 0)),
          matrices(std::max(shape.size() - 1, 0)) {}
    std::mutex mutex;
    Straightener<R> straightener;
    std::vector<std::map<int, Sparse>> images;  // [i-1][k]
    std::vector<std::optional<Matrix<S>>> matrices;
  };

  const Sparse& image_locked(int i, int k) const {
    auto& per_gen = cache_->images[i - 1];
    if (auto it = per_gen.find(k); it != per_gen.end()) return it->second;
    auto img = cache_->straightener.coords(act_on_tableau(i, basis().at(k), ring_));
    return per_gen.emplace(k, std::move(img)).first->second;
  }

  void check_generator(int i) const {
    if (i < 1 || i >= shape_.size())
      throw std::out_of_range("generator h_" + std::to_string(i) + " out of range for n=" + std::to_string(shape_.size()));
  }
  void check_vector(const Vector& v) const {
    if (v.shape != shape_ || v.coords.rows() != dimension() || v.coords.cols() != 1)
      throw std::invalid_argument("vector does not belong to S^(" + shape_.to_string() + ")");
  }

  Partition shape_;
  R ring_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Free functions
// ---------------------------------------------------------------------------

template <ScalarRing R>
Matrix<typename R::value_type> generator_matrix(const Partition& shape, int i, const R& ring) {
  if (i < 1 || i >= shape.size())
    throw std::out_of_range("generator h_" + std::to_string(i) + " out of range for n=" + std::to_string(shape.size()));
  return SpechtModule<R>(shape, ring).generator_matrix(i);
}

/// Matrix of a column/Garnir element (of any shape) acting on S^{module_shape}.
template <ScalarRing R>
Matrix<typename R::value_type> annihilator_matrix(const HeckeElement& x, const SpechtModule<R>& module) {
  if (x.max_generator() >= module.degree())
    throw std::out_of_range("element uses h_" + std::to_string(x.max_generator()) + " but n=" +
                            std::to_string(module.degree()));
  return module.element_matrix(x);
}

template <ScalarRing R>
Matrix<typename R::value_type> annihilator_matrix(const HeckeElement& x, const Partition& module_shape, const R& ring) {
  return annihilator_matrix(x, SpechtModule<R>(module_shape, ring));
}

struct RelationCheck {
  std::string name;
  bool passed;
};

/// Quadratic, braid and commutation relations as exact operator identities,
/// checked on every basis vector.
template <ScalarRing R>
std::vector<RelationCheck> check_defining_relations(const SpechtModule<R>& module) {
  using Sparse = SparseCoords<typename R::value_type>;
  std::vector<RelationCheck> out;
  const int n = module.degree();
  const auto& ring = module.ring();
  const auto q = ring.q_power(1);
  auto for_all_basis = [&](auto&& pred) {
    for (int k = 0; k < module.dimension(); ++k)
      if (!pred(Sparse{{k, ring.one()}})) return false;
    return true;
  };
  for (int i = 1; i < n; ++i) {
    out.push_back({"quadratic h_" + std::to_string(i), for_all_basis([&](const Sparse& e) {
                     const Sparse he = module.apply_generator(i, e);
                     Sparse rhs;
                     axpy(rhs, q - ring.one(), he);
                     axpy(rhs, q, e);
                     return module.apply_generator(i, he) == rhs;
                   })});
  }
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back({"braid h_" + std::to_string(i) + " h_" + std::to_string(i + 1), for_all_basis([&](const Sparse& e) {
                     return module.apply_word({i, i + 1, i}, e) == module.apply_word({i + 1, i, i + 1}, e);
                   })});
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      out.push_back({"commute h_" + std::to_string(i) + " h_" + std::to_string(j), for_all_basis([&](const Sparse& e) {
                       return module.apply_word({i, j}, e) == module.apply_word({j, i}, e);
                     })});
  return out;
}

/// One check per column element and per Garnir element of the module's own shape.
template <ScalarRing R>
std::vector<RelationCheck> check_annihilators(const SpechtModule<R>& module) {
  std::vector<RelationCheck> out;
  const auto v = module.to_sparse(module.superstandard_vector());
  for (const auto& c : column_elements(module.shape()))
    out.push_back({"column 1+h_" + std::to_string(c.anchor), module.apply(c.element(), v).empty()});
  for (const auto& g : garnir_elements(module.shape()))
    out.push_back({"garnir G_" + std::to_string(g.anchor), module.apply(g.element(), v).empty()});
  return out;
}

/// True iff every column and Garnir element annihilates v_{t_minus}.
template <ScalarRing R>
bool verify_annihilators(const Partition& shape, const R& ring) {
  const auto checks = check_annihilators(SpechtModule<R>(shape, ring));
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

/// Trace of h(word) on S^shape.
template <ScalarRing R>
typename R::value_type character_trace(const Partition& shape, const std::vector<int>& word, const R& ring) {
  return SpechtModule<R>(shape, ring).word_matrix(word).trace();
}

}  // namespace hecke
