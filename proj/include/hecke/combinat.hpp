#pragma once

/**
 * @file combinat.hpp
 * @brief Partitions, Young tableaux, permutations and boundary strips.
 *
 * Conventions used throughout the library:
 *  - rows and columns are 0-based, entries and generator indices are 1-based;
 *  - the "column reading" of a tableau lists the entries down the first
 *    column, then down each successive column;
 *  - t_minus (the superstandard tableau) has column reading 1, 2, ..., n.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_positive(const std::string& token, std::string_view context) {
  std::string t;
  for (char c : token)
    if (c != ' ') t += c;
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 6)
    throw std::invalid_argument("malformed " + std::string(context) + ": '" + token + "'");
  return std::stoi(t);
}

template <class It>
std::string join(It first, It last, std::string_view sep) {
  std::ostringstream os;
  for (It it = first; it != last; ++it) {
    if (it != first) os << sep;
    os << *it;
  }
  return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

class Partition {
 public:
  Partition() = default;
  /// Trailing zero parts are dropped; anything else non-partition throws.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "6,3,3,1"
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    for (const auto& tok : detail::split(text, ',')) parts.push_back(detail::parse_positive(tok, "partition"));
    return Partition(std::move(parts));
  }

  int size() const noexcept { return n_; }
  int num_rows() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Length of row r; 0 past the last row.
  int row_length(int r) const { return r < num_rows() ? parts_[r] : 0; }
  int num_cols() const { return parts_.empty() ? 0 : parts_[0]; }
  int column_length(int c) const {
    int len = 0;
    while (len < num_rows() && parts_[len] > c) ++len;
    return len;
  }
  Partition conjugate() const {
    std::vector<int> cols;
    for (int c = 0; c < num_cols(); ++c) cols.push_back(column_length(c));
    return Partition(std::move(cols));
  }
  bool contains(int row, int col) const { return row >= 0 && col >= 0 && col < row_length(row); }

  std::string to_string() const { return detail::join(parts_.begin(), parts_.end(), ","); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

/// One-line notation: images()[k-1] = w(k).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[v] = true;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }
  /// The simple transposition s_i = (i, i+1) in S_n.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
    auto w = identity(n);
    std::swap(w.images_[i - 1], w.images_[i]);
    return w;
  }
  /// s_{i1} s_{i2} ... s_{ik} as a composite of functions.
  static Permutation from_word(int n, const std::vector<int>& word) {
    auto w = identity(n);
    for (int i : word) w = w * simple(n, i);
    return w;
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(k - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Number of inversions, which is the Coxeter length.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j) inv += images_[i] > images_[j];
    return inv;
  }
  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<int>(k) + 1;
    return Permutation(std::move(inv));
  }
  /// Composition of functions: (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> im(a.images_.size());
    for (std::size_t k = 0; k < im.size(); ++k) im[k] = a.images_[b.images_[k] - 1];
    return Permutation(std::move(im));
  }
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A reduced word for w, peeling the smallest left descent first:
/// while some i+1 appears before i in one-line notation, record the smallest
/// such i and replace w by s_i w. Then w = s_{i1} s_{i2} ... s_{ik}.
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  std::vector<int> pos(w.degree() + 2);  // pos[v] = position of value v
  for (int k = 0; k < w.degree(); ++k) pos[w.images()[k]] = k;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < w.degree(); ++i) {
      if (pos[i + 1] < pos[i]) {
        word.push_back(i);
        std::swap(pos[i], pos[i + 1]);
        changed = true;
        break;
      }
    }
  }
  return word;
}

// ---------------------------------------------------------------------------
// Tableau
// ---------------------------------------------------------------------------

/// A bijective filling of a Young diagram by 1..n, stored row-major.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = Partition(parts);
    if (shape_.num_rows() != static_cast<int>(rows_.size())) throw std::invalid_argument("tableau has an empty row");
    std::vector<bool> seen(shape_.size() + 1, false);
    for (const auto& r : rows_)
      for (int v : r) {
        if (v < 1 || v > shape_.size() || seen[v])
          throw std::invalid_argument("tableau entries must be a bijective filling by 1..n");
        seen[v] = true;
      }
  }

  /// "1,3,5/2,4"
  static Tableau parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : detail::split(text, '/')) {
      std::vector<int> entries;
      for (const auto& tok : detail::split(row, ',')) entries.push_back(detail::parse_positive(tok, "tableau"));
      rows.push_back(std::move(entries));
    }
    return Tableau(std::move(rows));
  }

  /// Fills the shape from a column reading word.
  static Tableau from_column_word(const Partition& shape, const std::vector<int>& word) {
    std::vector<std::vector<int>> rows(shape.num_rows());
    for (int r = 0; r < shape.num_rows(); ++r) rows[r].resize(shape.row_length(r));
    std::size_t k = 0;
    for (int c = 0; c < shape.num_cols(); ++c)
      for (int r = 0; r < shape.column_length(c); ++r) rows[r][c] = word.at(k++);
    return Tableau(std::move(rows));
  }

  const Partition& shape() const noexcept { return shape_; }
  int size() const noexcept { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int at(int row, int col) const { return rows_.at(row).at(col); }
  std::vector<int> column(int c) const {
    std::vector<int> out;
    for (int r = 0; r < shape_.column_length(c); ++r) out.push_back(rows_[r][c]);
    return out;
  }

  std::pair<int, int> position_of(int entry) const {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c)
        if (rows_[r][c] == entry) return {r, c};
    throw std::out_of_range("entry " + std::to_string(entry) + " not in tableau");
  }

  std::vector<int> column_word() const {
    std::vector<int> out;
    out.reserve(size());
    for (int c = 0; c < shape_.num_cols(); ++c)
      for (int r = 0; r < shape_.column_length(c); ++r) out.push_back(rows_[r][c]);
    return out;
  }

  bool is_column_increasing() const {
    for (int r = 1; r < shape_.num_rows(); ++r)
      for (int c = 0; c < shape_.row_length(r); ++c)
        if (rows_[r][c] < rows_[r - 1][c]) return false;
    return true;
  }
  bool is_row_increasing() const {
    for (const auto& row : rows_)
      for (std::size_t c = 1; c < row.size(); ++c)
        if (row[c] < row[c - 1]) return false;
    return true;
  }
  bool is_standard() const { return is_column_increasing() && is_row_increasing(); }

  /// Copy with the entries i and j interchanged.
  Tableau swapped(int i, int j) const {
    Tableau out = *this;
    for (auto& row : out.rows_)
      for (int& v : row) {
        if (v == i) {
          v = j;
        } else if (v == j) {
          v = i;
        }
      }
    return out;
  }

  /// Replaces every entry e by w(e).
  Tableau relabeled(const Permutation& w) const {
    if (w.degree() != size()) throw std::invalid_argument("permutation degree does not match tableau size");
    Tableau out = *this;
    for (auto& row : out.rows_)
      for (int& v : row) v = w(v);
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) out += "/";
      out += detail::join(rows_[r].begin(), rows_[r].end(), ",");
    }
    return out;
  }

  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// t_minus: entries increase down the leftmost column, then successive columns.
inline Tableau superstandard(const Partition& shape) {
  std::vector<int> word(shape.size());
  std::iota(word.begin(), word.end(), 1);
  return Tableau::from_column_word(shape, word);
}

/// True iff i occurs strictly before j in the column reading of t.
inline bool precedes(int i, int j, const Tableau& t) {
  const auto word = t.column_word();
  const auto pi = std::find(word.begin(), word.end(), i);
  const auto pj = std::find(word.begin(), word.end(), j);
  if (pi == word.end() || pj == word.end()) throw std::out_of_range("precedes: entry not in tableau");
  return pi < pj;
}

/// The permutation w with w(t_minus) = t; its one-line form is the column word of t.
inline Permutation word_of_tableau(const Tableau& t) { return Permutation(t.column_word()); }

/// Standard tableaux of the shape in basis order: compared by the row holding
/// n, then the row holding n-1, and so on down to 1 (lower row index first).
inline std::vector<Tableau> enumerate_standard(const Partition& shape) {
  // Each tableau is built as rows_of[k] = row holding entry k+1.
  std::vector<std::vector<int>> fillings;
  std::vector<int> row_of(shape.size());
  std::vector<int> lengths = shape.parts();
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry == 0) {
      fillings.push_back(row_of);
      return;
    }
    for (int r = 0; r < static_cast<int>(lengths.size()); ++r) {
      const bool corner = lengths[r] > 0 && (r + 1 == static_cast<int>(lengths.size()) || lengths[r + 1] < lengths[r]);
      if (!corner) continue;
      --lengths[r];
      row_of[entry - 1] = r;
      self(self, entry - 1);
      ++lengths[r];
    }
  };
  rec(rec, shape.size());
  std::vector<Tableau> out;
  out.reserve(fillings.size());
  for (const auto& f : fillings) {
    std::vector<std::vector<int>> rows(shape.num_rows());
    for (int k = 0; k < shape.size(); ++k) rows[f[k]].push_back(k + 1);
    out.emplace_back(std::move(rows));
  }
  return out;
}

/// n! / prod(hook lengths), the number of standard tableaux of the shape.
inline std::uint64_t hook_count(const Partition& shape) {
  Integer num = 1, den = 1;
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  for (int r = 0; r < shape.num_rows(); ++r)
    for (int c = 0; c < shape.row_length(r); ++c)
      den *= (shape.row_length(r) - c - 1) + (shape.column_length(c) - r - 1) + 1;
  return (num / den).convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------
// Boundary strips
// ---------------------------------------------------------------------------

struct BoundaryStrip {
  int start_row = 0;
  std::vector<std::pair<int, int>> boxes;  // (row, col), in path order

  int length() const noexcept { return static_cast<int>(boxes.size()); }
  int boxes_in_row(int row) const {
    return static_cast<int>(std::count_if(boxes.begin(), boxes.end(), [row](const auto& b) { return b.first == row; }));
  }
  /// Boxes in the second row (row index 1).
  int second_row_boxes() const { return boxes_in_row(1); }

  friend bool operator==(const BoundaryStrip&, const BoundaryStrip&) = default;
};

/// Every strip that starts at the rightmost box of a row, walks "below if
/// possible, otherwise left", and stops at the bottom of a column.
/// Ordered by start row, then length.
inline std::vector<BoundaryStrip> boundary_strips(const Partition& shape) {
  std::vector<BoundaryStrip> out;
  auto is_column_bottom = [&](int r, int c) { return !shape.contains(r + 1, c); };
  for (int start = 0; start < shape.num_rows(); ++start) {
    BoundaryStrip path{start, {}};
    int r = start, c = shape.row_length(start) - 1;
    while (shape.contains(r, c)) {
      path.boxes.emplace_back(r, c);
      if (is_column_bottom(r, c)) out.push_back(path);
      if (shape.contains(r + 1, c)) {
        ++r;
      } else {
        --c;
      }
    }
  }
  return out;
}

}  // namespace hecke
