#pragma once

// Exact row echelon bases over the rationals.
//
// Columns are integers; a smaller index is more significant, so a row's
// pivot is its smallest nonzero column. Rows are stored sparsely and are
// kept in echelon form only (no back substitution): a forward sweep in
// column order fully reduces any vector against them, which is all that
// membership and rank need.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vircalc/error.hpp"
#include "vircalc/poly.hpp"
#include "vircalc/rational.hpp"

namespace vircalc {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

class EchelonBasis {
 public:
  explicit EchelonBasis(int ncols = 0) : ncols_(ncols), pivot_row_(static_cast<std::size_t>(ncols), -1) {}

  int ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  int pivot_of(std::size_t row) const { return rows_[row].front().first; }
  bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }

  /// Remainder of v after elimination against the basis.
  SparseRow reduce(const SparseRow& v) const {
    dense_.assign(static_cast<std::size_t>(ncols_), Rational());
    int lo = ncols_;
    for (const auto& [c, x] : v) {
      dense_[static_cast<std::size_t>(c)] = x;
      lo = std::min(lo, c);
    }
    for (int c = lo; c < ncols_; ++c) {
      const Rational x = dense_[static_cast<std::size_t>(c)];
      if (x.is_zero()) continue;
      const int r = pivot_row_[static_cast<std::size_t>(c)];
      if (r < 0) continue;
      for (const auto& [rc, rx] : rows_[static_cast<std::size_t>(r)]) {
        dense_[static_cast<std::size_t>(rc)] -= x * rx;
      }
    }
    SparseRow out;
    for (int c = lo; c < ncols_; ++c) {
      if (!dense_[static_cast<std::size_t>(c)].is_zero()) out.emplace_back(c, dense_[static_cast<std::size_t>(c)]);
    }
    return out;
  }

  bool contains(const SparseRow& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns the new (pivot-normalized) row, or nullopt if v was dependent.
  std::optional<SparseRow> insert(const SparseRow& v) {
    SparseRow r = reduce(v);
    if (r.empty()) return std::nullopt;
    const Rational inv = r.front().second.inverse();
    for (auto& [c, x] : r) x *= inv;
    pivot_row_[static_cast<std::size_t>(r.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(r);
    return r;
  }

 private:
  int ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow> rows_;
  mutable std::vector<Rational> dense_;
};

/// A finite set of monomials with a fixed significance order, used to turn
/// polynomials into sparse rows and back.
template <class Key>
class Columns {
 public:
  Columns() = default;
  explicit Columns(std::vector<Key> keys) : keys_(std::move(keys)) {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (!pos_.emplace(keys_[i], static_cast<int>(i)).second) throw Error("duplicate column key");
    }
  }

  int size() const { return static_cast<int>(keys_.size()); }
  const Key& key(int i) const { return keys_[static_cast<std::size_t>(i)]; }
  int index(const Key& k) const {
    auto it = pos_.find(k);
    return it == pos_.end() ? -1 : it->second;
  }

  /// nullopt when some monomial of p lies outside the column set.
  std::optional<SparseRow> to_row(const SparsePoly<Key>& p) const {
    SparseRow row;
    row.reserve(p.size());
    for (const auto& [k, c] : p) {
      const int i = index(k);
      if (i < 0) return std::nullopt;
      row.emplace_back(i, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  SparsePoly<Key> to_poly(const SparseRow& row) const {
    std::vector<typename SparsePoly<Key>::Term> terms;
    terms.reserve(row.size());
    for (const auto& [c, x] : row) terms.emplace_back(key(c), x);
    return SparsePoly<Key>(std::move(terms));
  }

 private:
  std::vector<Key> keys_;
  std::map<Key, int> pos_;
};

/// Monomials s^a t^c with a ≤ A, c ≤ C. Inner-box monomials (a ≤ inner_A,
/// c ≤ inner_C) come last, so echelon rows pivoting there lie entirely in the
/// inner box. Within each group the graded order (s-degree, then t-degree)
/// runs from high to low.
inline Columns<BiExp> box_columns(int A, int C, int inner_A = -1, int inner_C = -1) {
  std::vector<BiExp> outer, inner;
  for (int a = A; a >= 0; --a) {
    for (int c = C; c >= 0; --c) {
      const BiExp k{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c)};
      if (a <= inner_A && c <= inner_C) {
        inner.push_back(k);
      } else {
        outer.push_back(k);
      }
    }
  }
  outer.insert(outer.end(), inner.begin(), inner.end());
  return Columns<BiExp>(std::move(outer));
}

/// Basis of a span of polynomials in the given columns; polynomials leaving
/// the column set are rejected.
template <class Key>
EchelonBasis echelon_of(const Columns<Key>& cols, const std::vector<SparsePoly<Key>>& polys) {
  EchelonBasis basis(cols.size());
  for (const auto& p : polys) {
    auto row = cols.to_row(p);
    if (!row) throw Error("polynomial outside the column set");
    basis.insert(*row);
  }
  return basis;
}

/// span(a) == span(b), both given as polynomials inside `cols`.
template <class Key>
bool same_span(const Columns<Key>& cols, const std::vector<SparsePoly<Key>>& a, const std::vector<SparsePoly<Key>>& b) {
  const EchelonBasis ea = echelon_of(cols, a);
  const EchelonBasis eb = echelon_of(cols, b);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& p : a) {
    if (!eb.contains(*cols.to_row(p))) return false;
  }
  return true;
}

}  // namespace vircalc
