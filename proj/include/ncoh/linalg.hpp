// Copyright 2026 The ncoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncoh/scalar.hpp"

namespace ncoh::linalg {

using Index = std::uint32_t;

/// Sparse vector: entries sorted by index, no stored zeros.
template <class K>
using SparseVec = std::vector<std::pair<Index, K>>;

template <class K>
SparseVec<K> unit_vector(Index i) {
  return {{i, K::one()}};
}

/// dst += c * src.
template <class K>
void add_scaled(SparseVec<K>& dst, const K& c, const SparseVec<K>& src);

template <class K>
SparseVec<K> scaled(const SparseVec<K>& v, const K& c);

template <class K>
K coefficient(const SparseVec<K>& v, Index i);

/// Places `v` at `offset` inside a longer vector.
template <class K>
void append_shifted(SparseVec<K>& dst, const SparseVec<K>& v, Index offset);

/// Sparse matrix stored by rows.
template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(Index rows, Index cols) : cols_(cols), data_(rows) {}

  static Mat from_dense(const std::vector<std::vector<long>>& rows);
  /// Builds the matrix whose j-th column is `columns[j]`.
  static Mat from_columns(const std::vector<SparseVec<K>>& columns, Index rows);

  Index rows() const { return static_cast<Index>(data_.size()); }
  Index cols() const { return cols_; }
  const SparseVec<K>& row(Index r) const { return data_[r]; }
  SparseVec<K>& row(Index r) { return data_[r]; }
  K at(Index r, Index c) const { return coefficient(data_[r], c); }
  void set(Index r, Index c, const K& value);
  std::vector<SparseVec<K>> columns() const;

  friend bool operator==(const Mat& a, const Mat& b) { return a.cols_ == b.cols_ && a.data_ == b.data_; }

 private:
  Index cols_ = 0;
  std::vector<SparseVec<K>> data_;
};

template <class K>
struct RrefResult {
  Mat<K> reduced;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row-echelon form with leftmost-nonzero pivoting. Nonzero rows
/// come first, ordered by pivot column; the shape is preserved.
template <class K>
RrefResult<K> rref(const Mat<K>& m);

template <class K>
Index rank(const Mat<K>& m);

/// Basis of the right null space, one vector per free column in increasing
/// column order (the free column carries coefficient 1).
template <class K>
std::vector<SparseVec<K>> kernel_basis(const Mat<K>& m);

enum class PivotSide { Leftmost, Rightmost };

/// Incrementally built echelon basis of a subspace of K^dim.
///
/// With Leftmost pivots reduction sweeps indices upward; with Rightmost it
/// sweeps downward and the residue of a vector lives on the greedy
/// smallest-index complement of the subspace (see complement_basis).
template <class K>
class Echelon {
 public:
  explicit Echelon(Index dim, PivotSide side = PivotSide::Leftmost);

  Index dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool full() const { return rank() == dim_; }

  /// Adds `v` to the basis; returns false when it was already in the span.
  bool insert(const SparseVec<K>& v);
  SparseVec<K> reduce(SparseVec<K> v) const;
  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }
  bool is_pivot(Index col) const { return pivot_row_[col] >= 0; }
  const std::vector<SparseVec<K>>& rows() const { return rows_; }

 private:
  Index pivot_of(const SparseVec<K>& v) const { return side_ == PivotSide::Leftmost ? v.front().first : v.back().first; }

  Index dim_;
  PivotSide side_;
  std::vector<SparseVec<K>> rows_;
  std::vector<std::int32_t> pivot_row_;
};

/// Unit vectors e_j, smallest j first, that extend span(sub) to K^dim.
template <class K>
std::vector<SparseVec<K>> complement_basis(const std::vector<SparseVec<K>>& sub, Index dim);

/// Indices of the candidates that, taken greedily in order, extend span(sub)
/// to span(sub ∪ candidates).
template <class K>
std::vector<std::size_t> extend_basis(const std::vector<SparseVec<K>>& sub,
                                      const std::vector<SparseVec<K>>& candidates, Index dim);

}  // namespace ncoh::linalg
