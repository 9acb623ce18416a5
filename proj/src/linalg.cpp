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

#include "ncoh/linalg.hpp"

#include <algorithm>

namespace ncoh::linalg {

template <class K>
void add_scaled(SparseVec<K>& dst, const K& c, const SparseVec<K>& src) {
  if (c.is_zero() || src.empty()) return;
  SparseVec<K> out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == dst.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      K s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

template <class K>
SparseVec<K> scaled(const SparseVec<K>& v, const K& c) {
  if (c.is_zero()) return {};
  SparseVec<K> out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * c);
  return out;
}

template <class K>
K coefficient(const SparseVec<K>& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index key) { return e.first < key; });
  if (it != v.end() && it->first == i) return it->second;
  return K::zero();
}

template <class K>
void append_shifted(SparseVec<K>& dst, const SparseVec<K>& v, Index offset) {
  if (v.empty()) return;
  if (dst.empty() || dst.back().first < v.front().first + offset) {
    for (const auto& [i, x] : v) dst.emplace_back(i + offset, x);
    return;
  }
  add_scaled(dst, K::one(), [&] {
    SparseVec<K> s;
    s.reserve(v.size());
    for (const auto& [i, x] : v) s.emplace_back(i + offset, x);
    return s;
  }());
}

template <class K>
Mat<K> Mat<K>::from_dense(const std::vector<std::vector<long>>& rows) {
  Index cols = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
  Mat m(static_cast<Index>(rows.size()), cols);
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, K(rows[r][c]));
  return m;
}

template <class K>
Mat<K> Mat<K>::from_columns(const std::vector<SparseVec<K>>& columns, Index rows) {
  Mat m(rows, static_cast<Index>(columns.size()));
  for (Index c = 0; c < m.cols_; ++c)
    for (const auto& [r, x] : columns[c]) m.data_[r].emplace_back(c, x);
  return m;
}

template <class K>
void Mat<K>::set(Index r, Index c, const K& value) {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, Index key) { return e.first < key; });
  if (it != row.end() && it->first == c) {
    if (value.is_zero())
      row.erase(it);
    else
      it->second = value;
  } else if (!value.is_zero()) {
    row.insert(it, {c, value});
  }
}

template <class K>
std::vector<SparseVec<K>> Mat<K>::columns() const {
  std::vector<SparseVec<K>> out(cols_);
  for (Index r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r]) out[c].emplace_back(r, x);
  return out;
}

template <class K>
Echelon<K>::Echelon(Index dim, PivotSide side) : dim_(dim), side_(side), pivot_row_(dim, -1) {}

template <class K>
SparseVec<K> Echelon<K>::reduce(SparseVec<K> v) const {
  if (rows_.empty()) return v;
  if (side_ == PivotSide::Leftmost) {
    std::size_t pos = 0;
    while (pos < v.size()) {
      std::int32_t r = pivot_row_[v[pos].first];
      if (r < 0) {
        ++pos;
        continue;
      }
      K c = -v[pos].second;
      add_scaled(v, c, rows_[r]);
    }
  } else {
    std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(v.size()) - 1;
    while (pos >= 0) {
      std::int32_t r = pivot_row_[v[pos].first];
      if (r < 0) {
        --pos;
        continue;
      }
      std::size_t after = v.size() - 1 - static_cast<std::size_t>(pos);
      K c = -v[pos].second;
      add_scaled(v, c, rows_[r]);
      pos = static_cast<std::ptrdiff_t>(v.size()) - static_cast<std::ptrdiff_t>(after) - 1;
    }
  }
  return v;
}

template <class K>
bool Echelon<K>::insert(const SparseVec<K>& v) {
  SparseVec<K> r = reduce(v);
  if (r.empty()) return false;
  Index p = pivot_of(r);
  K lead = side_ == PivotSide::Leftmost ? r.front().second : r.back().second;
  if (!lead.is_one()) r = scaled(r, lead.inverse());
  pivot_row_[p] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

template <class K>
RrefResult<K> rref(const Mat<K>& m) {
  Echelon<K> ech(m.cols());
  for (Index r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  std::vector<SparseVec<K>> rows = ech.rows();
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });

  std::vector<std::int32_t> pivot_row(m.cols(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) pivot_row[rows[i].front().first] = static_cast<std::int32_t>(i);

  // Back substitution: rows below i are already fully reduced, so clearing
  // their pivot columns from row i never reintroduces another pivot column.
  for (std::size_t i = rows.size(); i-- > 0;) {
    SparseVec<K>& v = rows[i];
    std::size_t pos = 1;
    while (pos < v.size()) {
      std::int32_t r = pivot_row[v[pos].first];
      if (r < 0) {
        ++pos;
        continue;
      }
      K c = -v[pos].second;
      add_scaled(v, c, rows[r]);
    }
  }

  RrefResult<K> out{Mat<K>(m.rows(), m.cols()), {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.pivots.push_back(rows[i].front().first);
    out.reduced.row(static_cast<Index>(i)) = std::move(rows[i]);
  }
  return out;
}

template <class K>
Index rank(const Mat<K>& m) {
  Echelon<K> ech(m.cols());
  for (Index r = 0; r < m.rows() && !ech.full(); ++r) ech.insert(m.row(r));
  return ech.rank();
}

template <class K>
std::vector<SparseVec<K>> kernel_basis(const Mat<K>& m) {
  RrefResult<K> res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : res.pivots) is_pivot[p] = true;
  std::vector<SparseVec<K>> cols = res.reduced.columns();
  std::vector<SparseVec<K>> basis;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec<K> v;
    v.reserve(cols[f].size() + 1);
    for (const auto& [r, x] : cols[f]) v.emplace_back(res.pivots[r], -x);
    v.emplace_back(f, K::one());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
std::vector<SparseVec<K>> complement_basis(const std::vector<SparseVec<K>>& sub, Index dim) {
  Echelon<K> ech(dim);
  for (const auto& v : sub) ech.insert(v);
  std::vector<SparseVec<K>> out;
  for (Index j = 0; j < dim && !ech.full(); ++j)
    if (ech.insert(unit_vector<K>(j))) out.push_back(unit_vector<K>(j));
  return out;
}

template <class K>
std::vector<std::size_t> extend_basis(const std::vector<SparseVec<K>>& sub,
                                      const std::vector<SparseVec<K>>& candidates, Index dim) {
  Echelon<K> ech(dim);
  for (const auto& v : sub) ech.insert(v);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < candidates.size() && !ech.full(); ++i)
    if (ech.insert(candidates[i])) chosen.push_back(i);
  return chosen;
}

#define NCOH_INSTANTIATE(K)                                                                          \
  template void add_scaled<K>(SparseVec<K>&, const K&, const SparseVec<K>&);                         \
  template SparseVec<K> scaled<K>(const SparseVec<K>&, const K&);                                    \
  template K coefficient<K>(const SparseVec<K>&, Index);                                             \
  template void append_shifted<K>(SparseVec<K>&, const SparseVec<K>&, Index);                        \
  template class Mat<K>;                                                                             \
  template class Echelon<K>;                                                                         \
  template RrefResult<K> rref<K>(const Mat<K>&);                                                     \
  template Index rank<K>(const Mat<K>&);                                                             \
  template std::vector<SparseVec<K>> kernel_basis<K>(const Mat<K>&);                                 \
  template std::vector<SparseVec<K>> complement_basis<K>(const std::vector<SparseVec<K>>&, Index);   \
  template std::vector<std::size_t> extend_basis<K>(const std::vector<SparseVec<K>>&,                \
                                                    const std::vector<SparseVec<K>>&, Index);

NCOH_INSTANTIATE(Rational)
NCOH_INSTANTIATE(ModP)

}  // namespace ncoh::linalg
