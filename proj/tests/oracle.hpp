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

// Independent reference implementations used only by the tests. They share
// no code with the library beyond the presentation types.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ncoh::oracle {

/// Rank of a dense integer matrix reduced mod p, by textbook elimination.
inline std::size_t dense_rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t iv = inv(m[rank][c]);
    for (auto& x : m[rank]) x = x * iv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      std::int64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Number of words of weighted degree d, by the recursion c(d) = sum_g c(d - w_g).
inline std::uint64_t word_count(const std::vector<int>& weights, int d) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  for (int e = 1; e <= d; ++e)
    for (int w : weights)
      if (w <= e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - w)];
  return c[static_cast<std::size_t>(d)];
}

/// Polynomials over Z in letters 'a'.. as word -> coefficient maps, used to
/// check dimensions of two-sided ideal components independently.
using IntPoly = std::map<std::string, std::int64_t>;

/// dim of (free algebra / ideal)_d for unit-weight generators, by dense rank
/// of all u*r*v over Z/p.
inline std::size_t quotient_dim(int ngens, const std::vector<IntPoly>& rels, int d, std::int64_t p = 32003) {
  std::vector<std::string> words{""};
  for (int i = 0; i < d; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (int g = 0; g < ngens; ++g) next.push_back(w + static_cast<char>('a' + g));
    words = next;
  }
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < words.size(); ++i) idx[words[i]] = i;
  auto all_words = [ngens](int len) {
    std::vector<std::string> ws{""};
    for (int i = 0; i < len; ++i) {
      std::vector<std::string> next;
      for (const auto& w : ws)
        for (int g = 0; g < ngens; ++g) next.push_back(w + static_cast<char>('a' + g));
      ws = next;
    }
    return ws;
  };
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : rels) {
    int e = static_cast<int>(r.begin()->first.size());
    if (e > d) continue;
    for (int a = 0; a <= d - e; ++a)
      for (const auto& u : all_words(a))
        for (const auto& v : all_words(d - e - a)) {
          std::vector<std::int64_t> row(words.size(), 0);
          for (const auto& [w, c] : r) row[idx.at(u + w + v)] += c;
          rows.push_back(std::move(row));
        }
  }
  return words.size() - dense_rank_mod(rows, p);
}

}  // namespace ncoh::oracle
