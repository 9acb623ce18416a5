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

#include <random>

#include "doctest.h"
#include "ncoh/grmod.hpp"

using namespace ncoh;
using linalg::Index;
using Vec = linalg::SparseVec<ModP>;

namespace {

AlgebraPresentation t2() { return make_presentation("T2", {{"x", 1}, {"y", 1}}, {}); }
AlgebraPresentation mono() { return make_presentation("xy", {{"x", 1}, {"y", 1}}, {"x*y"}); }
AlgebraPresentation ex1() { return make_presentation("ex1", {{"x", 1}, {"y", 1}, {"z", 1}}, {"x*y", "y*z", "x*z - z*x"}); }
AlgebraPresentation comm() { return make_presentation("comm", {{"x", 1}, {"y", 1}}, {"x*y - y*x"}); }

NcPoly<ModP> P(const AlgebraPresentation& p, const std::string& s) { return to_ncpoly<ModP>(parse_poly(s, p.gens), p.gens); }

// Tor_n(k, k)_d from the normalized bar complex B_n = (A_+)^{⊗n}, b(a_1|…|a_n) =
// Σ_{i<n} (-1)^i (a_1|…|a_i a_{i+1}|…|a_n). Shares only the multiplication
// table with the library.
struct BarOracle {
  const GradedAlgebra<ModP>& A;

  std::vector<std::vector<int>> compositions(int d, int n) const {
    if (n == 0) return d == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= d - (n - 1); ++first)
      for (auto rest : compositions(d - first, n - 1)) {
        rest.insert(rest.begin(), first);
        out.push_back(rest);
      }
    return out;
  }

  // basis of B_n(d): (composition, multi-index)
  struct Cell {
    std::vector<int> degs;
    std::vector<Index> idx;
  };
  std::vector<Cell> cells(int d, int n) const {
    std::vector<Cell> out;
    for (const auto& c : compositions(d, n)) {
      std::vector<Index> idx(c.size(), 0);
      bool any = std::all_of(c.begin(), c.end(), [&](int e) { return A.dim(e) > 0; });
      while (any) {
        out.push_back({c, idx});
        std::size_t k = idx.size();
        while (k > 0) {
          --k;
          if (++idx[k] < A.dim(c[k])) break;
          idx[k] = 0;
          if (k == 0) any = false;
        }
        if (idx.empty()) break;
      }
    }
    return out;
  }

  std::size_t rank_b(int d, int n) const {  // b: B_n → B_{n-1}
    if (n <= 1) return 0;
    auto src = cells(d, n);
    auto dst = cells(d, n - 1);
    std::map<std::pair<std::vector<int>, std::vector<Index>>, Index> pos;
    for (Index i = 0; i < dst.size(); ++i) pos[{dst[i].degs, dst[i].idx}] = i;
    std::vector<Vec> cols;
    for (const auto& cell : src) {
      Vec col;
      for (int i = 0; i + 1 < n; ++i) {
        auto prod = A.multiply(cell.degs[i], linalg::unit_vector<ModP>(cell.idx[i]), cell.degs[i + 1],
                               linalg::unit_vector<ModP>(cell.idx[i + 1]));
        ModP sign = (i % 2 == 0) ? ModP(-1) : ModP(1);  // (-1)^{i+1} with 0-based i
        for (const auto& [j, c] : prod) {
          std::vector<int> degs;
          std::vector<Index> idx;
          for (int k = 0; k < n; ++k) {
            if (k == i + 1) continue;
            degs.push_back(k == i ? cell.degs[i] + cell.degs[i + 1] : cell.degs[k]);
            idx.push_back(k == i ? j : cell.idx[k]);
          }
          linalg::add_scaled(col, sign * c, Vec{{pos.at({degs, idx}), ModP(1)}});
        }
      }
      cols.push_back(col);
    }
    if (cols.empty()) return 0;
    return linalg::rank(linalg::Mat<ModP>::from_columns(cols, static_cast<Index>(dst.size())));
  }

  std::size_t tor(int n, int d) const {
    if (n == 0) return d == 0 ? 1 : 0;
    return cells(d, n).size() - rank_b(d, n) - rank_b(d, n + 1);
  }
};

}  // namespace

TEST_CASE("component bases") {
  auto A = GradedAlgebra<ModP>::from_presentation(t2(), 8);
  auto free = ModulePresentation<ModP>::free(FreeModule{{0}});
  for (int d = 0; d <= 6; ++d) {
    auto b = component_basis(A, free, d);
    REQUIRE(b.size() == A.dim(d));
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].second == A.basis(d)[i]);
  }
  auto quot = ModulePresentation<ModP>::cyclic_quotient({P(t2(), "x")});
  CHECK(component_dim(A, quot, 0) == 1);
  for (int d = 1; d <= 8; ++d) CHECK(component_dim(A, quot, d) == (std::size_t{1} << (d - 1)));
  // surviving words are exactly those not starting with x
  for (const auto& [k, w] : component_basis(A, quot, 4)) CHECK(w[0] != 0);
  ModulePresentation<ModP> zero{ModuleMap<ModP>::identity(FreeModule{{0, 2}})};
  for (int d = 0; d <= 6; ++d) CHECK(component_basis(A, zero, d).empty());
}

TEST_CASE("kernel generators") {
  auto A = GradedAlgebra<ModP>::from_presentation(mono(), 9);
  CHECK(kernel_min_generators(A, ModuleMap<ModP>::identity(FreeModule{{0, 1}}), 8).degrees.empty());

  // e ↦ x on A(-1) → A: x·y^a x^b = 0 iff a >= 1
  auto f = ModuleMap<ModP>::zero(FreeModule{{1}}, FreeModule{{0}});
  f.entries[0][0] = P(mono(), "x");
  MapEvaluator<ModP> ev(A, f);
  for (int d = 1; d <= 9; ++d) CHECK(ev.kernel(d).size() == static_cast<std::size_t>(d - 1));
  auto gens = kernel_min_generators(A, f, 9);
  REQUIRE(gens.degrees == std::vector<int>{2});
  auto polys = ev.source().to_polys(2, gens.elements[0]);
  CHECK(polys[0].monic() == P(mono(), "y"));
}

TEST_CASE("simple module over the free algebra") {
  auto p = t2();
  auto A = GradedAlgebra<ModP>::from_presentation(p, 9);
  auto k = ModulePresentation<ModP>::simple(p.gens);
  auto res = minimal_resolution(A, k, 9);
  CHECK(res.term(0).shifts == std::vector<int>{0});
  CHECK(res.term(1).shifts == std::vector<int>{1, 1});
  CHECK(res.term(2).shifts.empty());
  auto audit = audit_resolution(A, k, res);
  CHECK(audit.ok());
  CHECK(audit.euler_applicable);
  auto free = ModulePresentation<ModP>::free(FreeModule{{0, 3}});
  auto t = tor_dims(A, free, 9);
  CHECK(t.total(0) == 2);
  CHECK(t.total(1) == 0);
  CHECK(t.total(2) == 0);
}

TEST_CASE("Tor of k against the bar complex") {
  for (const auto& p : {mono(), ex1(), comm(), t2()}) {
    auto A = GradedAlgebra<ModP>::from_presentation(p, 6);
    BarOracle bar{A};
    auto k = ModulePresentation<ModP>::simple(p.gens);
    auto res = minimal_resolution(A, k, 5);
    auto t = tor_profile(res);
    CHECK(audit_resolution(A, k, res).ok());
    for (int n = 0; n <= 2; ++n)
      for (int d = 0; d <= 5; ++d) CHECK_MESSAGE(t.at(static_cast<std::size_t>(n), d) == bar.tor(n, d), p.label << " n=" << n << " d=" << d);
  }
  // k<x,y>/(xy): the single relation gives Tor_2 in degree 2 only
  auto A = GradedAlgebra<ModP>::from_presentation(mono(), 9);
  auto t = tor_dims(A, ModulePresentation<ModP>::simple(mono().gens), 8);
  CHECK(t.at(2, 2) == 1);
  CHECK(t.total(2) == 1);
}

TEST_CASE("free algebra: random presentations have free syzygies") {
  auto p = t2();
  auto A = GradedAlgebra<ModP>::from_presentation(p, 8);
  std::mt19937 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t r0 = 1 + rng() % 2;
    std::size_t r1 = 1 + rng() % 3;
    FreeModule f0, f1;
    for (std::size_t i = 0; i < r0; ++i) f0.shifts.push_back(static_cast<int>(rng() % 2));
    for (std::size_t i = 0; i < r1; ++i) f1.shifts.push_back(2 + static_cast<int>(rng() % 2));
    auto r = ModuleMap<ModP>::zero(f1, f0);
    for (std::size_t k = 0; k < r0; ++k)
      for (std::size_t l = 0; l < r1; ++l) {
        int deg = f1.shifts[l] - f0.shifts[k];
        for (const auto& w : enumerate_words(p.gens, deg))
          if (rng() % 3 == 0) r.entries[k][l].add_term(w, ModP(static_cast<long>(1 + rng() % 4)));
      }
    ModulePresentation<ModP> m{r};
    auto res = minimal_resolution(A, m, 6);
    auto t = tor_profile(res);
    CHECK(t.total(2) == 0);
    auto audit = audit_resolution(A, m, res);
    CHECK(audit.exact);
    CHECK(audit.minimal);
  }
}

TEST_CASE("module map validation") {
  auto f = ModuleMap<ModP>::zero(FreeModule{{1}}, FreeModule{{0}});
  f.entries[0][0] = P(t2(), "x*y");
  CHECK_THROWS_AS(f.validate(), Error);
}
