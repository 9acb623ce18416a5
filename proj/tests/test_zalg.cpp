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

#include "doctest.h"
#include "ncoh/coherence.hpp"
#include "ncoh/zalg.hpp"
#include "oracle.hpp"

using namespace ncoh;

namespace {

using ZPtr = std::shared_ptr<const ZAlgebraWindow<ModP>>;

template <class K = ModP>
std::shared_ptr<const ZAlgebraWindow<K>> window(const AlgebraPresentation& p, int lo, int hi) {
  auto A = std::make_shared<const GradedAlgebra<K>>(GradedAlgebra<K>::from_presentation(p, hi - lo));
  return std::make_shared<const ZAlgebraWindow<K>>(ZAlgebraWindow<K>::from_graded(A, lo, hi));
}

NcPoly<ModP> P(const GeneratorTable& t, const std::string& s) { return to_ncpoly<ModP>(parse_poly(s, t), t); }

}  // namespace

TEST_CASE("Z-algebra windows") {
  SUBCASE("one generator") {
    auto Z = window(make_presentation("k[x]", {{"x", 1}}, {}), -3, 3);
    for (int i = -3; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) CHECK(Z->dim(i, j) == 1);
    CHECK(Z->dim(2, 1) == 0);
    CHECK(Z->audit().ok());
  }
  SUBCASE("tensor algebra") {
    auto Z = window(corpus_entry("T2").presentation, 0, 4);
    for (int i = 0; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) CHECK(Z->dim(i, j) == (std::size_t{1} << (j - i)));
    auto audit = Z->audit();
    CHECK(audit.ok());
    CHECK(audit.checks > 0);
  }
  SUBCASE("commutative model against the span oracle") {
    auto Z = window(commutative_model(), 0, 6);
    for (int i = 0; i <= 6; ++i)
      for (int j = i; j <= 6; ++j) {
        CHECK(Z->dim(i, j) == static_cast<std::size_t>(j - i + 1));
        CHECK(Z->dim(i, j) == oracle::quotient_dim(2, {{{"ab", 1}, {"ba", -1}}}, j - i));
      }
    CHECK(Z->audit().ok());
  }
  SUBCASE("remark and ex2") {
    CHECK(window(corpus_entry("remark").presentation, -2, 6)->audit().ok());
    CHECK(window(corpus_entry("ex2").presentation, 0, 5)->audit().ok());
  }
  SUBCASE("window wider than the bound") {
    auto A = std::make_shared<const GradedAlgebra<ModP>>(GradedAlgebra<ModP>::from_presentation(commutative_model(), 4));
    try {
      ZAlgebraWindow<ModP>::from_graded(A, 0, 5);
      FAIL("expected DegreeBoundExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegreeBoundExceeded);
    }
  }
}

TEST_CASE("module transport") {
  const auto comm = commutative_model();
  auto Z = window(comm, -2, 6);
  SUBCASE("A and A(j) become projectives") {
    for (int j : {0, 2, 5}) {
      auto viaGraded = transport_module<ModP>(Z, ModulePresentation<ModP>::free(FreeModule{{-j}}));
      auto direct = projective_module<ModP>(Z, j);
      for (int i = -2; i <= 6; ++i) {
        CHECK(viaGraded.dim(i) == Z->dim(i, j));
        CHECK(direct.dim(i) == Z->dim(i, j));
      }
      CHECK(viaGraded.audit().ok());
      CHECK(direct.audit().ok());
    }
  }
  SUBCASE("k becomes S_0") {
    auto S = transport_module<ModP>(Z, ModulePresentation<ModP>::simple(comm.gens));
    for (int i = -2; i <= 6; ++i) CHECK(S.dim(i) == (i == 0 ? 1u : 0u));
    auto S0 = simple_module<ModP>(Z, 0);
    CHECK(S0.dims() == S.dims());
  }
  SUBCASE("two routes give the same action") {
    auto Zc = window(comm, -2, 6);
    ProjectivePresentation<ModP> pp{{3, 4}, {2, 2}, {{P(comm.gens, "x"), P(comm.gens, "y")}, {NcPoly<ModP>(), P(comm.gens, "x^2")}}};
    auto direct = cokernel_module<ModP>(Zc, pp);
    auto graded = transport_module<ModP>(Zc, gamma_star_presentation(direct));
    REQUIRE(direct.dims() == graded.dims());
    for (int j = -2; j <= 6; ++j)
      for (int i = -2; i <= j; ++i)
        for (linalg::Index c = 0; c < Zc->dim(i, j); ++c)
          for (linalg::Index e = 0; e < direct.dim(j); ++e) CHECK(direct.act_basis(j, i, c, e) == graded.act_basis(j, i, c, e));
    CHECK(direct.audit().ok());
  }
}

TEST_CASE("truncation") {
  auto Z = window(commutative_model(), -2, 8);
  auto P5 = projective_module<ModP>(Z, 5);
  SUBCASE("P_j over its truncation at j - 1 is S_j") {
    auto T = truncate_below(P5, 4);
    for (int i = -2; i <= 8; ++i) CHECK(P5.dim(i) - T.dim(i) == (i == 5 ? 1u : 0u));
    CHECK(T.audit().ok());
    CHECK_FALSE(T.presentation().has_value());
  }
  SUBCASE("edges") {
    CHECK(truncate_below(P5, -3).total_dim() == 0);
    CHECK(truncate_below(P5, 8).dims() == P5.dims());
  }
  SUBCASE("truncations are generated at the cut") {
    for (int n : {4, 3, 2}) {
      auto gens = truncate_below(P5, n).new_generators();
      for (int i = -2; i <= 8; ++i)
        CHECK(gens[static_cast<std::size_t>(i + 2)] == (i == n ? static_cast<std::size_t>(5 - n + 1) : 0u));
    }
  }
}

TEST_CASE("Hom on a window") {
  auto Z = window(commutative_model(), -2, 8);
  const auto& g = commutative_model().gens;
  std::vector<ZModuleWindow<ModP>> mods{
      projective_module<ModP>(Z, 4),
      cokernel_module<ModP>(Z, {{5}, {4}, {{P(g, "x")}}}),
      cokernel_module<ModP>(Z, {{6}, {5, 5}, {{P(g, "x"), P(g, "y")}}}),
      simple_module<ModP>(Z, 3),
  };
  // Yoneda: Hom(P_a, M) = M_a
  for (const auto& m : mods)
    for (int a = -2; a <= 8; ++a) CHECK(hom_dim(projective_module<ModP>(Z, a), m) == m.dim(a));
  CHECK(hom_dim(mods[3], mods[3]) == 1);
  CHECK(hom_dim(mods[3], mods[0]) == 0);
}

TEST_CASE("cohproj Hom") {
  SUBCASE("commutative model: b - a + 1") {
    auto Z = window(commutative_model(), -2, 12);
    for (int a = 0; a <= 5; ++a)
      for (int b = a; b <= 5; ++b) {
        auto h = cohproj_hom(projective_module<ModP>(Z, a), projective_module<ModP>(Z, b));
        CHECK(h.stabilized);
        CHECK(h.value == oracle::quotient_dim(2, {{{"ab", 1}, {"ba", -1}}}, b - a));
      }
  }
  SUBCASE("tensor algebra grows") {
    auto Z = window(corpus_entry("T2").presentation, 0, 6);
    auto h = cohproj_hom(projective_module<ModP>(Z, 6), projective_module<ModP>(Z, 6));
    CHECK_FALSE(h.stabilized);
    CHECK(h.to_string() == "NOT_STABILIZED");
    REQUIRE(h.dims.size() == 6);
    for (std::size_t k = 0; k < h.dims.size(); ++k) CHECK(h.dims[k] == (std::size_t{1} << (2 * k)));
  }
  SUBCASE("bounded target") {
    auto Z = window(commutative_model(), -2, 12);
    auto h = cohproj_hom(projective_module<ModP>(Z, 10), simple_module<ModP>(Z, 8));
    CHECK(h.stabilized);
    CHECK(h.value == 0);
  }
  SUBCASE("window too shallow") {
    auto Z = window(commutative_model(), 0, 5);
    try {
      cohproj_hom(projective_module<ModP>(Z, 1), projective_module<ModP>(Z, 2));
      FAIL("expected WindowTooShallow");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::WindowTooShallow);
    }
  }
  SUBCASE("Q and Fp agree") {
    auto Zq = window<Rational>(commutative_model(), -2, 10);
    auto Zp = window<ModP>(commutative_model(), -2, 10);
    auto hq = cohproj_hom(projective_module<Rational>(Zq, 2), projective_module<Rational>(Zq, 5));
    auto hp = cohproj_hom(projective_module<ModP>(Zp, 2), projective_module<ModP>(Zp, 5));
    CHECK(hq.dims == hp.dims);
  }
}

TEST_CASE("tensor algebra projectives") {
  auto ok = tensor_projective_iso_check(2, 0, 8);
  CHECK(ok.pass);
  CHECK(ok.module_map);
  REQUIRE(ok.indices.size() == 8);
  for (std::size_t k = 0; k < ok.indices.size(); ++k) {
    const auto expect = std::size_t{1} << (0 - 1 - ok.indices[k] + 1);
    CHECK(ok.source_dims[k] == expect);
    CHECK(ok.target_dims[k] == expect);
    CHECK(ok.ranks[k] == expect);
  }
  CHECK(ok.letters == std::vector<std::string>{"v1", "v2"});
  CHECK(tensor_projective_iso_check(1, 3, 6).pass);
  CHECK(tensor_projective_iso_check(3, 2, 5).pass);
  auto bad = tensor_projective_iso_check(2, 0, 8, true);
  CHECK_FALSE(bad.pass);
  CHECK(bad.module_map);
}

TEST_CASE("Gamma-star") {
  auto Z = window(commutative_model(), -2, 12);
  SUBCASE("projectives are free") {
    auto m = gamma_star_presentation(projective_module<ModP>(Z, 3));
    CHECK(m.generators().shifts == std::vector<int>{-3});
    CHECK(m.relations.source.rank() == 0);
  }
  SUBCASE("S_0 goes to k and vanishes in cohproj") {
    // the window needs room below index 0 for the tail to show
    auto Zs = window(commutative_model(), -6, 8);
    auto m = gamma_star_presentation(simple_module<ModP>(Zs, 0));
    const auto& A = Zs->graded();
    for (int d = -2; d <= 4; ++d) CHECK(component_dim(A, m, d) == (d == 0 ? 1u : 0u));
    auto back = transport_module<ModP>(Zs, m);
    for (int a : {-1, 0, 3, 6}) {
      auto h = cohproj_hom(projective_module<ModP>(Zs, a), back);
      CHECK(h.stabilized);
      CHECK(h.value == 0);
    }
  }
  SUBCASE("truncations are not presented") {
    try {
      gamma_star_presentation(truncate_below(projective_module<ModP>(Z, 3), 2));
      FAIL("expected NotPresentedByProjectives");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPresentedByProjectives);
    }
  }
  SUBCASE("round trip on six presentations") {
    auto rep = serre_round_trip(-2, 12, 9);
    CHECK(rep.names.size() == 6);
    CHECK(rep.transports_agree);
    CHECK(rep.preserved);
    for (std::size_t s = 0; s < 6; ++s)
      for (std::size_t t = 0; t < 6; ++t) {
        CHECK(rep.before[s][t].stabilized);
        CHECK(rep.before[s][t].value == rep.after[s][t].value);
      }
    CHECK(rep.before[0][1].value == 3);  // Hom(P_b, P_{b+2}) = A_2
    CHECK(rep.before[3][3].value == 2);  // k[y][x]/(x^2) has length two at the point
    CHECK(rep.before[4][4].value == 0);  // S is bounded
  }
}
