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
#include "ncoh/veronese.hpp"
#include "oracle.hpp"

using namespace ncoh;

namespace {

// Relations of the discovered presentation in the oracle's letter encoding.
std::vector<oracle::IntPoly> int_relations(const AlgebraPresentation& p) {
  std::vector<oracle::IntPoly> out;
  for (const auto& r : p.relations) {
    oracle::IntPoly q;
    for (const auto& [letters, c] : r.terms) {
      REQUIRE(c.get_den() == 1);
      std::string w;
      for (char g : letters) w += static_cast<char>('a' + g);
      q[w] = c.get_num().get_si();
    }
    out.push_back(q);
  }
  return out;
}

std::vector<std::size_t> sequence(std::size_t len, std::size_t (*f)(std::size_t)) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(f(i));
  return v;
}

}  // namespace

TEST_CASE("tensor algebra: free Veronese") {
  auto v = veronese_presentation<ModP>(corpus_entry("T2").presentation, 2, 10);
  CHECK(v.symbols.size() == 4);
  CHECK(v.symbols[0] == "x_x");
  CHECK(v.relation_count() == 0);
  CHECK(v.window == 5);
  CHECK(v.hilbert_presented == sequence(6, [](std::size_t i) -> std::size_t { return std::size_t{1} << (2 * i); }));
  CHECK(v.hilbert_consistent);
}

TEST_CASE("commutative model: one relation modulo commutators") {
  auto v = veronese_presentation<ModP>(corpus_entry("comm").presentation, 2, 12);
  CHECK(v.symbols.size() == 3);
  REQUIRE(v.degrees.size() == 6);
  CHECK(v.degrees[0].new_relations.empty());
  CHECK(v.degrees[1].internal == 2);
  CHECK(v.degrees[1].ambient == 4);
  CHECK(v.degrees[1].new_relations.size() == 4);  // three commutators and ac - b^2
  CHECK(v.degrees[1].new_modulo_commutators == 1);
  for (std::size_t k = 2; k < v.degrees.size(); ++k) CHECK(v.degrees[k].new_relations.empty());
  CHECK(v.last_relation_degree == 2);
  CHECK(v.trailing_silent() == 4);
  CHECK_FALSE(v.monomial_only);
  CHECK(v.hilbert_presented == sequence(7, [](std::size_t i) { return 2 * i + 1; }));

  // The found relations present the right algebra according to the span oracle.
  auto rels = int_relations(v.presentation);
  for (int i = 0; i <= 4; ++i)
    CHECK(oracle::quotient_dim(3, rels, i) == static_cast<std::size_t>(2 * i + 1));
  // and the ambient side agrees with the commutative oracle.
  for (int i = 0; i <= 4; ++i)
    CHECK(oracle::quotient_dim(2, {{{"ab", 1}, {"ba", -1}}}, 2 * i) == v.hilbert_ambient[static_cast<std::size_t>(i)]);
}

TEST_CASE("remark algebra: finitely many monomial relations") {
  const auto& p = corpus_entry("remark").presentation;
  auto v = veronese_presentation<ModP>(p, 2, 12);
  CHECK(v.monomial_only);
  CHECK(v.relation_count() > 0);
  CHECK(v.last_relation_degree == 2);
  CHECK(v.trailing_silent() >= 3);
  auto rels = int_relations(v.presentation);
  for (int i = 0; i <= 4; ++i)
    CHECK(oracle::quotient_dim(4, rels, i) == v.hilbert_ambient[static_cast<std::size_t>(i)]);
}

TEST_CASE("Veronese presentations agree over Q and Fp") {
  for (const char* label : {"comm", "remark", "ex1", "ex2"}) {
    CAPTURE(label);
    const auto& p = corpus_entry(label).presentation;
    auto q = veronese_presentation<Rational>(p, 2, 10);
    auto f = veronese_presentation<ModP>(p, 2, 10);
    CHECK(q.hilbert_presented == f.hilbert_presented);
    CHECK(q.relation_count() == f.relation_count());
    CHECK(q.relation_count_modulo_commutators() == f.relation_count_modulo_commutators());
  }
}

TEST_CASE("Veronese of a Veronese") {
  for (const char* label : {"comm", "remark", "ex1", "T2"}) {
    CAPTURE(label);
    const auto& p = corpus_entry(label).presentation;
    int D = std::string(label) == "T2" ? 8 : 12;
    auto v2 = veronese_presentation<ModP>(p, 2, D);
    auto v22 = veronese_presentation<ModP>(v2.presentation, 2, v2.window);
    auto v4 = veronese_presentation<ModP>(p, 4, D);
    REQUIRE(v22.window == v4.window);
    CHECK(v22.hilbert_presented == v4.hilbert_presented);
  }
}

TEST_CASE("step and degree-one preconditions") {
  const auto& comm = corpus_entry("comm").presentation;
  CHECK_THROWS_AS(veronese_presentation<ModP>(comm, 1, 10), Error);
  auto weighted = make_presentation("w", {{"x", 1}, {"z", 2}}, {"x*z - z*x"});
  CHECK_NOTHROW(veronese_presentation<ModP>(weighted, 2, 8));
  try {
    veronese_presentation<ModP>(weighted, 2, 8, true);
    FAIL("expected NotDegreeOneGenerated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDegreeOneGenerated);
  }
  CHECK_THROWS_AS(pm_module_presentations<ModP>(weighted, 2, 8), Error);
}

TEST_CASE("P^m modules over the Veronese") {
  SUBCASE("tensor algebra") {
    auto reps = pm_module_presentations<ModP>(corpus_entry("T2").presentation, 2, 10);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].generators[0] == 1);
    CHECK(reps[1].generators[0] == 2);
    for (const auto& r : reps) {
      CHECK(r.generated_in_bottom_degree);
      CHECK(r.spans_components);
      CHECK(std::all_of(r.syzygies.begin(), r.syzygies.end(), [](std::size_t s) { return s == 0; }));
    }
  }
  SUBCASE("commutative model") {
    auto reps = pm_module_presentations<ModP>(corpus_entry("comm").presentation, 2, 12);
    CHECK(reps[1].generators[0] == 2);
    CHECK(reps[1].generated_in_bottom_degree);
    CHECK(reps[1].trailing_silent() >= 3);
    // odd part of k[x,y] over the even part: two relations, both in internal degree 1
    CHECK(reps[1].syzygies == std::vector<std::size_t>{0, 2, 0, 0, 0, 0});
  }
  SUBCASE("decomposition audit") {
    for (const char* label : {"comm", "remark", "ex1", "T2"}) {
      CAPTURE(label);
      const auto& p = corpus_entry(label).presentation;
      const int D = 9;
      auto A = GradedAlgebra<ModP>::from_presentation(p, D);
      for (int n : {2, 3}) {
        auto reps = pm_module_presentations<ModP>(p, n, D);
        REQUIRE(reps.size() == static_cast<std::size_t>(n));
        std::size_t covered = 0;
        for (const auto& r : reps) {
          CHECK(r.spans_components);
          CHECK(r.generated_in_bottom_degree);
          CHECK(r.generators[0] == A.dim(r.m));
          covered += static_cast<std::size_t>(r.window) + 1;
        }
        CHECK(covered == static_cast<std::size_t>(D) + 1);  // each ambient degree in exactly one P^m
      }
    }
  }
  SUBCASE("remark: P^1 is not finitely presented") {
    auto reps = pm_module_presentations<ModP>(corpus_entry("remark").presentation, 2, 12);
    CHECK(reps[1].syzygies.back() > 0);
  }
}

TEST_CASE("cross-check of A against its Veronese") {
  ProbeConfig algebra_cfg;
  ProbeConfig small;
  small.D = 6;
  SUBCASE("remark: expected disagreement") {
    auto c = veronese_cross_check<ModP>(corpus_entry("remark").presentation, 2, 12, algebra_cfg, algebra_cfg);
    CHECK(c.algebra_probe.aggregate.kind == VerdictKind::Growing);
    CHECK(c.veronese_probe.aggregate.kind == VerdictKind::Stable);
    CHECK_FALSE(c.agree);
  }
  SUBCASE("tensor algebra") {
    auto c = veronese_cross_check<ModP>(corpus_entry("T2").presentation, 2, 12, algebra_cfg, small);
    CHECK(c.algebra_probe.aggregate.kind == VerdictKind::Stable);
    CHECK(c.veronese_probe.aggregate.kind == VerdictKind::Stable);
    CHECK(c.agree);
    CHECK(c.extrapolated);
  }
  SUBCASE("ex1") {
    auto c = veronese_cross_check<ModP>(corpus_entry("ex1").presentation, 2, 12, algebra_cfg, small);
    CHECK(c.algebra_probe.aggregate.kind == VerdictKind::Growing);
    CHECK(c.veronese_probe.aggregate.kind == VerdictKind::Growing);
    CHECK(c.agree);
  }
}
