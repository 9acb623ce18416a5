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
#include "ncoh/errors.hpp"
#include "ncoh/linalg.hpp"
#include "oracle.hpp"

using namespace ncoh;
using namespace ncoh::linalg;

TEST_CASE_TEMPLATE("rref of small matrices", K, Rational, ModP) {
  auto id = Mat<K>::from_dense({{1, 0}, {0, 1}});
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<Index>{0, 1});

  auto zero = Mat<K>::from_dense({{0, 0}, {0, 0}});
  r = rref(zero);
  CHECK(r.reduced == zero);
  CHECK(r.pivots.empty());

  auto m = Mat<K>::from_dense({{1, 2}, {2, 4}});
  r = rref(m);
  CHECK(r.rank() == 1);
  CHECK(r.pivots == std::vector<Index>{0});
  CHECK(r.reduced == Mat<K>::from_dense({{1, 2}, {0, 0}}));
}

TEST_CASE_TEMPLATE("kernel bases", K, Rational, ModP) {
  CHECK(kernel_basis(Mat<K>::from_dense({{1, 0}, {0, 1}})).empty());

  auto k1 = kernel_basis(Mat<K>::from_dense({{1, -1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == SparseVec<K>{{0, K(1)}, {1, K(1)}});

  auto k2 = kernel_basis(Mat<K>::from_dense({{1, 2}, {2, 4}}));
  REQUIRE(k2.size() == 1);
  // proportional to (2, -1)
  CHECK(coefficient(k2[0], 0) == K(-2) * coefficient(k2[0], 1));
}

TEST_CASE_TEMPLATE("complement basis picks smallest unit vectors", K, Rational, ModP) {
  auto e = [](Index i) { return unit_vector<K>(i); };
  CHECK(complement_basis<K>({}, 2) == std::vector<SparseVec<K>>{e(0), e(1)});
  CHECK(complement_basis<K>({e(0)}, 2) == std::vector<SparseVec<K>>{e(1)});
  SparseVec<K> v{{0, K(1)}, {1, K(1)}};
  CHECK(complement_basis<K>({v}, 3) == std::vector<SparseVec<K>>{e(0), e(2)});
}

TEST_CASE_TEMPLATE("echelon residues live on the greedy complement", K, Rational, ModP) {
  Echelon<K> ech(3, PivotSide::Rightmost);
  ech.insert({{0, K(1)}, {1, K(1)}});
  // complement is {e0, e2}; e1 must reduce onto e0
  auto r = ech.reduce(unit_vector<K>(1));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == 0);
  CHECK(!ech.insert({{0, K(2)}, {1, K(2)}}));
  CHECK(ech.rank() == 1);
}

TEST_CASE("random matrices: rank-nullity, idempotence, dense oracle, Q vs Fp") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> shape(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = shape(rng);
    int cols = shape(rng);
    std::vector<std::vector<long>> dense(rows, std::vector<long>(cols));
    std::vector<std::vector<std::int64_t>> dense64(rows, std::vector<std::int64_t>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        // sparse-ish with repeated rows to force dependencies
        dense[r][c] = (trial % 3 == 0 && r > 0) ? dense[r - 1][c] * 2 : entry(rng);
        dense64[r][c] = dense[r][c];
      }
    auto q = Mat<Rational>::from_dense(dense);
    auto f = Mat<ModP>::from_dense(dense);
    auto rq = rref(q);
    auto rf = rref(f);
    CHECK(rq.rank() + kernel_basis(q).size() == static_cast<std::size_t>(cols));
    CHECK(rf.rank() + kernel_basis(f).size() == static_cast<std::size_t>(cols));
    CHECK(rref(rq.reduced).reduced == rq.reduced);
    CHECK(rq.pivots == rf.pivots);
    CHECK(rf.rank() == oracle::dense_rank_mod(dense64, 32003));
    for (const auto& v : kernel_basis(q))
      for (Index r = 0; r < q.rows(); ++r) {
        Rational s;
        for (const auto& [c, x] : q.row(r)) s += x * coefficient(v, c);
        CHECK(s.is_zero());
      }
  }
}

TEST_CASE("scalars") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Fp 7") == FieldSpec::prime_field(7));
  CHECK(FieldSpec::parse("Fp:101") == FieldSpec::prime_field(101));
  CHECK_THROWS_AS(FieldSpec::parse("Fp 8"), Error);
  {
    FieldScope scope(FieldSpec::prime_field(7));
    CHECK(ModP(3).inverse() == ModP(5));
    CHECK(ModP::from_rational(mpq_class(1, 2)) == ModP(4));
    CHECK(ModP(6).to_string() == "-1");
  }
  CHECK(ModP::modulus() == 32003);
  CHECK(Rational(mpq_class(2, 4)).to_string() == "1/2");
}
