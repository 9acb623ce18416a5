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

#include <string>
#include <unordered_map>
#include <vector>

#include "ncoh/freealg.hpp"
#include "ncoh/linalg.hpp"
#include "ncoh/presentation.hpp"

namespace ncoh {

/// Relations of degree <= max_degree (families expanded) over K.
template <class K>
std::vector<NcPoly<K>> relation_polys(const AlgebraPresentation& p, int max_degree);

/// One line of the completion log.
struct CompletionStep {
  int degree = 0;
  std::size_t relations = 0;  // input relations of this degree
  std::size_t overlaps = 0;   // S-polynomials formed at this degree
  std::size_t added = 0;      // basis elements with a leading word of this degree
};

/// Reduced two-sided Gröbner basis of a homogeneous ideal, complete for all
/// degrees <= bound(). Built degree by degree: at degree d the relations and
/// S-polynomials of that degree are reduced by the (final) lower part and
/// interreduced by row reduction with the largest word as pivot.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(GeneratorTable gens, const std::vector<NcPoly<K>>& relations, int bound);

  static GroebnerBasis complete(const AlgebraPresentation& p, int bound) {
    return GroebnerBasis(p.gens, relation_polys<K>(p, bound), bound);
  }

  const GeneratorTable& gens() const { return gens_; }
  int bound() const { return bound_; }
  /// Monic elements sorted by degree, then by leading word.
  const std::vector<NcPoly<K>>& elements() const { return elements_; }
  const std::vector<CompletionStep>& log() const { return log_; }

  /// True when no leading word occurs as a factor.
  bool is_normal(const Word& w) const { return !find_factor(w.letters()).has_value(); }
  /// True when no leading word is a suffix.
  bool suffix_normal(const std::string& letters) const;

  /// Unique representative of q modulo the ideal; throws DegreeBoundExceeded
  /// when deg q > bound().
  NcPoly<K> normal_form(const NcPoly<K>& q) const;
  NcPoly<K> normal_form(const Word& w) const;

  /// Normal words of degree d in increasing order, d = 0..max_degree.
  std::vector<std::vector<Word>> normal_words(int max_degree) const;
  std::vector<std::size_t> hilbert_dims(int max_degree) const;

 private:
  struct Hit {
    std::size_t element;
    std::size_t pos;
  };
  std::optional<Hit> find_factor(const std::string& letters) const;
  void add_element(NcPoly<K> f);
  void check_degree(int d) const;

  GeneratorTable gens_;
  int bound_ = 0;
  std::vector<NcPoly<K>> elements_;
  std::vector<CompletionStep> log_;
  std::unordered_map<std::string, std::size_t> leading_;  // leading word -> element
  std::vector<std::size_t> lengths_;                      // distinct leading-word lengths
  mutable std::unordered_map<std::string, NcPoly<K>> nf_cache_;
};

/// dim A_d computed from the span of {u r v} in the free component F_d,
/// without any rewriting. Exponential in d; meant as an oracle.
template <class K>
std::size_t component_dim_bruteforce(const AlgebraPresentation& p, int d);

/// Finite-dimensional view of the truncated algebra: normal-word bases per
/// degree and right multiplication by generators as sparse matrices.
template <class K>
class GradedAlgebra {
 public:
  using Vec = linalg::SparseVec<K>;

  explicit GradedAlgebra(GroebnerBasis<K> gb);
  static GradedAlgebra from_presentation(const AlgebraPresentation& p, int bound) {
    return GradedAlgebra(GroebnerBasis<K>::complete(p, bound));
  }

  const GroebnerBasis<K>& groebner() const { return gb_; }
  const GeneratorTable& gens() const { return gb_.gens(); }
  int bound() const { return gb_.bound(); }
  /// dim A_d; 0 for d < 0, throws DegreeBoundExceeded for d > bound().
  std::size_t dim(int d) const;
  const std::vector<Word>& basis(int d) const;
  std::optional<linalg::Index> index_of(const Word& w) const;

  /// Coordinates of the normal form of q in the basis of its degree.
  Vec to_vector(const NcPoly<K>& q) const;
  NcPoly<K> to_poly(int d, const Vec& v) const;

  /// v (degree d) times generator g.
  Vec rmul_letter(int d, const Vec& v, Letter g) const;
  /// v (degree d) times the word w.
  Vec rmul_word(int d, Vec v, const Word& w) const;
  /// u (degree du) times v (degree dv).
  Vec multiply(int du, const Vec& u, int dv, const Vec& v) const;

 private:
  GroebnerBasis<K> gb_;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::unordered_map<std::string, linalg::Index>> index_;
  // rmul_[d][i][g]: basis_[d][i] * g, empty when d + weight(g) > bound
  std::vector<std::vector<std::vector<Vec>>> rmul_;
};

}  // namespace ncoh
