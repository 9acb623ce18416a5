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

#include "ncoh/groebner.hpp"

#include <algorithm>
#include <set>

namespace ncoh {

using linalg::Index;

template <class K>
std::vector<NcPoly<K>> relation_polys(const AlgebraPresentation& p, int max_degree) {
  std::vector<NcPoly<K>> out;
  for (const auto& raw : relations_up_to(p, max_degree)) {
    NcPoly<K> f = to_ncpoly<K>(raw, p.gens);
    if (!f.is_zero()) out.push_back(std::move(f));  // may vanish mod p
  }
  return out;
}

template <class K>
GroebnerBasis<K>::GroebnerBasis(GeneratorTable gens, const std::vector<NcPoly<K>>& relations, int bound)
    : gens_(std::move(gens)), bound_(bound) {
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  struct Overlap {
    std::size_t f, g, k;
  };
  std::vector<std::vector<const NcPoly<K>*>> by_degree(static_cast<std::size_t>(bound) + 1);
  for (const auto& r : relations) {
    if (r.is_zero() || r.degree() > bound) continue;
    if (r.degree() == 0) throw Error(ErrorKind::NonHomogeneousRelation, "constant relation");
    by_degree[static_cast<std::size_t>(r.degree())].push_back(&r);
  }
  std::vector<std::vector<Overlap>> pending(static_cast<std::size_t>(bound) + 1);

  auto register_overlaps = [&](std::size_t fi, std::size_t gi) {
    const std::string& u = elements_[fi].leading_word().letters();
    const std::string& v = elements_[gi].leading_word().letters();
    std::size_t max_k = std::min(u.size(), v.size());
    for (std::size_t k = 1; k < max_k; ++k) {
      if (u.compare(u.size() - k, k, v, 0, k) != 0) continue;
      int deg = elements_[fi].degree() + gens_.degree_of(std::string_view(v).substr(k));
      if (deg <= bound_) pending[static_cast<std::size_t>(deg)].push_back({fi, gi, k});
    }
  };

  for (int d = 1; d <= bound; ++d) {
    CompletionStep step;
    step.degree = d;
    std::vector<NcPoly<K>> candidates;
    for (const auto* r : by_degree[static_cast<std::size_t>(d)]) {
      ++step.relations;
      candidates.push_back(normal_form(*r));
    }
    for (const auto& ov : pending[static_cast<std::size_t>(d)]) {
      ++step.overlaps;
      const auto& f = elements_[ov.f];
      const auto& g = elements_[ov.g];
      const std::string& u = f.leading_word().letters();
      const std::string& v = g.leading_word().letters();
      std::string b = v.substr(ov.k);
      std::string a = u.substr(0, u.size() - ov.k);
      Word wb(b, gens_.degree_of(b));
      Word wa(a, gens_.degree_of(a));
      NcPoly<K> s = f.sandwich(Word(), wb) - g.sandwich(wa, Word());
      candidates.push_back(normal_form(s));
    }
    // interreduce: columns are the words in decreasing order
    std::set<Word, WordLess> words;
    for (const auto& c : candidates)
      for (const auto& [w, x] : c.terms()) words.insert(w);
    if (!words.empty()) {
      std::vector<Word> columns(words.rbegin(), words.rend());
      std::unordered_map<std::string, Index> col;
      for (Index i = 0; i < columns.size(); ++i) col.emplace(columns[i].letters(), i);
      linalg::Mat<K> m(static_cast<Index>(candidates.size()), static_cast<Index>(columns.size()));
      for (Index r = 0; r < candidates.size(); ++r) {
        auto& row = m.row(r);
        for (const auto& [w, x] : candidates[r].terms()) row.emplace_back(col.at(w.letters()), x);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      auto red = linalg::rref(m);
      std::size_t first_new = elements_.size();
      // rows come largest leading word first; store ascending
      for (Index r = red.rank(); r-- > 0;) {
        NcPoly<K> f;
        for (const auto& [c, x] : red.reduced.row(r)) f.add_term(columns[c], x);
        add_element(f.monic());
        ++step.added;
      }
      for (std::size_t gi = first_new; gi < elements_.size(); ++gi)
        for (std::size_t fi = 0; fi <= gi; ++fi) {
          register_overlaps(fi, gi);
          if (fi != gi) register_overlaps(gi, fi);
        }
      nf_cache_.clear();
    }
    pending[static_cast<std::size_t>(d)].clear();
    log_.push_back(step);
  }
}

template <class K>
void GroebnerBasis<K>::add_element(NcPoly<K> f) {
  const std::string& lw = f.leading_word().letters();
  leading_.emplace(lw, elements_.size());
  if (std::find(lengths_.begin(), lengths_.end(), lw.size()) == lengths_.end()) {
    lengths_.push_back(lw.size());
    std::sort(lengths_.begin(), lengths_.end());
  }
  elements_.push_back(std::move(f));
}

template <class K>
auto GroebnerBasis<K>::find_factor(const std::string& letters) const -> std::optional<Hit> {
  for (std::size_t pos = 0; pos < letters.size(); ++pos)
    for (std::size_t len : lengths_) {
      if (pos + len > letters.size()) break;
      auto it = leading_.find(letters.substr(pos, len));
      if (it != leading_.end()) return Hit{it->second, pos};
    }
  return std::nullopt;
}

template <class K>
bool GroebnerBasis<K>::suffix_normal(const std::string& letters) const {
  for (std::size_t len : lengths_) {
    if (len > letters.size()) break;
    if (leading_.count(letters.substr(letters.size() - len))) return false;
  }
  return true;
}

template <class K>
void GroebnerBasis<K>::check_degree(int d) const {
  if (d > bound_)
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(d) + " exceeds the completion bound " + std::to_string(bound_));
}

template <class K>
NcPoly<K> GroebnerBasis<K>::normal_form(const Word& w) const {
  check_degree(w.degree());
  if (auto it = nf_cache_.find(w.letters()); it != nf_cache_.end()) return it->second;
  NcPoly<K> out;
  auto hit = find_factor(w.letters());
  if (!hit) {
    out = NcPoly<K>::monomial(w);
  } else {
    const auto& f = elements_[hit->element];
    std::size_t len = f.leading_word().length();
    std::string a = w.letters().substr(0, hit->pos);
    std::string b = w.letters().substr(hit->pos + len);
    const Word& lead = f.leading_word();
    for (const auto& [t, c] : f.terms()) {
      if (t == lead) continue;
      std::string s = a + t.letters() + b;
      out -= normal_form(Word(s, w.degree())).scaled(c);
    }
  }
  nf_cache_.emplace(w.letters(), out);
  return out;
}

template <class K>
NcPoly<K> GroebnerBasis<K>::normal_form(const NcPoly<K>& q) const {
  NcPoly<K> out;
  if (q.is_zero()) return out;
  check_degree(q.degree());
  for (const auto& [w, c] : q.terms()) out += normal_form(w).scaled(c);
  return out;
}

template <class K>
std::vector<std::vector<Word>> GroebnerBasis<K>::normal_words(int max_degree) const {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
  out[0].push_back(Word());
  for (int e = 1; e <= max_degree; ++e) {
    auto& level = out[static_cast<std::size_t>(e)];
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      int w = gens_.weight(static_cast<Letter>(g));
      if (w > e) continue;
      for (const Word& prefix : out[static_cast<std::size_t>(e - w)]) {
        std::string s = prefix.letters() + static_cast<char>(g);
        if (suffix_normal(s)) level.emplace_back(std::move(s), e);
      }
    }
    std::sort(level.begin(), level.end(), WordLess{});
  }
  return out;
}

template <class K>
std::vector<std::size_t> GroebnerBasis<K>::hilbert_dims(int max_degree) const {
  check_degree(max_degree);
  std::vector<std::size_t> out;
  for (const auto& level : normal_words(max_degree)) out.push_back(level.size());
  return out;
}

template <class K>
std::size_t component_dim_bruteforce(const AlgebraPresentation& p, int d) {
  auto words = enumerate_words(p.gens, d);
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < words.size(); ++i) index.emplace(words[i].letters(), i);
  linalg::Echelon<K> span(static_cast<Index>(words.size()));
  for (const auto& r : relation_polys<K>(p, d)) {
    int e = r.degree();
    for (int a = 0; a <= d - e && !span.full(); ++a) {
      auto left = enumerate_words(p.gens, a);
      auto right = enumerate_words(p.gens, d - e - a);
      for (const auto& u : left)
        for (const auto& v : right) {
          linalg::SparseVec<K> vec;
          for (const auto& [w, c] : r.terms()) vec.emplace_back(index.at(u.letters() + w.letters() + v.letters()), c);
          std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          span.insert(vec);
        }
    }
  }
  return words.size() - span.rank();
}

template <class K>
GradedAlgebra<K>::GradedAlgebra(GroebnerBasis<K> gb) : gb_(std::move(gb)) {
  basis_ = gb_.normal_words(gb_.bound());
  index_.resize(basis_.size());
  for (std::size_t d = 0; d < basis_.size(); ++d)
    for (Index i = 0; i < basis_[d].size(); ++i) index_[d].emplace(basis_[d][i].letters(), i);
  const auto& gens = gb_.gens();
  rmul_.resize(basis_.size());
  for (std::size_t d = 0; d < basis_.size(); ++d) {
    rmul_[d].resize(basis_[d].size());
    for (Index i = 0; i < basis_[d].size(); ++i) {
      rmul_[d][i].resize(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int w = gens.weight(static_cast<Letter>(g));
        if (static_cast<int>(d) + w > bound()) continue;
        std::string s = basis_[d][i].letters() + static_cast<char>(g);
        rmul_[d][i][g] = to_vector(NcPoly<K>::monomial(Word(s, static_cast<int>(d) + w)));
      }
    }
  }
}

template <class K>
std::size_t GradedAlgebra<K>::dim(int d) const {
  if (d < 0) return 0;
  if (d > bound())
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(d) + " exceeds the completion bound " + std::to_string(bound()));
  return basis_[static_cast<std::size_t>(d)].size();
}

template <class K>
const std::vector<Word>& GradedAlgebra<K>::basis(int d) const {
  static const std::vector<Word> empty;
  if (dim(d) == 0) return empty;
  return basis_[static_cast<std::size_t>(d)];
}

template <class K>
std::optional<Index> GradedAlgebra<K>::index_of(const Word& w) const {
  if (w.degree() < 0 || w.degree() > bound()) return std::nullopt;
  const auto& m = index_[static_cast<std::size_t>(w.degree())];
  auto it = m.find(w.letters());
  if (it == m.end()) return std::nullopt;
  return it->second;
}

template <class K>
auto GradedAlgebra<K>::to_vector(const NcPoly<K>& q) const -> Vec {
  Vec out;
  if (q.is_zero()) return out;
  NcPoly<K> nf = gb_.normal_form(q);
  const auto& m = index_[static_cast<std::size_t>(q.degree())];
  for (const auto& [w, c] : nf.terms()) out.emplace_back(m.at(w.letters()), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <class K>
NcPoly<K> GradedAlgebra<K>::to_poly(int d, const Vec& v) const {
  NcPoly<K> out;
  for (const auto& [i, c] : v) out.add_term(basis_[static_cast<std::size_t>(d)][i], c);
  return out;
}

template <class K>
auto GradedAlgebra<K>::rmul_letter(int d, const Vec& v, Letter g) const -> Vec {
  int target = d + gens().weight(g);
  dim(target);  // bound check
  Vec out;
  for (const auto& [i, c] : v) linalg::add_scaled(out, c, rmul_[static_cast<std::size_t>(d)][i][g]);
  return out;
}

template <class K>
auto GradedAlgebra<K>::rmul_word(int d, Vec v, const Word& w) const -> Vec {
  dim(d + w.degree());
  for (std::size_t k = 0; k < w.length() && !v.empty(); ++k) {
    v = rmul_letter(d, v, w[k]);
    d += gens().weight(w[k]);
  }
  return v;
}

template <class K>
auto GradedAlgebra<K>::multiply(int du, const Vec& u, int dv, const Vec& v) const -> Vec {
  dim(du + dv);
  Vec out;
  for (const auto& [j, c] : v) linalg::add_scaled(out, c, rmul_word(du, u, basis_[static_cast<std::size_t>(dv)][j]));
  return out;
}

#define NCOH_INSTANTIATE(K)                                                                    \
  template std::vector<NcPoly<K>> relation_polys<K>(const AlgebraPresentation&, int);          \
  template class GroebnerBasis<K>;                                                             \
  template std::size_t component_dim_bruteforce<K>(const AlgebraPresentation&, int);           \
  template class GradedAlgebra<K>;

NCOH_INSTANTIATE(Rational)
NCOH_INSTANTIATE(ModP)

}  // namespace ncoh
