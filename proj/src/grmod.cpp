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

#include "ncoh/grmod.hpp"

#include <algorithm>

namespace ncoh {

using linalg::Index;

int FreeModule::min_shift(int fallback) const {
  return shifts.empty() ? fallback : *std::min_element(shifts.begin(), shifts.end());
}

// ---------------------------------------------------------------- ModuleMap

template <class K>
ModuleMap<K> ModuleMap<K>::zero(FreeModule source, FreeModule target) {
  ModuleMap f;
  f.entries.assign(target.rank(), std::vector<NcPoly<K>>(source.rank()));
  f.source = std::move(source);
  f.target = std::move(target);
  return f;
}

template <class K>
ModuleMap<K> ModuleMap<K>::identity(const FreeModule& m) {
  auto f = zero(m, m);
  for (std::size_t k = 0; k < m.rank(); ++k) f.entries[k][k] = NcPoly<K>::constant(K::one());
  return f;
}

template <class K>
void ModuleMap<K>::validate() const {
  if (entries.size() != target.rank())
    throw Error(ErrorKind::InvalidArgument, "module map has " + std::to_string(entries.size()) + " rows, target rank " +
                                                std::to_string(target.rank()));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].size() != source.rank())
      throw Error(ErrorKind::InvalidArgument, "module map row " + std::to_string(k) + " has the wrong length");
    for (std::size_t l = 0; l < entries[k].size(); ++l) {
      const auto& e = entries[k][l];
      if (!e.is_zero() && e.degree() != source.shifts[l] - target.shifts[k])
        throw Error(ErrorKind::InvalidArgument, "entry (" + std::to_string(k) + "," + std::to_string(l) + ") has degree " +
                                                    std::to_string(e.degree()) + ", expected " +
                                                    std::to_string(source.shifts[l] - target.shifts[k]));
    }
  }
}

template <class K>
bool ModuleMap<K>::minimal() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!e.is_zero() && e.degree() == 0) return false;
  return true;
}

template <class K>
ModulePresentation<K> ModulePresentation<K>::simple(const GeneratorTable& gens) {
  FreeModule f1;
  for (const auto& g : gens.generators()) f1.shifts.push_back(g.weight);
  auto r = ModuleMap<K>::zero(f1, FreeModule{{0}});
  for (std::size_t g = 0; g < gens.size(); ++g)
    r.entries[0][g] = NcPoly<K>::monomial(Word(std::string(1, static_cast<char>(g)), gens.weight(static_cast<Letter>(g))));
  return {r};
}

template <class K>
ModulePresentation<K> ModulePresentation<K>::cyclic_quotient(const std::vector<NcPoly<K>>& ideal_gens) {
  FreeModule f1;
  for (const auto& g : ideal_gens) f1.shifts.push_back(g.degree());
  auto r = ModuleMap<K>::zero(f1, FreeModule{{0}});
  for (std::size_t i = 0; i < ideal_gens.size(); ++i) r.entries[0][i] = ideal_gens[i];
  return {r};
}

// ----------------------------------------------------------- FreeComponents

template <class K>
std::size_t FreeComponents<K>::dim(int d) const {
  std::size_t n = 0;
  for (int s : F_.shifts) n += A_->dim(d - s);
  return n;
}

template <class K>
Index FreeComponents<K>::offset(int d, std::size_t k) const {
  Index off = 0;
  for (std::size_t j = 0; j < k; ++j) off += static_cast<Index>(A_->dim(d - F_.shifts[j]));
  return off;
}

template <class K>
std::pair<std::size_t, Index> FreeComponents<K>::locate(int d, Index idx) const {
  for (std::size_t k = 0; k < F_.rank(); ++k) {
    auto n = static_cast<Index>(A_->dim(d - F_.shifts[k]));
    if (idx < n) return {k, idx};
    idx -= n;
  }
  throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
}

template <class K>
auto FreeComponents<K>::basis_element(std::size_t k, const Word& w) const -> Vec {
  auto i = A_->index_of(w);
  if (!i) throw Error(ErrorKind::InvalidArgument, "word is not a normal basis word");
  return linalg::unit_vector<K>(offset(F_.shifts[k] + w.degree(), k) + *i);
}

template <class K>
auto FreeComponents<K>::rmul_letter(int d, const Vec& v, Letter g) const -> Vec {
  int w = A_->gens().weight(g);
  Vec out;
  std::size_t pos = 0;
  Index src_off = 0;
  Index dst_off = 0;
  for (std::size_t k = 0; k < F_.rank(); ++k) {
    int e = d - F_.shifts[k];
    auto n = static_cast<Index>(A_->dim(e));
    auto n_next = static_cast<Index>(A_->dim(e + w));
    Vec local;
    while (pos < v.size() && v[pos].first < src_off + n) {
      local.emplace_back(v[pos].first - src_off, v[pos].second);
      ++pos;
    }
    if (!local.empty()) linalg::append_shifted(out, A_->rmul_letter(e, local, g), dst_off);
    src_off += n;
    dst_off += n_next;
  }
  return out;
}

template <class K>
auto FreeComponents<K>::rmul_word(int d, Vec v, const Word& w) const -> Vec {
  for (std::size_t i = 0; i < w.length(); ++i) {
    v = rmul_letter(d, v, w[i]);
    d += A_->gens().weight(w[i]);
  }
  return v;
}

template <class K>
std::vector<NcPoly<K>> FreeComponents<K>::to_polys(int d, const Vec& v) const {
  std::vector<NcPoly<K>> out(F_.rank());
  std::size_t pos = 0;
  Index off = 0;
  for (std::size_t k = 0; k < F_.rank(); ++k) {
    int e = d - F_.shifts[k];
    auto n = static_cast<Index>(A_->dim(e));
    Vec local;
    while (pos < v.size() && v[pos].first < off + n) {
      local.emplace_back(v[pos].first - off, v[pos].second);
      ++pos;
    }
    out[k] = A_->to_poly(e, local);
    off += n;
  }
  return out;
}

template <class K>
auto FreeComponents<K>::from_polys(int d, const std::vector<NcPoly<K>>& polys) const -> Vec {
  Vec out;
  Index off = 0;
  for (std::size_t k = 0; k < F_.rank(); ++k) {
    int e = d - F_.shifts[k];
    if (!polys[k].is_zero()) {
      if (polys[k].degree() != e) throw Error(ErrorKind::InvalidArgument, "component has the wrong degree");
      linalg::append_shifted(out, A_->to_vector(polys[k]), off);
    }
    off += static_cast<Index>(A_->dim(e));
  }
  return out;
}

// ------------------------------------------------------------- MapEvaluator

template <class K>
MapEvaluator<K>::MapEvaluator(const GradedAlgebra<K>& algebra, const ModuleMap<K>& f)
    : A_(&algebra), src_(algebra, f.source), tgt_(algebra, f.target) {
  f.validate();
  base_.resize(f.source.rank());
  cache_.resize(f.source.rank());
  for (std::size_t l = 0; l < f.source.rank(); ++l) {
    std::vector<NcPoly<K>> column(f.target.rank());
    for (std::size_t k = 0; k < f.target.rank(); ++k) column[k] = f.entries[k][l];
    base_[l] = tgt_.from_polys(f.source.shifts[l], column);
  }
}

template <class K>
auto MapEvaluator<K>::image(std::size_t l, int e, Index i) -> const Vec& {
  auto& levels = cache_[l];
  int s = src_.module().shifts[l];
  while (static_cast<int>(levels.size()) <= e) {
    int level = static_cast<int>(levels.size());
    const auto& words = A_->basis(level);
    std::vector<Vec> imgs(words.size());
    for (Index j = 0; j < words.size(); ++j) {
      if (level == 0) {
        imgs[j] = base_[l];
        continue;
      }
      const Word& w = words[j];
      Letter g = w[w.length() - 1];
      int wg = A_->gens().weight(g);
      Word prefix = w.subword(A_->gens(), 0, w.length() - 1);
      Index pi = *A_->index_of(prefix);
      imgs[j] = tgt_.rmul_letter(s + level - wg, levels[static_cast<std::size_t>(level - wg)][pi], g);
    }
    levels.push_back(std::move(imgs));
  }
  return levels[static_cast<std::size_t>(e)][i];
}

template <class K>
auto MapEvaluator<K>::columns(int d) -> std::vector<Vec> {
  std::vector<Vec> cols;
  for (std::size_t l = 0; l < src_.module().rank(); ++l) {
    int e = d - src_.module().shifts[l];
    auto n = static_cast<Index>(A_->dim(e));
    for (Index i = 0; i < n; ++i) cols.push_back(image(l, e, i));
  }
  return cols;
}

template <class K>
auto MapEvaluator<K>::apply(int d, const Vec& x) -> Vec {
  Vec out;
  for (const auto& [idx, c] : x) {
    auto [l, i] = src_.locate(d, idx);
    linalg::add_scaled(out, c, image(l, d - src_.module().shifts[l], i));
  }
  return out;
}

template <class K>
Index MapEvaluator<K>::rank(int d) {
  return linalg::rank(linalg::Mat<K>::from_columns(columns(d), static_cast<Index>(tgt_.dim(d))));
}

template <class K>
auto MapEvaluator<K>::kernel(int d) -> std::vector<Vec> {
  auto cols = columns(d);
  if (cols.empty()) return {};
  return linalg::kernel_basis(linalg::Mat<K>::from_columns(cols, static_cast<Index>(tgt_.dim(d))));
}

// ------------------------------------------------------- minimal generators

template <class K>
ModuleMap<K> SubmoduleGenerators<K>::inclusion(const FreeComponents<K>& ambient) const {
  auto f = ModuleMap<K>::zero(as_free_module(), ambient.module());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    auto polys = ambient.to_polys(degrees[j], elements[j]);
    for (std::size_t k = 0; k < polys.size(); ++k) f.entries[k][j] = std::move(polys[k]);
  }
  return f;
}

template <class K>
SubmoduleGenerators<K> minimal_generators(const FreeComponents<K>& ambient,
                                          const std::function<std::vector<linalg::SparseVec<K>>(int)>& component,
                                          int lo, int hi) {
  SubmoduleGenerators<K> out;
  const auto& gens = ambient.algebra().gens();
  std::vector<std::vector<linalg::SparseVec<K>>> spans;  // spans[d - lo]
  for (int d = lo; d <= hi; ++d) {
    linalg::Echelon<K> span(static_cast<Index>(ambient.dim(d)));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int w = gens.weight(static_cast<Letter>(g));
      if (d - w < lo) continue;
      for (const auto& v : spans[static_cast<std::size_t>(d - w - lo)])
        span.insert(ambient.rmul_letter(d - w, v, static_cast<Letter>(g)));
    }
    for (auto& v : component(d)) {
      if (span.full()) break;
      if (span.insert(v)) {
        out.degrees.push_back(d);
        out.elements.push_back(std::move(v));
      }
    }
    spans.push_back(span.rows());
  }
  return out;
}

template <class K>
SubmoduleGenerators<K> kernel_min_generators(const GradedAlgebra<K>& algebra, const ModuleMap<K>& f, int D) {
  MapEvaluator<K> ev(algebra, f);
  int lo = f.source.min_shift(D + 1);
  return minimal_generators<K>(ev.source(), [&ev](int d) { return ev.kernel(d); }, lo, D);
}

// -------------------------------------------------------- quotient modules

template <class K>
QuotientComponent<K>::QuotientComponent(const FreeComponents<K>& ambient, const std::vector<Vec>& relation_image, int d)
    : image_(static_cast<Index>(ambient.dim(d)), linalg::PivotSide::Rightmost) {
  for (const auto& v : relation_image) image_.insert(v);
  local_.assign(image_.dim(), -1);
  for (Index i = 0; i < image_.dim(); ++i)
    if (!image_.is_pivot(i)) {
      local_[i] = static_cast<std::int64_t>(positions_.size());
      positions_.push_back(i);
    }
}

template <class K>
auto QuotientComponent<K>::coords(const Vec& ambient) const -> Vec {
  Vec out;
  for (const auto& [i, c] : image_.reduce(ambient)) out.emplace_back(static_cast<Index>(local_[i]), c);
  return out;
}

template <class K>
std::vector<std::pair<std::size_t, Word>> component_basis(const GradedAlgebra<K>& algebra,
                                                          const ModulePresentation<K>& m, int d) {
  MapEvaluator<K> rel(algebra, m.relations);
  QuotientComponent<K> q(rel.target(), rel.columns(d), d);
  std::vector<std::pair<std::size_t, Word>> out;
  for (Index pos : q.positions()) {
    auto [k, i] = rel.target().locate(d, pos);
    out.emplace_back(k, algebra.basis(d - m.generators().shifts[k])[i]);
  }
  return out;
}

template <class K>
std::size_t component_dim(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m, int d) {
  MapEvaluator<K> rel(algebra, m.relations);
  return rel.target().dim(d) - rel.rank(d);
}

// ---------------------------------------------------------------- resolution

namespace {

/// [π | r]: P⁰ ⊕ F¹ → F⁰.
template <class K>
ModuleMap<K> join_columns(const ModuleMap<K>& a, const ModuleMap<K>& b) {
  FreeModule src = a.source;
  src.shifts.insert(src.shifts.end(), b.source.shifts.begin(), b.source.shifts.end());
  auto f = ModuleMap<K>::zero(src, a.target);
  for (std::size_t k = 0; k < a.target.rank(); ++k) {
    for (std::size_t l = 0; l < a.source.rank(); ++l) f.entries[k][l] = a.entries[k][l];
    for (std::size_t l = 0; l < b.source.rank(); ++l) f.entries[k][a.source.rank() + l] = b.entries[k][l];
  }
  return f;
}

}  // namespace

template <class K>
TruncatedResolution<K> minimal_resolution(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m, int D,
                                          std::size_t length) {
  const FreeModule& f0 = m.generators();
  MapEvaluator<K> rel(algebra, m.relations);
  TruncatedResolution<K> res;
  res.lo = f0.min_shift(D + 1);
  res.D = D;

  // P⁰: generators e_k not hit by scalar parts of the relations
  std::vector<std::size_t> chosen;
  for (int d = res.lo; d <= D; ++d) {
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < f0.rank(); ++k)
      if (f0.shifts[k] == d) ks.push_back(k);
    if (ks.empty()) continue;
    linalg::Echelon<K> span(static_cast<Index>(ks.size()));
    for (const auto& col : rel.columns(d)) {
      linalg::SparseVec<K> proj;
      for (const auto& [idx, c] : col) {
        auto [k, i] = rel.target().locate(d, idx);
        if (f0.shifts[k] != d) continue;
        auto pos = static_cast<Index>(std::find(ks.begin(), ks.end(), k) - ks.begin());
        proj.emplace_back(pos, c);
      }
      span.insert(proj);
    }
    for (Index j = 0; j < ks.size(); ++j)
      if (span.insert(linalg::unit_vector<K>(j))) chosen.push_back(ks[j]);
  }
  FreeModule p0;
  for (std::size_t k : chosen) p0.shifts.push_back(f0.shifts[k]);
  res.cover = ModuleMap<K>::zero(p0, f0);
  for (std::size_t j = 0; j < chosen.size(); ++j) res.cover.entries[chosen[j]][j] = NcPoly<K>::constant(K::one());
  if (length == 0) return res;

  // ker(P⁰ → M) = projection of ker [π | r] onto P⁰
  MapEvaluator<K> joined(algebra, join_columns(res.cover, m.relations));
  FreeComponents<K> p0c(algebra, p0);
  auto k0 = minimal_generators<K>(
      p0c,
      [&](int d) {
        auto cut = static_cast<Index>(p0c.dim(d));
        std::vector<linalg::SparseVec<K>> out;
        for (auto& v : joined.kernel(d)) {
          linalg::SparseVec<K> head;
          for (auto& e : v)
            if (e.first < cut) head.push_back(e);
          if (!head.empty()) out.push_back(std::move(head));
        }
        return out;
      },
      res.lo, D);
  res.differentials.push_back(k0.inclusion(p0c));
  for (std::size_t i = 2; i <= length; ++i) {
    const auto& prev = res.differentials.back();
    auto gens = kernel_min_generators(algebra, prev, D);
    res.differentials.push_back(gens.inclusion(FreeComponents<K>(algebra, prev.source)));
  }
  return res;
}

std::size_t TorProfile::at(std::size_t i, int d) const {
  if (i >= rows.size() || d < min_degree || d > max_degree) return 0;
  return rows[i][static_cast<std::size_t>(d - min_degree)];
}

std::size_t TorProfile::total(std::size_t i) const {
  std::size_t t = 0;
  if (i < rows.size())
    for (auto x : rows[i]) t += x;
  return t;
}

template <class K>
TorProfile tor_profile(const TruncatedResolution<K>& res) {
  TorProfile t;
  t.min_degree = res.lo;
  t.max_degree = res.D;
  std::size_t width = res.D >= res.lo ? static_cast<std::size_t>(res.D - res.lo + 1) : 0;
  for (std::size_t i = 0; i <= res.length(); ++i) {
    std::vector<std::size_t> row(width, 0);
    for (int s : res.term(i).shifts) ++row[static_cast<std::size_t>(s - res.lo)];
    t.rows.push_back(std::move(row));
  }
  return t;
}

template <class K>
TorProfile tor_dims(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m, int D, std::size_t length) {
  return tor_profile(minimal_resolution(algebra, m, D, length));
}

template <class K>
ResolutionAudit audit_resolution(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m,
                                 const TruncatedResolution<K>& res) {
  ResolutionAudit audit;
  MapEvaluator<K> rel(algebra, m.relations);
  MapEvaluator<K> joined(algebra, join_columns(res.cover, m.relations));
  std::vector<MapEvaluator<K>> diffs;
  for (const auto& d : res.differentials) diffs.emplace_back(algebra, d);
  for (const auto& d : res.differentials)
    if (!d.minimal()) audit.minimal = false;
  if (!audit.minimal) audit.failures.push_back("a differential has a scalar entry");

  bool last_kernel_zero = true;
  bool euler_ok = true;
  for (int d = res.lo; d <= res.D; ++d) {
    std::size_t f0 = rel.target().dim(d);
    std::size_t mdim = f0 - rel.rank(d);
    if (joined.rank(d) != f0) {
      audit.exact = false;
      audit.failures.push_back("P0 -> M not onto in degree " + std::to_string(d));
    }
    std::size_t p0 = FreeComponents<K>(algebra, res.term(0)).dim(d);
    std::size_t prev_kernel = p0 - mdim;
    long euler = static_cast<long>(p0);
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      std::size_t pi = diffs[i].source().dim(d);
      std::size_t r = diffs[i].rank(d);
      if (r != prev_kernel) {
        audit.exact = false;
        audit.failures.push_back("not exact at P" + std::to_string(i) + " in degree " + std::to_string(d));
      }
      prev_kernel = pi - r;
      euler += (i % 2 == 0 ? -1 : 1) * static_cast<long>(pi);
    }
    if (prev_kernel != 0) last_kernel_zero = false;
    if (euler != static_cast<long>(mdim)) euler_ok = false;
  }
  audit.euler_applicable = last_kernel_zero;
  audit.euler_holds = euler_ok;
  if (audit.euler_applicable && !euler_ok) audit.failures.push_back("Euler characteristic mismatch");
  return audit;
}

#define NCOH_INSTANTIATE(K)                                                                                     \
  template struct ModuleMap<K>;                                                                                 \
  template struct ModulePresentation<K>;                                                                        \
  template class FreeComponents<K>;                                                                             \
  template class MapEvaluator<K>;                                                                               \
  template struct SubmoduleGenerators<K>;                                                                       \
  template SubmoduleGenerators<K> minimal_generators<K>(                                                        \
      const FreeComponents<K>&, const std::function<std::vector<linalg::SparseVec<K>>(int)>&, int, int);       \
  template SubmoduleGenerators<K> kernel_min_generators<K>(const GradedAlgebra<K>&, const ModuleMap<K>&, int);  \
  template class QuotientComponent<K>;                                                                          \
  template std::vector<std::pair<std::size_t, Word>> component_basis<K>(const GradedAlgebra<K>&,                \
                                                                        const ModulePresentation<K>&, int);     \
  template std::size_t component_dim<K>(const GradedAlgebra<K>&, const ModulePresentation<K>&, int);            \
  template struct TruncatedResolution<K>;                                                                       \
  template TruncatedResolution<K> minimal_resolution<K>(const GradedAlgebra<K>&, const ModulePresentation<K>&,  \
                                                        int, std::size_t);                                      \
  template TorProfile tor_profile<K>(const TruncatedResolution<K>&);                                            \
  template TorProfile tor_dims<K>(const GradedAlgebra<K>&, const ModulePresentation<K>&, int, std::size_t);     \
  template ResolutionAudit audit_resolution<K>(const GradedAlgebra<K>&, const ModulePresentation<K>&,           \
                                               const TruncatedResolution<K>&);

NCOH_INSTANTIATE(Rational)
NCOH_INSTANTIATE(ModP)

}  // namespace ncoh
