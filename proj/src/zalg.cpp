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

#include "ncoh/zalg.hpp"

#include <algorithm>

#include "ncoh/coherence.hpp"

namespace ncoh {

using linalg::Index;

namespace {

template <class K>
using Vec = linalg::SparseVec<K>;

template <class K>
void sort_entries(Vec<K>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

// ------------------------------------------------------------- Z-algebra

template <class K>
ZAlgebraWindow<K> ZAlgebraWindow<K>::from_graded(std::shared_ptr<const GradedAlgebra<K>> algebra, int lo, int hi) {
  require(lo <= hi, "empty Z-algebra window");
  if (hi - lo > algebra->bound())
    throw Error(ErrorKind::DegreeBoundExceeded, "window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                                    "] needs degree " + std::to_string(hi - lo) + " > " +
                                                    std::to_string(algebra->bound()));
  ZAlgebraWindow z;
  z.A_ = std::move(algebra);
  z.lo_ = lo;
  z.hi_ = hi;
  for (const auto& g : z.A_->gens().generators()) z.step_ = std::max(z.step_, g.weight);
  const int span = hi - lo;
  z.mult_.resize(static_cast<std::size_t>(span) + 1);
  for (int d1 = 0; d1 <= span; ++d1) {
    z.mult_[d1].resize(static_cast<std::size_t>(span - d1) + 1);
    const auto n1 = static_cast<Index>(z.A_->dim(d1));
    for (int d2 = 0; d1 + d2 <= span; ++d2) {
      const auto& words = z.A_->basis(d2);
      auto& table = z.mult_[d1][d2];
      table.reserve(n1 * words.size());
      for (Index a = 0; a < n1; ++a)
        for (const Word& w : words) table.push_back(z.A_->rmul_word(d1, linalg::unit_vector<K>(a), w));
    }
  }
  return z;
}

template <class K>
std::size_t ZAlgebraWindow<K>::dim(int i, int j) const {
  if (i > j || !contains(i) || !contains(j)) return 0;
  return A_->dim(j - i);
}

template <class K>
auto ZAlgebraWindow<K>::multiply_basis(int i, int j, int k, Index a, Index b) const -> const Vec& {
  const auto d1 = static_cast<std::size_t>(k - j), d2 = static_cast<std::size_t>(j - i);
  return mult_[d1][d2][a * A_->dim(static_cast<int>(d2)) + b];
}

template <class K>
auto ZAlgebraWindow<K>::multiply(int i, int j, int k, const Vec& a, const Vec& b) const -> Vec {
  Vec out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) linalg::add_scaled(out, cx * cy, multiply_basis(i, j, k, x, y));
  return out;
}

template <class K>
ZAudit ZAlgebraWindow<K>::audit() const {
  ZAudit audit;
  const int span = hi_ - lo_;
  if (A_->dim(0) != 1) {
    audit.unital = false;
    audit.failures.push_back("A_ii is not one-dimensional");
    return audit;
  }
  const auto unit = linalg::unit_vector<K>(0);
  for (int d = 0; d <= span; ++d)
    for (Index b = 0; b < A_->dim(d); ++b) {
      ++audit.checks;
      const auto e = linalg::unit_vector<K>(b);
      if (multiply(lo_, lo_, lo_ + d, e, unit) != e || multiply(lo_, lo_ + d, lo_ + d, unit, e) != e) {
        audit.unital = false;
        audit.failures.push_back("unit law fails in degree " + std::to_string(d));
      }
    }
  // Products depend on index differences only, so degree triples cover every
  // composable triple of the window.
  for (int d1 = 0; d1 <= span; ++d1)
    for (int d2 = 0; d1 + d2 <= span; ++d2)
      for (int d3 = 0; d1 + d2 + d3 <= span; ++d3) {
        const int i = lo_, j = i + d3, k = j + d2, l = k + d1;  // a ∈ A_kl, b ∈ A_jk, c ∈ A_ij
        for (Index a = 0; a < A_->dim(d1); ++a)
          for (Index b = 0; b < A_->dim(d2); ++b) {
            const Vec& ab = multiply_basis(j, k, l, a, b);
            for (Index c = 0; c < A_->dim(d3); ++c) {
              ++audit.checks;
              Vec left = multiply(i, j, l, ab, linalg::unit_vector<K>(c));
              Vec right = multiply(i, k, l, linalg::unit_vector<K>(a), multiply_basis(i, j, k, b, c));
              if (left != right) {
                audit.associative = false;
                if (audit.failures.size() < 8)
                  audit.failures.push_back("associativity fails for degrees " + std::to_string(d1) + "," +
                                           std::to_string(d2) + "," + std::to_string(d3));
              }
            }
          }
      }
  return audit;
}

// --------------------------------------------------------------- modules

template <class K>
void ProjectivePresentation<K>::validate() const {
  require(entries.size() == targets.size(), "presentation has " + std::to_string(entries.size()) + " rows for " +
                                                std::to_string(targets.size()) + " targets");
  for (std::size_t k = 0; k < targets.size(); ++k) {
    require(entries[k].size() == sources.size(), "presentation row " + std::to_string(k) + " has the wrong length");
    for (std::size_t l = 0; l < sources.size(); ++l) {
      const auto& f = entries[k][l];
      if (f.is_zero()) continue;
      require(f.degree() == targets[k] - sources[l], "entry (" + std::to_string(k) + ", " + std::to_string(l) +
                                                         ") has degree " + std::to_string(f.degree()) + ", expected " +
                                                         std::to_string(targets[k] - sources[l]));
    }
  }
}

template <class K>
ZModuleWindow<K>::ZModuleWindow(std::shared_ptr<const ZAlgebraWindow<K>> algebra, std::vector<std::size_t> dims)
    : Z_(std::move(algebra)), dims_(std::move(dims)) {
  const auto w = static_cast<std::size_t>(Z_->hi() - Z_->lo() + 1);
  require(dims_.size() == w, "module window size mismatch");
  act_.resize(w * w);
}

template <class K>
std::size_t ZModuleWindow<K>::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

template <class K>
std::size_t ZModuleWindow<K>::slot(int j, int i) const {
  const auto w = static_cast<std::size_t>(hi() - lo() + 1);
  return static_cast<std::size_t>(j - lo()) * w + static_cast<std::size_t>(i - lo());
}

template <class K>
auto ZModuleWindow<K>::act_basis(int j, int i, Index c, Index e) const -> const Vec& {
  return act_[slot(j, i)][c][e];
}

template <class K>
auto ZModuleWindow<K>::act(int j, int i, const Vec& m, const Vec& a) const -> Vec {
  Vec out;
  for (const auto& [e, ce] : m)
    for (const auto& [c, cc] : a) linalg::add_scaled(out, ce * cc, act_basis(j, i, c, e));
  return out;
}

template <class K>
void ZModuleWindow<K>::set_action(int j, int i, std::vector<std::vector<Vec>> images) {
  act_[slot(j, i)] = std::move(images);
}

template <class K>
ZAudit ZModuleWindow<K>::audit() const {
  ZAudit audit;
  for (int i = lo(); i <= hi(); ++i)
    for (Index e = 0; e < dim(i); ++e) {
      ++audit.checks;
      if (act_basis(i, i, 0, e) != linalg::unit_vector<K>(e)) {
        audit.unital = false;
        audit.failures.push_back("A_ii does not act as the identity on M_" + std::to_string(i));
        break;
      }
    }
  for (int k = lo(); k <= hi(); ++k) {
    if (!dim(k)) continue;
    for (int j = lo(); j <= k; ++j)
      for (int i = lo(); i <= j; ++i)
        for (Index e = 0; e < dim(k); ++e)
          for (Index a = 0; a < Z_->dim(j, k); ++a) {
            const Vec& ea = act_basis(k, j, a, e);
            for (Index b = 0; b < Z_->dim(i, j); ++b) {
              ++audit.checks;
              Vec left = act(j, i, ea, linalg::unit_vector<K>(b));
              Vec right = act(k, i, linalg::unit_vector<K>(e), Z_->multiply_basis(i, j, k, a, b));
              if (left != right) {
                audit.associative = false;
                if (audit.failures.size() < 8)
                  audit.failures.push_back("action not associative at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ", " + std::to_string(k) + ")");
              }
            }
          }
  }
  return audit;
}

template <class K>
std::vector<std::size_t> ZModuleWindow<K>::new_generators() const {
  std::vector<std::size_t> out;
  for (int i = lo(); i <= hi(); ++i) {
    linalg::Echelon<K> span(static_cast<Index>(dim(i)));
    for (int j = i + 1; j <= std::min(hi(), i + Z_->generating_step()); ++j)
      for (Index c = 0; c < Z_->dim(i, j); ++c)
        for (Index e = 0; e < dim(j); ++e) span.insert(act_basis(j, i, c, e));
    out.push_back(dim(i) - span.rank());
  }
  return out;
}

template <class K>
ZModuleWindow<K> transport_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, const ModulePresentation<K>& m) {
  const auto& Z = *algebra;
  const auto& A = Z.graded();
  MapEvaluator<K> rel(A, m.relations);
  std::vector<QuotientComponent<K>> quotients;
  std::vector<std::size_t> dims;
  for (int i = Z.lo(); i <= Z.hi(); ++i) {
    quotients.emplace_back(rel.target(), rel.columns(-i), -i);
    dims.push_back(quotients.back().dim());
  }
  ZModuleWindow<K> out(algebra, dims);
  auto q = [&](int i) -> const QuotientComponent<K>& { return quotients[static_cast<std::size_t>(i - Z.lo())]; };
  for (int j = Z.lo(); j <= Z.hi(); ++j)
    for (int i = Z.lo(); i <= j; ++i) {
      std::vector<std::vector<Vec<K>>> images;
      for (const Word& w : Z.basis(i, j)) {
        std::vector<Vec<K>> col;
        for (Index pos : q(j).positions())
          col.push_back(q(i).coords(rel.target().rmul_word(-j, linalg::unit_vector<K>(pos), w)));
        images.push_back(std::move(col));
      }
      out.set_action(j, i, std::move(images));
    }
  ProjectivePresentation<K> p;
  for (int s : m.relations.target.shifts) p.targets.push_back(-s);
  for (int s : m.relations.source.shifts) p.sources.push_back(-s);
  p.entries = m.relations.entries;
  out.set_presentation(std::move(p));
  return out;
}

template <class K>
ZModuleWindow<K> cokernel_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, const ProjectivePresentation<K>& p) {
  p.validate();
  const auto& Z = *algebra;
  for (int a : p.targets) require(Z.contains(a), "target P_" + std::to_string(a) + " outside the window");
  for (int b : p.sources) require(Z.contains(b), "source P_" + std::to_string(b) + " outside the window");
  std::vector<std::vector<Vec<K>>> f(p.targets.size());
  for (std::size_t k = 0; k < p.targets.size(); ++k)
    for (std::size_t l = 0; l < p.sources.size(); ++l)
      f[k].push_back(p.entries[k][l].is_zero() ? Vec<K>{} : Z.graded().to_vector(p.entries[k][l]));

  struct Component {
    std::vector<Index> offsets;
    linalg::Echelon<K> image;
    std::vector<Index> positions;
    std::vector<std::int64_t> local;
  };
  std::vector<Component> comps;
  std::vector<std::size_t> dims;
  for (int i = Z.lo(); i <= Z.hi(); ++i) {
    std::vector<Index> offsets;
    Index total = 0;
    for (int a : p.targets) {
      offsets.push_back(total);
      total += static_cast<Index>(Z.dim(i, a));
    }
    Component c{offsets, linalg::Echelon<K>(total, linalg::PivotSide::Rightmost), {}, {}};
    for (std::size_t l = 0; l < p.sources.size(); ++l) {
      const int b = p.sources[l];
      for (Index u = 0; u < Z.dim(i, b); ++u) {
        Vec<K> col;
        for (std::size_t k = 0; k < p.targets.size(); ++k)
          if (!f[k][l].empty())
            linalg::append_shifted(col, Z.multiply(i, b, p.targets[k], f[k][l], linalg::unit_vector<K>(u)), offsets[k]);
        c.image.insert(col);
      }
    }
    c.local.assign(total, -1);
    for (Index x = 0; x < total; ++x)
      if (!c.image.is_pivot(x)) {
        c.local[x] = static_cast<std::int64_t>(c.positions.size());
        c.positions.push_back(x);
      }
    dims.push_back(c.positions.size());
    comps.push_back(std::move(c));
  }
  ZModuleWindow<K> out(algebra, dims);
  auto comp = [&](int i) -> const Component& { return comps[static_cast<std::size_t>(i - Z.lo())]; };
  for (int j = Z.lo(); j <= Z.hi(); ++j)
    for (int i = Z.lo(); i <= j; ++i) {
      std::vector<std::vector<Vec<K>>> images(Z.dim(i, j));
      for (Index c = 0; c < Z.dim(i, j); ++c)
        for (Index pos : comp(j).positions) {
          // pos lies in summand k at local index u of A_{j, a_k}
          std::size_t k = 0;
          while (k + 1 < p.targets.size() && comp(j).offsets[k + 1] <= pos) ++k;
          const Index u = pos - comp(j).offsets[k];
          Vec<K> v;
          linalg::append_shifted(v, Z.multiply_basis(i, j, p.targets[k], u, c), comp(i).offsets[k]);
          Vec<K> coords;
          for (const auto& [x, cx] : comp(i).image.reduce(v))
            coords.emplace_back(static_cast<Index>(comp(i).local[x]), cx);
          images[c].push_back(std::move(coords));
        }
      out.set_action(j, i, std::move(images));
    }
  out.set_presentation(p);
  return out;
}

template <class K>
ZModuleWindow<K> projective_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, int j) {
  ProjectivePresentation<K> p;
  p.targets = {j};
  p.entries = {{}};
  return cokernel_module(std::move(algebra), p);
}

template <class K>
ZModuleWindow<K> simple_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, int j) {
  ProjectivePresentation<K> p;
  p.targets = {j};
  p.entries = {{}};
  const auto& gens = algebra->graded().gens();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int w = gens.weight(static_cast<Letter>(g));
    if (!algebra->contains(j - w)) continue;
    p.sources.push_back(j - w);
    p.entries[0].push_back(NcPoly<K>::monomial(Word(std::string(1, static_cast<char>(g)), w)));
  }
  return cokernel_module(std::move(algebra), p);
}

template <class K>
ZModuleWindow<K> direct_sum(const std::vector<ZModuleWindow<K>>& parts) {
  require(!parts.empty(), "empty direct sum");
  auto Z = parts.front().algebra_ptr();
  for (const auto& m : parts) require(m.algebra_ptr() == Z, "direct sum over different windows");
  std::vector<std::size_t> dims(parts.front().dims().size(), 0);
  for (const auto& m : parts)
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += m.dims()[i];
  ZModuleWindow<K> out(Z, dims);
  for (int j = Z->lo(); j <= Z->hi(); ++j)
    for (int i = Z->lo(); i <= j; ++i) {
      std::vector<std::vector<Vec<K>>> images(Z->dim(i, j));
      for (Index c = 0; c < Z->dim(i, j); ++c) {
        Index off_i = 0;
        for (const auto& m : parts) {
          for (Index e = 0; e < m.dim(j); ++e) {
            Vec<K> v;
            linalg::append_shifted(v, m.act_basis(j, i, c, e), off_i);
            images[c].push_back(std::move(v));
          }
          off_i += static_cast<Index>(m.dim(i));
        }
      }
      out.set_action(j, i, std::move(images));
    }
  if (std::all_of(parts.begin(), parts.end(), [](const auto& m) { return m.presentation().has_value(); })) {
    ProjectivePresentation<K> p;
    std::size_t cols = 0;
    for (const auto& m : parts) cols += m.presentation()->sources.size();
    std::size_t col = 0;
    for (const auto& m : parts) {
      const auto& q = *m.presentation();
      for (std::size_t k = 0; k < q.targets.size(); ++k) {
        std::vector<NcPoly<K>> row(cols);
        for (std::size_t l = 0; l < q.sources.size(); ++l) row[col + l] = q.entries[k][l];
        p.entries.push_back(std::move(row));
        p.targets.push_back(q.targets[k]);
      }
      p.sources.insert(p.sources.end(), q.sources.begin(), q.sources.end());
      col += q.sources.size();
    }
    out.set_presentation(std::move(p));
  }
  return out;
}

template <class K>
ZModuleWindow<K> truncate_below(const ZModuleWindow<K>& m, int n) {
  auto Z = m.algebra_ptr();
  std::vector<std::size_t> dims;
  for (int i = Z->lo(); i <= Z->hi(); ++i) dims.push_back(i <= n ? m.dim(i) : 0);
  ZModuleWindow<K> out(Z, dims);
  for (int j = Z->lo(); j <= std::min(n, Z->hi()); ++j)
    for (int i = Z->lo(); i <= j; ++i) {
      std::vector<std::vector<Vec<K>>> images(Z->dim(i, j));
      for (Index c = 0; c < Z->dim(i, j); ++c)
        for (Index e = 0; e < m.dim(j); ++e) images[c].push_back(m.act_basis(j, i, c, e));
      out.set_action(j, i, std::move(images));
    }
  for (int j = std::max(n + 1, Z->lo()); j <= Z->hi(); ++j)
    for (int i = Z->lo(); i <= j; ++i) out.set_action(j, i, std::vector<std::vector<Vec<K>>>(Z->dim(i, j)));
  return out;
}

// ------------------------------------------------------------------ Homs

template <class K>
std::size_t hom_dim(const ZModuleWindow<K>& m, const ZModuleWindow<K>& n) {
  require(m.lo() == n.lo() && m.hi() == n.hi(), "Hom between misaligned windows");
  const auto& Z = m.algebra();
  // X_i: dim N_i × dim M_i, unknown (r, s) at offset[i] + r * dim M_i + s
  std::vector<Index> offset;
  Index unknowns = 0;
  for (int i = m.lo(); i <= m.hi(); ++i) {
    offset.push_back(unknowns);
    unknowns += static_cast<Index>(m.dim(i) * n.dim(i));
  }
  auto var = [&](int i, std::size_t r, std::size_t s) {
    return offset[static_cast<std::size_t>(i - m.lo())] + static_cast<Index>(r * m.dim(i) + s);
  };
  std::vector<Vec<K>> rows;
  for (int j = m.lo(); j <= m.hi(); ++j)
    for (int i = std::max(m.lo(), j - Z.generating_step()); i < j; ++i) {
      if (!m.dim(j) || !n.dim(i)) continue;
      for (Index c = 0; c < Z.dim(i, j); ++c)
        for (Index e = 0; e < m.dim(j); ++e) {
          // X_i (e·c) - (X_j e)·c = 0, one row per coordinate r of N_i
          std::vector<Vec<K>> eq(n.dim(i));
          for (const auto& [s, a] : m.act_basis(j, i, c, e))
            for (std::size_t r = 0; r < n.dim(i); ++r) eq[r].emplace_back(var(i, r, s), a);
          for (std::size_t t = 0; t < n.dim(j); ++t)
            for (const auto& [r, b] : n.act_basis(j, i, c, static_cast<Index>(t))) eq[r].emplace_back(var(j, t, e), -b);
          for (auto& row : eq) {
            if (row.empty()) continue;
            sort_entries(row);
            rows.push_back(std::move(row));
          }
        }
    }
  linalg::Mat<K> mat(static_cast<Index>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) mat.row(static_cast<Index>(r)) = std::move(rows[r]);
  return unknowns - linalg::rank(mat);
}

std::string CohprojHom::to_string() const {
  if (!stabilized) return "NOT_STABILIZED";
  return std::to_string(value) + " (from " + std::to_string(stable_from) + ")";
}

template <class K>
CohprojHom cohproj_hom(const ZModuleWindow<K>& m, const ZModuleWindow<K>& n) {
  require(m.lo() == n.lo() && m.hi() == n.hi(), "cohproj Hom between misaligned windows");
  int r = 1;
  for (const auto& g : m.algebra().graded().groebner().elements()) r = std::max(r, g.degree());
  CohprojHom out;
  for (int level = m.hi(); level >= m.lo() + r; --level) out.levels.push_back(level);
  if (out.levels.size() < kMinLevels)
    throw Error(ErrorKind::WindowTooShallow, std::to_string(out.levels.size()) + " truncation levels, need " +
                                                 std::to_string(kMinLevels));
  for (int level : out.levels) out.dims.push_back(hom_dim(truncate_below(m, level), n));
  std::size_t run = 1;
  while (run < out.dims.size() && out.dims[out.dims.size() - 1 - run] == out.dims.back()) ++run;
  out.stabilized = run >= kStableRun;
  out.value = out.dims.back();
  out.stable_from = out.levels[out.levels.size() - run];
  return out;
}

// ------------------------------------------------------ tensor algebra check

IsoCheck tensor_projective_iso_check(int dimV, int i, int depth, bool negative_control) {
  require(dimV >= 1 && depth >= 1, "tensor check needs dimV >= 1 and depth >= 1");
  std::vector<std::pair<std::string, int>> gens;
  for (int l = 1; l <= dimV; ++l) gens.emplace_back("v" + std::to_string(l), 1);
  auto p = make_presentation("T(V)", gens, {});
  auto A = std::make_shared<const GradedAlgebra<ModP>>(GradedAlgebra<ModP>::from_presentation(p, depth));
  auto Z = std::make_shared<const ZAlgebraWindow<ModP>>(ZAlgebraWindow<ModP>::from_graded(A, i - depth, i));

  std::vector<Letter> letters;
  if (negative_control)
    letters.push_back(static_cast<Letter>(dimV - 1));
  else
    for (int l = 0; l < dimV; ++l) letters.push_back(static_cast<Letter>(l));
  IsoCheck out;
  std::vector<ZModuleWindow<ModP>> summands;
  for (Letter g : letters) {
    out.letters.push_back(p.gens.name(g));
    summands.push_back(projective_module<ModP>(Z, i - 1));
  }
  auto source = direct_sum(summands);
  auto target = truncate_below(projective_module<ModP>(Z, i), i - 1);

  // phi_k: columns indexed by the source basis of index k
  auto phi = [&](int k) {
    std::vector<Vec<ModP>> cols;
    for (Letter g : letters) {
      auto x = *A->index_of(Word(std::string(1, static_cast<char>(g)), 1));
      for (Index u = 0; u < Z->dim(k, i - 1); ++u) cols.push_back(Z->multiply_basis(k, i - 1, i, x, u));
    }
    return cols;
  };
  bool iso = true;
  for (int k = Z->lo(); k <= i - 1; ++k) {
    auto cols = phi(k);
    out.indices.push_back(k);
    out.source_dims.push_back(source.dim(k));
    out.target_dims.push_back(target.dim(k));
    auto rank = linalg::rank(linalg::Mat<ModP>::from_columns(cols, static_cast<Index>(target.dim(k))));
    out.ranks.push_back(rank);
    if (rank != source.dim(k) || rank != target.dim(k)) iso = false;
  }
  out.module_map = true;
  for (int j = Z->lo() + 1; j <= i - 1; ++j) {
    auto pj = phi(j), pi = phi(j - 1);
    for (Index c = 0; c < Z->dim(j - 1, j); ++c)
      for (Index e = 0; e < source.dim(j); ++e) {
        Vec<ModP> left;
        for (const auto& [s, a] : source.act_basis(j, j - 1, c, e)) linalg::add_scaled(left, a, pi[s]);
        Vec<ModP> right = target.act(j, j - 1, pj[e], linalg::unit_vector<ModP>(c));
        if (left != right) out.module_map = false;
      }
  }
  out.pass = iso && out.module_map;
  return out;
}

// ------------------------------------------------------------ Serre model

template <class K>
ModulePresentation<K> gamma_star_presentation(const ZModuleWindow<K>& m) {
  if (!m.presentation())
    throw Error(ErrorKind::NotPresentedByProjectives, "module window carries no presentation by projectives");
  const auto& p = *m.presentation();
  ModuleMap<K> f;
  for (int a : p.targets) f.target.shifts.push_back(-a);
  for (int b : p.sources) f.source.shifts.push_back(-b);
  f.entries = p.entries;
  f.validate();
  return {f};
}

AlgebraPresentation commutative_model() { return corpus_entry("comm").presentation; }

namespace {

template <class K>
bool same_window(const ZModuleWindow<K>& a, const ZModuleWindow<K>& b) {
  if (a.dims() != b.dims()) return false;
  const auto& Z = a.algebra();
  for (int j = Z.lo(); j <= Z.hi(); ++j)
    for (int i = Z.lo(); i <= j; ++i)
      for (Index c = 0; c < Z.dim(i, j); ++c)
        for (Index e = 0; e < a.dim(j); ++e)
          if (a.act_basis(j, i, c, e) != b.act_basis(j, i, c, e)) return false;
  return true;
}

}  // namespace

RoundTripReport serre_round_trip(int lo, int hi, int m) {
  const auto p = commutative_model();
  auto A = std::make_shared<const GradedAlgebra<ModP>>(GradedAlgebra<ModP>::from_presentation(p, hi - lo));
  auto Z = std::make_shared<const ZAlgebraWindow<ModP>>(ZAlgebraWindow<ModP>::from_graded(A, lo, hi));
  auto poly = [&](const std::string& s) { return to_ncpoly<ModP>(parse_poly(s, p.gens), p.gens); };
  using PP = ProjectivePresentation<ModP>;

  RoundTripReport rep;
  std::vector<PP> set;
  const int b = hi - 4;
  auto P = [](int j) { return "P_" + std::to_string(j); };
  rep.names = {P(b), P(b + 2), "coker(x: " + P(b) + " -> " + P(b + 1) + ")",
               "coker(x^2: " + P(b) + " -> " + P(b + 2) + ")", "S_" + std::to_string(b + 2),
               P(b + 1) + " + coker(y: " + P(b + 2) + " -> " + P(b + 3) + ")"};
  set.push_back(PP{{b}, {}, {{}}});
  set.push_back(PP{{b + 2}, {}, {{}}});
  set.push_back(PP{{b + 1}, {b}, {{poly("x")}}});
  set.push_back(PP{{b + 2}, {b}, {{poly("x^2")}}});
  set.push_back(PP{{b + 2}, {b + 1, b + 1}, {{poly("x"), poly("y")}}});
  set.push_back(PP{{b + 1, b + 3}, {b + 2}, {{NcPoly<ModP>()}, {poly("y")}}});

  std::vector<ZModuleWindow<ModP>> original, back;
  rep.transports_agree = true;
  for (const auto& pp : set) {
    original.push_back(cokernel_module<ModP>(Z, pp));
    auto graded = transport_module<ModP>(Z, gamma_star_presentation(original.back()));
    if (!same_window(graded, original.back())) rep.transports_agree = false;
    back.push_back(truncate_below(graded, m));
  }
  rep.preserved = true;
  for (std::size_t s = 0; s < set.size(); ++s) {
    rep.before.emplace_back();
    rep.after.emplace_back();
    for (std::size_t t = 0; t < set.size(); ++t) {
      rep.before[s].push_back(cohproj_hom(original[s], original[t]));
      rep.after[s].push_back(cohproj_hom(back[s], back[t]));
      const auto& x = rep.before[s].back();
      const auto& y = rep.after[s].back();
      if (!x.stabilized || !y.stabilized || x.value != y.value) rep.preserved = false;
    }
  }
  return rep;
}

#define NCOH_INSTANTIATE(K)                                                                                        \
  template class ZAlgebraWindow<K>;                                                                                \
  template struct ProjectivePresentation<K>;                                                                       \
  template class ZModuleWindow<K>;                                                                                 \
  template ZModuleWindow<K> transport_module<K>(std::shared_ptr<const ZAlgebraWindow<K>>, const ModulePresentation<K>&); \
  template ZModuleWindow<K> cokernel_module<K>(std::shared_ptr<const ZAlgebraWindow<K>>,                           \
                                               const ProjectivePresentation<K>&);                                  \
  template ZModuleWindow<K> projective_module<K>(std::shared_ptr<const ZAlgebraWindow<K>>, int);                   \
  template ZModuleWindow<K> simple_module<K>(std::shared_ptr<const ZAlgebraWindow<K>>, int);                       \
  template ZModuleWindow<K> direct_sum<K>(const std::vector<ZModuleWindow<K>>&);                                   \
  template ZModuleWindow<K> truncate_below<K>(const ZModuleWindow<K>&, int);                                       \
  template std::size_t hom_dim<K>(const ZModuleWindow<K>&, const ZModuleWindow<K>&);                               \
  template CohprojHom cohproj_hom<K>(const ZModuleWindow<K>&, const ZModuleWindow<K>&);                            \
  template ModulePresentation<K> gamma_star_presentation<K>(const ZModuleWindow<K>&);

NCOH_INSTANTIATE(Rational)
NCOH_INSTANTIATE(ModP)

}  // namespace ncoh
