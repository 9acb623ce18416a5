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

#include "ncoh/veronese.hpp"

#include <algorithm>

#include "ncoh/polyparse.hpp"

namespace ncoh {

namespace {

using linalg::Index;

template <class K>
using Vec = linalg::SparseVec<K>;

// Basis of A_n from the largest word down, so symbol 0 gets the top precedence.
template <class K>
std::vector<Word> symbol_basis(const GradedAlgebra<K>& A, int n) {
  std::vector<Word> words = A.basis(n);
  std::reverse(words.begin(), words.end());
  return words;
}

std::string symbol_name(const GeneratorTable& table, const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (k) out += '_';
    out += table.name(w[k]);
  }
  return out;
}

void check_step(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Veronese step n must be >= 2, got " + std::to_string(n));
}

}  // namespace

std::size_t VeronesePresentation::relation_count() const {
  std::size_t total = 0;
  for (const auto& d : degrees) total += d.new_relations.size();
  return total;
}

std::size_t VeronesePresentation::relation_count_modulo_commutators() const {
  std::size_t total = 0;
  for (const auto& d : degrees) total += d.new_modulo_commutators;
  return total;
}

template <class K>
VeronesePresentation veronese_presentation(const AlgebraPresentation& p, int n, int D, bool require_degree_one) {
  check_step(n);
  if (require_degree_one && !p.gens.degree_one_generated())
    throw Error(ErrorKind::NotDegreeOneGenerated, "'" + p.label + "' has generators of weight > 1");
  if (D < n) throw Error(ErrorKind::InvalidArgument, "degree bound " + std::to_string(D) + " is below the step");

  auto A = GradedAlgebra<K>::from_presentation(p, D);
  VeronesePresentation out;
  out.n = n;
  out.D = D;
  out.window = D / n;

  std::vector<Word> words = symbol_basis(A, n);
  const std::size_t m = words.size();
  if (m > 255) throw Error(ErrorKind::InvalidArgument, "A_n has more than 255 basis words");
  std::vector<Generator> sym_gens;
  for (const Word& w : words) {
    sym_gens.push_back({symbol_name(p.gens, w), 1});
    out.symbols.push_back(sym_gens.back().name);
    out.symbol_words.push_back(w.to_string(p.gens));
  }
  GeneratorTable table(sym_gens);
  out.presentation.label = p.label + "^(" + std::to_string(n) + ")";
  out.presentation.field = p.field;
  out.presentation.gens = table;

  std::vector<NcPoly<K>> relations;
  // Symbol words of length i in increasing string order, which is decreasing
  // word order since every symbol has weight 1; image[k] lies in A_{in}.
  std::vector<std::string> level{std::string()};
  std::vector<Vec<K>> image{linalg::unit_vector<K>(0)};
  out.hilbert_ambient.push_back(A.dim(0));
  for (int i = 1; i <= out.window; ++i) {
    std::vector<std::string> next;
    std::vector<Vec<K>> next_image;
    next.reserve(level.size() * m);
    next_image.reserve(level.size() * m);
    for (std::size_t k = 0; k < level.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) {
        next.push_back(level[k] + static_cast<char>(j));
        next_image.push_back(A.rmul_word(n * (i - 1), image[k], words[j]));
      }
    level = std::move(next);
    image = std::move(next_image);

    VeroneseDegree deg;
    deg.internal = i;
    deg.ambient = i * n;
    deg.free_dim = level.size();
    const Index target = static_cast<Index>(A.dim(i * n));
    out.hilbert_ambient.push_back(target);
    auto phi = linalg::Mat<K>::from_columns(image, target);
    auto kernel = linalg::kernel_basis(phi);
    deg.kernel_dim = kernel.size();

    GroebnerBasis<K> lower(table, relations, i);
    deg.consequences = level.size() - lower.hilbert_dims(i)[static_cast<std::size_t>(i)];
    if (deg.consequences > deg.kernel_dim)
      throw Error(ErrorKind::InvalidArgument, "Veronese relations at internal degree " + std::to_string(i) +
                                                  " exceed the kernel; the input is inconsistent");
    if (deg.consequences < deg.kernel_dim) {
      std::unordered_map<std::string, Index> column;
      for (std::size_t k = 0; k < level.size(); ++k) column.emplace(level[k], static_cast<Index>(k));
      std::vector<Vec<K>> rows;
      for (const auto& v : kernel) {
        NcPoly<K> q;
        for (const auto& [c, x] : v) q.add_term(Word(level[c], i), x);
        NcPoly<K> r = lower.normal_form(q);
        if (r.is_zero()) continue;
        Vec<K> row;
        for (const auto& [w, x] : r.terms()) row.emplace_back(column.at(w.letters()), x);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
      linalg::Mat<K> mat(static_cast<Index>(rows.size()), static_cast<Index>(level.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) mat.row(static_cast<Index>(r)) = std::move(rows[r]);
      auto reduced = linalg::rref(mat);
      if (reduced.rank() != deg.kernel_dim - deg.consequences)
        throw Error(ErrorKind::InvalidArgument, "Veronese relation count mismatch at internal degree " + std::to_string(i));
      for (Index r = 0; r < reduced.rank(); ++r) {
        NcPoly<K> rel;
        for (const auto& [c, x] : reduced.reduced.row(r)) rel.add_term(Word(level[c], i), x);
        rel = rel.monic();
        if (rel.size() != 1) out.monomial_only = false;
        deg.new_relations.push_back(rel.to_string(table));
        out.presentation.relations.push_back(to_raw(rel));
        relations.push_back(std::move(rel));
      }
      out.last_relation_degree = i;

      std::vector<NcPoly<K>> with_commutators = relations;
      with_commutators.resize(relations.size() - reduced.rank());
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
          Word ab(std::string{static_cast<char>(a), static_cast<char>(b)}, 2);
          Word ba(std::string{static_cast<char>(b), static_cast<char>(a)}, 2);
          with_commutators.push_back(NcPoly<K>::monomial(ab) - NcPoly<K>::monomial(ba));
        }
      GroebnerBasis<K> commutative(table, with_commutators, i);
      linalg::Echelon<K> residues(static_cast<Index>(level.size()));
      for (const auto& v : kernel) {
        NcPoly<K> q;
        for (const auto& [c, x] : v) q.add_term(Word(level[c], i), x);
        Vec<K> row;
        NcPoly<K> r = commutative.normal_form(q);
        for (const auto& [w, x] : r.terms()) row.emplace_back(column.at(w.letters()), x);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!row.empty()) residues.insert(row);
      }
      deg.new_modulo_commutators = residues.rank();
    }
    out.degrees.push_back(std::move(deg));
  }

  GroebnerBasis<K> full(table, relations, out.window);
  out.hilbert_presented = full.hilbert_dims(out.window);
  out.hilbert_consistent = out.hilbert_presented == out.hilbert_ambient;
  if (!out.hilbert_consistent)
    throw Error(ErrorKind::InvalidArgument, "Veronese presentation of '" + p.label + "' fails the Hilbert check");
  return out;
}

int PmModuleReport::trailing_silent() const {
  int last = -1;
  for (std::size_t i = 0; i < syzygies.size(); ++i)
    if (syzygies[i]) last = static_cast<int>(i);
  return window - last;
}

template <class K>
std::vector<PmModuleReport> pm_module_presentations(const AlgebraPresentation& p, int n, int D) {
  check_step(n);
  if (!p.gens.degree_one_generated())
    throw Error(ErrorKind::NotDegreeOneGenerated, "'" + p.label + "' has generators of weight > 1");
  auto A = GradedAlgebra<K>::from_presentation(p, D);
  std::vector<Word> step = symbol_basis(A, n);

  std::vector<PmModuleReport> reports;
  for (int m = 0; m < n && m <= D; ++m) {
    PmModuleReport rep;
    rep.m = m;
    rep.window = (D - m) / n;
    auto ambient = [&](int i) { return m + i * n; };

    // Minimal generators: complement of the part generated from below.
    struct Gen {
      int degree;
      Vec<K> element;
    };
    std::vector<Gen> gens;
    std::vector<Vec<K>> span;  // basis of P^m_{i-1}·A_n, then of P^m_i
    for (int i = 0; i <= rep.window; ++i) {
      const Index dim = static_cast<Index>(A.dim(ambient(i)));
      std::vector<Vec<K>> below;
      for (const auto& v : span)
        for (const Word& w : step) below.push_back(A.rmul_word(ambient(i - 1), v, w));
      linalg::Echelon<K> ech(dim);
      for (const auto& v : below) ech.insert(v);
      std::size_t added = 0;
      for (const auto& e : linalg::complement_basis(ech.rows(), dim)) {
        gens.push_back({i, e});
        ++added;
      }
      rep.generators.push_back(added);
      span.clear();
      for (Index k = 0; k < dim; ++k) span.push_back(linalg::unit_vector<K>(k));
    }
    rep.generated_in_bottom_degree =
        std::all_of(gens.begin(), gens.end(), [](const Gen& g) { return g.degree == 0; });

    // Independent audit: products gen·A_{(i - i_g)n} fill every component.
    rep.spans_components = true;
    for (int i = 0; i <= rep.window; ++i) {
      linalg::Echelon<K> ech(static_cast<Index>(A.dim(ambient(i))));
      for (const auto& g : gens) {
        if (g.degree > i) continue;
        for (const Word& w : A.basis((i - g.degree) * n)) ech.insert(A.rmul_word(ambient(g.degree), g.element, w));
      }
      if (!ech.full()) rep.spans_components = false;
    }

    // First syzygies over A^(n): kernel of ⊕_g A_{(i - i_g)n} -> A_{m+in}.
    std::vector<Vec<K>> previous_kernel;
    std::vector<Index> previous_offsets;
    for (int i = 0; i <= rep.window; ++i) {
      std::vector<Index> offsets;
      std::vector<Vec<K>> columns;
      Index total = 0;
      for (const auto& g : gens) {
        offsets.push_back(total);
        if (g.degree > i) continue;
        for (const Word& w : A.basis((i - g.degree) * n)) {
          columns.push_back(A.rmul_word(ambient(g.degree), g.element, w));
          ++total;
        }
      }
      auto kernel = linalg::kernel_basis(linalg::Mat<K>::from_columns(columns, static_cast<Index>(A.dim(ambient(i)))));
      linalg::Echelon<K> lower(total);
      for (const auto& k : previous_kernel) {
        // Split k by generator, multiply each block by a symbol, reassemble.
        for (const Word& w : step) {
          Vec<K> prod;
          for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].degree > i - 1) continue;
            Index lo = previous_offsets[g];
            Index hi = static_cast<Index>(lo + A.dim((i - 1 - gens[g].degree) * n));
            Vec<K> block;
            for (const auto& [c, x] : k)
              if (c >= lo && c < hi) block.emplace_back(c - lo, x);
            if (block.empty()) continue;
            linalg::append_shifted(prod, A.rmul_word((i - 1 - gens[g].degree) * n, block, w), offsets[g]);
          }
          if (!prod.empty()) lower.insert(prod);
        }
      }
      rep.syzygies.push_back(kernel.size() - lower.rank());
      previous_kernel = std::move(kernel);
      previous_offsets = std::move(offsets);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

template <class K>
VeroneseCrossCheck veronese_cross_check(const AlgebraPresentation& p, int n, int D, const ProbeConfig& algebra_config,
                                        const ProbeConfig& veronese_config) {
  VeroneseCrossCheck out;
  out.veronese = veronese_presentation<K>(p, n, D, true);
  out.algebra_probe = probe_algebra<K>(p, algebra_config, Side::Right);
  out.veronese_probe = probe_algebra<K>(out.veronese.presentation, veronese_config, Side::Right);
  out.agree = out.algebra_probe.aggregate.kind == out.veronese_probe.aggregate.kind;
  out.extrapolated = veronese_config.D + veronese_config.gen_degree_bound > out.veronese.window;
  return out;
}

#define NCOH_INSTANTIATE(K)                                                                                      \
  template VeronesePresentation veronese_presentation<K>(const AlgebraPresentation&, int, int, bool);            \
  template std::vector<PmModuleReport> pm_module_presentations<K>(const AlgebraPresentation&, int, int);         \
  template VeroneseCrossCheck veronese_cross_check<K>(const AlgebraPresentation&, int, int, const ProbeConfig&, \
                                                      const ProbeConfig&);

NCOH_INSTANTIATE(Rational)
NCOH_INSTANTIATE(ModP)

}  // namespace ncoh
