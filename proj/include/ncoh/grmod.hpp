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

#include <functional>
#include <string>
#include <vector>

#include "ncoh/groebner.hpp"

namespace ncoh {

/// ⊕_k A(-s_k); generator e_k sits in degree s_k.
struct FreeModule {
  std::vector<int> shifts;

  std::size_t rank() const { return shifts.size(); }
  /// Smallest shift, or `fallback` for the zero module.
  int min_shift(int fallback = 0) const;
  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

/// Right-module map f(e_l) = Σ_k e_k · entries[k][l]; entry (k, l) is zero or
/// homogeneous of degree s_l(source) - s_k(target).
template <class K>
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  std::vector<std::vector<NcPoly<K>>> entries;

  static ModuleMap zero(FreeModule source, FreeModule target);
  static ModuleMap identity(const FreeModule& f);
  /// Throws InvalidArgument when shapes or entry degrees are inconsistent.
  void validate() const;
  /// No nonzero scalar entries.
  bool minimal() const;
};

/// M = coker(relations: F¹ → F⁰).
template <class K>
struct ModulePresentation {
  ModuleMap<K> relations;

  const FreeModule& generators() const { return relations.target; }
  static ModulePresentation free(const FreeModule& f) { return {ModuleMap<K>::zero(FreeModule{}, f)}; }
  /// The simple module k = A / A_+.
  static ModulePresentation simple(const GeneratorTable& gens);
  /// A / gA + ... for the right ideal generated by `ideal_gens`.
  static ModulePresentation cyclic_quotient(const std::vector<NcPoly<K>>& ideal_gens);
};

/// Degree-d components of a free module as concatenated coordinate vectors.
template <class K>
class FreeComponents {
 public:
  using Vec = linalg::SparseVec<K>;

  FreeComponents(const GradedAlgebra<K>& algebra, FreeModule module) : A_(&algebra), F_(std::move(module)) {}

  const GradedAlgebra<K>& algebra() const { return *A_; }
  const FreeModule& module() const { return F_; }
  std::size_t dim(int d) const;
  linalg::Index offset(int d, std::size_t k) const;
  /// Component index and local basis index of a coordinate.
  std::pair<std::size_t, linalg::Index> locate(int d, linalg::Index idx) const;
  Vec basis_element(std::size_t k, const Word& w) const;

  Vec rmul_letter(int d, const Vec& v, Letter g) const;
  Vec rmul_word(int d, Vec v, const Word& w) const;
  /// Split into one polynomial per component.
  std::vector<NcPoly<K>> to_polys(int d, const Vec& v) const;
  /// Inverse of to_polys.
  Vec from_polys(int d, const std::vector<NcPoly<K>>& polys) const;

 private:
  const GradedAlgebra<K>* A_;
  FreeModule F_;
};

/// Degree-d matrices of a module map, with images of basis elements cached
/// across degrees (f(e_l·w·g) = f(e_l·w)·g).
template <class K>
class MapEvaluator {
 public:
  using Vec = linalg::SparseVec<K>;

  MapEvaluator(const GradedAlgebra<K>& algebra, const ModuleMap<K>& f);

  const FreeComponents<K>& source() const { return src_; }
  const FreeComponents<K>& target() const { return tgt_; }
  /// Images of the source basis at degree d, in source coordinate order.
  std::vector<Vec> columns(int d);
  Vec apply(int d, const Vec& x);
  linalg::Index rank(int d);
  std::vector<Vec> kernel(int d);

 private:
  const Vec& image(std::size_t l, int e, linalg::Index i);

  const GradedAlgebra<K>* A_;
  FreeComponents<K> src_;
  FreeComponents<K> tgt_;
  std::vector<Vec> base_;                        // f(e_l)
  std::vector<std::vector<std::vector<Vec>>> cache_;  // [l][e][i]
};

/// Minimal homogeneous generators of a submodule N of a free module F.
template <class K>
struct SubmoduleGenerators {
  std::vector<int> degrees;
  std::vector<linalg::SparseVec<K>> elements;  // in F, at the matching degree

  FreeModule as_free_module() const { return FreeModule{degrees}; }
  /// Map sending the i-th basis element to the i-th generator.
  ModuleMap<K> inclusion(const FreeComponents<K>& ambient) const;
};

/// Greedy minimal generators of the submodule whose degree-d component is
/// spanned by `component(d)`, for lo <= d <= hi. At each degree the span of
/// what lower generators already produce is built first; spanning vectors
/// outside it become new generators in the order given.
template <class K>
SubmoduleGenerators<K> minimal_generators(const FreeComponents<K>& ambient,
                                          const std::function<std::vector<linalg::SparseVec<K>>(int)>& component,
                                          int lo, int hi);

/// Minimal generators of ker f in degrees <= D.
template <class K>
SubmoduleGenerators<K> kernel_min_generators(const GradedAlgebra<K>& algebra, const ModuleMap<K>& f, int D);

/// Degree-d component of coker(r) with coordinates on the greedy complement
/// of the relation image.
template <class K>
class QuotientComponent {
 public:
  using Vec = linalg::SparseVec<K>;

  QuotientComponent(const FreeComponents<K>& ambient, const std::vector<Vec>& relation_image, int d);
  std::size_t dim() const { return positions_.size(); }
  /// Ambient coordinates of the surviving basis vectors.
  const std::vector<linalg::Index>& positions() const { return positions_; }
  Vec coords(const Vec& ambient) const;

 private:
  linalg::Echelon<K> image_;
  std::vector<linalg::Index> positions_;
  std::vector<std::int64_t> local_;  // ambient index -> position in positions_ or -1
};

/// (component, word) labels of a basis of M_d.
template <class K>
std::vector<std::pair<std::size_t, Word>> component_basis(const GradedAlgebra<K>& algebra,
                                                          const ModulePresentation<K>& m, int d);
template <class K>
std::size_t component_dim(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m, int d);

/// P^L → … → P¹ → P⁰ → M, exact in degrees <= D.
template <class K>
struct TruncatedResolution {
  int lo = 0;  // lowest degree where anything lives
  int D = 0;
  ModuleMap<K> cover;                     // P⁰ → F⁰ (lift of P⁰ → M)
  std::vector<ModuleMap<K>> differentials;  // d_i: P^i → P^{i-1}, i = 1..L

  std::size_t length() const { return differentials.size(); }
  const FreeModule& term(std::size_t i) const { return i == 0 ? cover.source : differentials[i - 1].source; }
};

template <class K>
TruncatedResolution<K> minimal_resolution(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m, int D,
                                          std::size_t length = 2);

/// rows[i][d - min_degree] = dim Tor_i(M, k)_d.
struct TorProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<std::vector<std::size_t>> rows;

  std::size_t at(std::size_t i, int d) const;
  std::size_t total(std::size_t i) const;
};

template <class K>
TorProfile tor_profile(const TruncatedResolution<K>& res);

template <class K>
TorProfile tor_dims(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m, int D, std::size_t length = 2);

struct ResolutionAudit {
  bool exact = true;
  bool minimal = true;
  bool euler_applicable = false;  // last kernel vanishes up to D
  bool euler_holds = true;
  std::vector<std::string> failures;

  bool ok() const { return exact && minimal && (!euler_applicable || euler_holds); }
};

template <class K>
ResolutionAudit audit_resolution(const GradedAlgebra<K>& algebra, const ModulePresentation<K>& m,
                                 const TruncatedResolution<K>& res);

}  // namespace ncoh
