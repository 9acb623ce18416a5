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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncoh/grmod.hpp"

namespace ncoh {

struct ZAudit {
  bool associative = true;
  bool unital = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return associative && unital; }
};

/// Window [lo, hi] of the Z-algebra of a graded algebra: A_ij = A_{j-i} for
/// lo <= i <= j <= hi, with A_jk ⊗ A_ij → A_ik given by a ⊗ b ↦ a·b.
template <class K>
class ZAlgebraWindow {
 public:
  using Vec = linalg::SparseVec<K>;

  /// Throws DegreeBoundExceeded when hi - lo exceeds the algebra's bound.
  static ZAlgebraWindow from_graded(std::shared_ptr<const GradedAlgebra<K>> algebra, int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool contains(int i) const { return lo_ <= i && i <= hi_; }
  const GradedAlgebra<K>& graded() const { return *A_; }
  std::size_t dim(int i, int j) const;
  /// Normal words spanning A_ij.
  const std::vector<Word>& basis(int i, int j) const { return A_->basis(j - i); }
  /// Largest generator weight; steps of this length generate the window.
  int generating_step() const { return step_; }

  /// Basis element a of A_jk times basis element b of A_ij, in A_ik.
  const Vec& multiply_basis(int i, int j, int k, linalg::Index a, linalg::Index b) const;
  Vec multiply(int i, int j, int k, const Vec& a, const Vec& b) const;

  /// Unit and associativity laws over every composable triple of degrees.
  ZAudit audit() const;

 private:
  std::shared_ptr<const GradedAlgebra<K>> A_;
  int lo_ = 0;
  int hi_ = 0;
  int step_ = 1;
  // mult_[d1][d2][a * dim(d2) + b] = basis_{d1}[a] · basis_{d2}[b]
  std::vector<std::vector<std::vector<Vec>>> mult_;
};

/// Map ⊕_l P_{sources[l]} → ⊕_k P_{targets[k]}; entries[k][l] lies in
/// A_{sources[l], targets[k]} = A_{targets[k] - sources[l]}.
template <class K>
struct ProjectivePresentation {
  std::vector<int> targets;
  std::vector<int> sources;
  std::vector<std::vector<NcPoly<K>>> entries;

  /// Throws InvalidArgument on shape or degree mismatch.
  void validate() const;
};

/// Right module over a Z-algebra window: components M_i and actions
/// M_j ⊗ A_ij → M_i.
template <class K>
class ZModuleWindow {
 public:
  using Vec = linalg::SparseVec<K>;

  ZModuleWindow(std::shared_ptr<const ZAlgebraWindow<K>> algebra, std::vector<std::size_t> dims);

  const ZAlgebraWindow<K>& algebra() const { return *Z_; }
  std::shared_ptr<const ZAlgebraWindow<K>> algebra_ptr() const { return Z_; }
  int lo() const { return Z_->lo(); }
  int hi() const { return Z_->hi(); }
  std::size_t dim(int i) const { return Z_->contains(i) ? dims_[static_cast<std::size_t>(i - lo())] : 0; }
  std::vector<std::size_t> dims() const { return dims_; }
  std::size_t total_dim() const;

  /// Image of basis vector e of M_j under basis element c of A_ij.
  const Vec& act_basis(int j, int i, linalg::Index c, linalg::Index e) const;
  Vec act(int j, int i, const Vec& m, const Vec& a) const;
  void set_action(int j, int i, std::vector<std::vector<Vec>> images);  // [c][e]

  /// Set when the module is a cokernel of projectives (a Γ* input).
  const std::optional<ProjectivePresentation<K>>& presentation() const { return presentation_; }
  void set_presentation(std::optional<ProjectivePresentation<K>> p) { presentation_ = std::move(p); }

  /// Unit law on every M_i and associativity over every composable triple.
  ZAudit audit() const;
  /// dim M_i minus the span of what higher indices generate, per index.
  std::vector<std::size_t> new_generators() const;

 private:
  std::size_t slot(int j, int i) const;

  std::shared_ptr<const ZAlgebraWindow<K>> Z_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::vector<Vec>>> act_;  // [slot][c][e]
  std::optional<ProjectivePresentation<K>> presentation_;
};

/// (M_Z)_i = M_{-i}: a graded module transported through the component
/// computations of the graded algebra. A(j) becomes P_j.
template <class K>
ZModuleWindow<K> transport_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, const ModulePresentation<K>& m);

/// Cokernel of a map of projectives built from the window's own
/// multiplication tensors.
template <class K>
ZModuleWindow<K> cokernel_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, const ProjectivePresentation<K>& p);

template <class K>
ZModuleWindow<K> projective_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, int j);

/// S_j, one-dimensional at index j, as coker(⊕_g P_{j - w_g} → P_j).
template <class K>
ZModuleWindow<K> simple_module(std::shared_ptr<const ZAlgebraWindow<K>> algebra, int j);

template <class K>
ZModuleWindow<K> direct_sum(const std::vector<ZModuleWindow<K>>& parts);

/// M_{<=n}: components above n dropped. The result carries no presentation.
template <class K>
ZModuleWindow<K> truncate_below(const ZModuleWindow<K>& m, int n);

/// Degree-0 homomorphisms M → N on the window.
template <class K>
std::size_t hom_dim(const ZModuleWindow<K>& m, const ZModuleWindow<K>& n);

struct CohprojHom {
  std::vector<int> levels;         // truncation levels n, decreasing
  std::vector<std::size_t> dims;   // dim Hom(M_{<=n}, N)
  bool stabilized = false;
  std::size_t value = 0;           // meaningful when stabilized
  int stable_from = 0;             // highest level of the final constant run

  std::string to_string() const;   // "3 (from 2)" or "NOT_STABILIZED"
};

/// Stabilized Hom(M_{<=n}, N) as n decreases from hi to lo + r, with r the
/// largest degree of a Gröbner element (at least 1). Stable after 4 equal
/// trailing levels. Throws WindowTooShallow below 6 levels.
template <class K>
CohprojHom cohproj_hom(const ZModuleWindow<K>& m, const ZModuleWindow<K>& n);

inline constexpr std::size_t kStableRun = 4;
inline constexpr std::size_t kMinLevels = 6;

struct IsoCheck {
  bool pass = false;
  bool module_map = false;             // commutes with the action
  std::vector<int> indices;
  std::vector<std::size_t> source_dims;
  std::vector<std::size_t> target_dims;
  std::vector<std::size_t> ranks;
  std::vector<std::string> letters;    // left multipliers, one per summand
};

/// P_{i-1}^{⊕ dimV} → (P_i)_{<=i-1} by left multiplication with the letters
/// of T(V) on the window [i - depth, i]. The negative control uses the last
/// letter on a single summand.
IsoCheck tensor_projective_iso_check(int dimV, int i, int depth, bool negative_control = false);

/// Γ*: the graded module presented by the same matrix, P_j ↔ A(j).
/// Throws NotPresentedByProjectives when `m` carries no presentation.
template <class K>
ModulePresentation<K> gamma_star_presentation(const ZModuleWindow<K>& m);

/// Commutative model k<x,y>/(xy - yx) over the prime field.
AlgebraPresentation commutative_model();

struct RoundTripReport {
  std::vector<std::string> names;
  // [s][t]: cohproj Hom(M_s, M_t) before and after Γ_{<=m}Γ*
  std::vector<std::vector<CohprojHom>> before;
  std::vector<std::vector<CohprojHom>> after;
  bool transports_agree = false;  // cokernel and transported windows match dimensionwise
  bool preserved = false;
};

/// Six fixed presentations over the commutative model on [lo, hi], with
/// b = hi - 4: P_b, P_{b+2}, coker(x: P_b → P_{b+1}), coker(x²: P_b → P_{b+2}),
/// S_{b+2}, P_{b+1} ⊕ coker(y: P_{b+2} → P_{b+3}). The round trip is
/// M ↦ (Γ* M transported back)_{<=m}.
RoundTripReport serre_round_trip(int lo, int hi, int m);

}  // namespace ncoh
