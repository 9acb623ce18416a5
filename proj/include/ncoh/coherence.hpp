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

#include <optional>
#include <string>
#include <vector>

#include "ncoh/grmod.hpp"

namespace ncoh {

enum class VerdictKind { Stable, Inconclusive, Growing };  // increasing severity

struct Verdict {
  VerdictKind kind = VerdictKind::Stable;
  int stable_from = 0;  // meaningful for Stable only

  std::string to_string() const;
  static Verdict worst(const Verdict& a, const Verdict& b);
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(VerdictKind kind);

/// Stable(d0) when the last nonzero index d0 has D - d0 >= margin; Growing
/// when at least half of the top half-window [ceil(D/2), D] is nonzero;
/// Inconclusive otherwise.
Verdict classify_profile(const std::vector<std::size_t>& profile, int D, int margin = 4);

struct Syzygy {
  int t = 0;                          // profile index
  std::vector<std::string> coefficients;  // one per (kept) ideal generator
};

/// Evidence about Tor_1(J, k) for one right ideal J, truncated at D. Indices
/// t count degrees above the lowest generator: t = degree - shift.
struct IdealProbe {
  std::vector<std::string> gens;
  std::vector<std::string> dropped;  // generators already in the ideal of the others
  int shift = 0;
  int D = 0;
  std::vector<std::size_t> profile;  // new syzygy generators, t = 0..D
  Verdict verdict;
  std::vector<Syzygy> witness;       // generators with t in the top half-window
};

template <class K>
IdealProbe probe_ideal(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens, int D, int margin = 4);

/// Whether `element` lies in the right ideal generated by `gens`.
template <class K>
bool right_ideal_contains(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens, const NcPoly<K>& element);

/// Generators that survive redundancy removal, in probe order.
template <class K>
std::vector<NcPoly<K>> minimize_ideal_generators(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens,
                                                 std::vector<NcPoly<K>>* dropped = nullptr);

/// Compares a probe with the Tor_2 row of A/J: Tor_1(J) = Tor_2(A/J).
template <class K>
bool probe_matches_tor(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens, const IdealProbe& probe);

enum class Side { Right, Left };
const char* to_string(Side side);

struct ProbeConfig {
  int D = 10;
  int gen_degree_bound = 2;
  std::size_t max_ideals = 64;
  int margin = 4;
};

struct AlgebraProbe {
  std::string algebra;
  Side side = Side::Right;
  ProbeConfig config;
  std::vector<IdealProbe> ideals;
  Verdict aggregate;
  std::optional<std::size_t> witness_ideal;  // first Growing ideal
};

/// Probes singleton then two-generator right ideals spanned by normal words
/// of degree 1..gen_degree_bound. The left side probes the opposite algebra.
template <class K>
AlgebraProbe probe_algebra(const AlgebraPresentation& p, const ProbeConfig& config, Side side);

struct ChainStage {
  int stage = 0;
  int degree = 0;
  bool new_generator = false;
};

/// For chain c_1, c_2, …: is c_n outside the right ideal (c_1, …, c_{n-1})?
template <class K>
std::vector<ChainStage> staged_chain(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& chain);

struct CorpusEntry {
  std::string label;
  std::string description;
  AlgebraPresentation presentation;
  std::optional<VerdictKind> expected_right;
  std::optional<VerdictKind> expected_left;
  std::vector<std::string> witness_ideal;  // right ideal expected to be Growing
  std::string witness_note;
};

std::vector<CorpusEntry> builtin_corpus();
const CorpusEntry& corpus_entry(const std::string& label);

}  // namespace ncoh
