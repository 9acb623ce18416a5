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
#include <vector>

#include "ncoh/coherence.hpp"

namespace ncoh {

struct VeroneseDegree {
  int internal = 0;  // i
  int ambient = 0;   // i*n
  std::size_t free_dim = 0;       // symbol words of length i
  std::size_t kernel_dim = 0;     // relations holding in A_{in}
  std::size_t consequences = 0;   // of the lower-degree relations
  std::vector<std::string> new_relations;
  // New relations counted modulo the ideal of symbol commutators as well;
  // only computed at degrees with new relations.
  std::size_t new_modulo_commutators = 0;
};

/// Presentation of A^{(n)} = ⊕ A_{in} on the basis of A_n, discovered
/// degreewise up to internal degree D / n.
struct VeronesePresentation {
  int n = 2;
  int D = 0;      // ambient bound
  int window = 0;  // internal bound
  std::vector<std::string> symbols;   // symbol name -> word of A_n
  std::vector<std::string> symbol_words;
  AlgebraPresentation presentation;   // on the symbols
  std::vector<VeroneseDegree> degrees;
  std::vector<std::size_t> hilbert_presented;  // from the presentation, i = 0..window
  std::vector<std::size_t> hilbert_ambient;    // dim A_{in}
  bool hilbert_consistent = false;
  bool monomial_only = true;
  int last_relation_degree = 0;  // 0 when relation-free

  int trailing_silent() const { return window - last_relation_degree; }
  std::size_t relation_count() const;
  std::size_t relation_count_modulo_commutators() const;
};

/// Throws NotDegreeOneGenerated when `require_degree_one` and some
/// generator has weight > 1. Throws InvalidArgument for n < 2.
template <class K>
VeronesePresentation veronese_presentation(const AlgebraPresentation& p, int n, int D, bool require_degree_one = false);

/// P^m = ⊕_i A_{m+in} as a right A^{(n)}-module.
struct PmModuleReport {
  int m = 0;
  std::vector<std::size_t> generators;  // new minimal generators per internal degree
  std::vector<std::size_t> syzygies;    // new first syzygies per internal degree
  bool generated_in_bottom_degree = false;  // all generators at i = 0 (so by A_m)
  bool spans_components = false;            // generators reach every A_{m+in}
  int window = 0;

  int trailing_silent() const;
};

template <class K>
std::vector<PmModuleReport> pm_module_presentations(const AlgebraPresentation& p, int n, int D);

struct VeroneseCrossCheck {
  AlgebraProbe algebra_probe;
  AlgebraProbe veronese_probe;
  VeronesePresentation veronese;
  bool agree = false;
  bool extrapolated = false;  // the Veronese probe reaches past the discovered window
};

/// Probes A and the discovered A^{(n)}; disagreement is reported, not raised.
template <class K>
VeroneseCrossCheck veronese_cross_check(const AlgebraPresentation& p, int n, int D, const ProbeConfig& algebra_config,
                                        const ProbeConfig& veronese_config);

}  // namespace ncoh
