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

#include "ncoh/coherence.hpp"

#include <algorithm>

namespace ncoh {

using linalg::Index;

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Stable: return "STABLE";
    case VerdictKind::Inconclusive: return "INCONCLUSIVE";
    case VerdictKind::Growing: return "GROWING";
  }
  return "?";
}

const char* to_string(Side side) { return side == Side::Right ? "right" : "left"; }

std::string Verdict::to_string() const {
  if (kind == VerdictKind::Stable) return "STABLE(" + std::to_string(stable_from) + ")";
  return ncoh::to_string(kind);
}

Verdict Verdict::worst(const Verdict& a, const Verdict& b) {
  if (a.kind != b.kind) return a.kind > b.kind ? a : b;
  if (a.kind == VerdictKind::Stable) return a.stable_from >= b.stable_from ? a : b;
  return a;
}

Verdict classify_profile(const std::vector<std::size_t>& profile, int D, int margin) {
  int last = 0;
  for (int t = 0; t <= D && t < static_cast<int>(profile.size()); ++t)
    if (profile[static_cast<std::size_t>(t)] > 0) last = t;
  if (D - last >= margin) return {VerdictKind::Stable, last};
  int half = (D + 1) / 2;
  int len = D - half + 1;
  int nonzero = 0;
  for (int t = half; t <= D && t < static_cast<int>(profile.size()); ++t)
    if (profile[static_cast<std::size_t>(t)] > 0) ++nonzero;
  if (2 * nonzero >= len) return {VerdictKind::Growing, 0};
  return {VerdictKind::Inconclusive, 0};
}

namespace {

template <class K>
ModuleMap<K> ideal_map(const std::vector<NcPoly<K>>& gens) {
  FreeModule src;
  for (const auto& g : gens) src.shifts.push_back(g.degree());
  auto f = ModuleMap<K>::zero(src, FreeModule{{0}});
  for (std::size_t i = 0; i < gens.size(); ++i) f.entries[0][i] = gens[i];
  return f;
}

}  // namespace

template <class K>
bool right_ideal_contains(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens, const NcPoly<K>& element) {
  if (element.is_zero()) return true;
  std::vector<NcPoly<K>> usable;
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() <= element.degree()) usable.push_back(g);
  if (usable.empty()) return algebra.to_vector(element).empty();
  MapEvaluator<K> ev(algebra, ideal_map(usable));
  linalg::Echelon<K> span(static_cast<Index>(algebra.dim(element.degree())));
  for (const auto& c : ev.columns(element.degree())) span.insert(c);
  return span.contains(algebra.to_vector(element));
}

template <class K>
std::vector<NcPoly<K>> minimize_ideal_generators(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens,
                                                 std::vector<NcPoly<K>>* dropped) {
  std::vector<NcPoly<K>> order = gens;
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  std::vector<NcPoly<K>> kept;
  for (const auto& g : order) {
    if (g.is_zero() || g.degree() < 1)
      throw Error(ErrorKind::InvalidArgument, "ideal generators must be nonzero of degree >= 1");
    if (algebra.to_vector(g).empty())
      throw Error(ErrorKind::InvalidArgument, "ideal generator '" + g.to_string(algebra.gens()) + "' vanishes in A");
    if (right_ideal_contains(algebra, kept, g)) {
      if (dropped) dropped->push_back(g);
    } else {
      kept.push_back(algebra.to_poly(g.degree(), algebra.to_vector(g)));
    }
  }
  return kept;
}

template <class K>
IdealProbe probe_ideal(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens, int D, int margin) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
  IdealProbe probe;
  probe.D = D;
  for (const auto& g : gens) probe.gens.push_back(g.to_string(algebra.gens()));
  std::vector<NcPoly<K>> dropped;
  auto kept = minimize_ideal_generators(algebra, gens, &dropped);
  for (const auto& g : dropped) probe.dropped.push_back(g.to_string(algebra.gens()));
  probe.shift = kept.front().degree();
  int top = D + probe.shift;
  if (top > algebra.bound())
    throw Error(ErrorKind::DegreeBoundExceeded, "probe needs the algebra up to degree " + std::to_string(top));

  auto f = ideal_map(kept);
  auto syz = kernel_min_generators(algebra, f, top);
  probe.profile.assign(static_cast<std::size_t>(D) + 1, 0);
  FreeComponents<K> src(algebra, f.source);
  for (std::size_t i = 0; i < syz.degrees.size(); ++i) {
    int t = syz.degrees[i] - probe.shift;
    ++probe.profile[static_cast<std::size_t>(t)];
  }
  probe.verdict = classify_profile(probe.profile, D, margin);
  int half = (D + 1) / 2;
  for (std::size_t i = 0; i < syz.degrees.size(); ++i) {
    int t = syz.degrees[i] - probe.shift;
    if (t < half) continue;
    Syzygy s;
    s.t = t;
    for (const auto& c : src.to_polys(syz.degrees[i], syz.elements[i])) s.coefficients.push_back(c.to_string(algebra.gens()));
    probe.witness.push_back(std::move(s));
  }
  return probe;
}

template <class K>
bool probe_matches_tor(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& gens, const IdealProbe& probe) {
  auto kept = minimize_ideal_generators(algebra, gens);
  auto quotient = ModulePresentation<K>::cyclic_quotient(kept);
  auto tor = tor_dims(algebra, quotient, probe.D + probe.shift, 2);
  for (int t = 0; t <= probe.D; ++t)
    if (tor.at(2, t + probe.shift) != probe.profile[static_cast<std::size_t>(t)]) return false;
  // Tor_1(A/J) = Tor_0(J): the kept generators
  std::size_t total = 0;
  for (int d = tor.min_degree; d <= tor.max_degree; ++d) total += tor.at(1, d);
  return total == kept.size();
}

template <class K>
AlgebraProbe probe_algebra(const AlgebraPresentation& p, const ProbeConfig& config, Side side) {
  AlgebraPresentation q = side == Side::Right ? p : opposite(p);
  auto algebra = GradedAlgebra<K>::from_presentation(q, config.D + config.gen_degree_bound);
  AlgebraProbe report;
  report.algebra = p.label;
  report.side = side;
  report.config = config;

  std::vector<NcPoly<K>> candidates;
  for (int d = 1; d <= config.gen_degree_bound; ++d) {
    const auto& words = algebra.basis(d);
    for (auto it = words.rbegin(); it != words.rend(); ++it) candidates.push_back(NcPoly<K>::monomial(*it));
  }
  std::vector<std::vector<NcPoly<K>>> ideals;
  for (const auto& c : candidates) ideals.push_back({c});
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) ideals.push_back({candidates[i], candidates[j]});
  if (ideals.size() > config.max_ideals) ideals.resize(config.max_ideals);

  for (const auto& gens : ideals) {
    report.ideals.push_back(probe_ideal(algebra, gens, config.D, config.margin));
    const auto& probe = report.ideals.back();
    report.aggregate = report.ideals.size() == 1 ? probe.verdict : Verdict::worst(report.aggregate, probe.verdict);
    if (!report.witness_ideal && probe.verdict.kind == VerdictKind::Growing) report.witness_ideal = report.ideals.size() - 1;
  }
  return report;
}

template <class K>
std::vector<ChainStage> staged_chain(const GradedAlgebra<K>& algebra, const std::vector<NcPoly<K>>& chain) {
  std::vector<ChainStage> out;
  std::vector<NcPoly<K>> prefix;
  for (std::size_t n = 0; n < chain.size(); ++n) {
    out.push_back({static_cast<int>(n) + 1, chain[n].degree(), !right_ideal_contains(algebra, prefix, chain[n])});
    prefix.push_back(chain[n]);
  }
  return out;
}

std::vector<CorpusEntry> builtin_corpus() {
  using V = VerdictKind;
  std::vector<CorpusEntry> c;
  c.push_back({"T1", "tensor algebra on one generator", make_presentation("T1", {{"x", 1}}, {}), V::Stable, V::Stable, {}, ""});
  c.push_back({"T2", "tensor algebra on two generators", make_presentation("T2", {{"x", 1}, {"y", 1}}, {}), V::Stable,
               V::Stable, {}, ""});
  c.push_back({"xy", "monomial algebra k<x,y>/(xy)", make_presentation("xy", {{"x", 1}, {"y", 1}}, {"x*y"}), V::Stable,
               V::Stable, {}, "finitely many monomial relations"});
  c.push_back({"ex1", "k<x,y,z>/(xy, yz, xz - zx)",
               make_presentation("ex1", {{"x", 1}, {"y", 1}, {"z", 1}}, {"x*y", "y*z", "x*z - z*x"}), V::Growing,
               V::Growing, {"x"}, "syzygies z^n*y"});
  c.push_back({"ex2", "k<x,y,z>/(yz, xz - zx)",
               make_presentation("ex2", {{"x", 1}, {"y", 1}, {"z", 1}}, {"y*z", "x*z - z*x"}), V::Stable, V::Growing, {},
               "left witness found by search"});
  c.push_back({"remark", "k<x,y>/(x^2y, yx^2, yxy, xy^(2n+1)x for n >= 0)",
               make_presentation("remark", {{"x", 1}, {"y", 1}}, {"x^2*y", "y*x^2", "y*x*y"},
                                 {RelationFamily{"x*y^{2*n+1}*x", "n", 0, false}}),
               V::Growing, V::Growing, {"x*y"}, "witness (x*y) is a choice"});
  c.push_back({"noeth", "k<t,z>/(zt): B = k[t] with z killing B_+", make_presentation("noeth", {{"t", 1}, {"z", 1}}, {"z*t"}),
               V::Stable, std::nullopt, {}, "coherent, not Noetherian"});
  c.push_back({"comm", "commutative model k<x,y>/(xy - yx)", make_presentation("comm", {{"x", 1}, {"y", 1}}, {"x*y - y*x"}),
               V::Stable, V::Stable, {}, ""});
  return c;
}

const CorpusEntry& corpus_entry(const std::string& label) {
  static const std::vector<CorpusEntry> corpus = builtin_corpus();
  for (const auto& e : corpus)
    if (e.label == label) return e;
  throw Error(ErrorKind::InvalidArgument, "no corpus entry '" + label + "'");
}

#define NCOH_INSTANTIATE(K)                                                                                       \
  template IdealProbe probe_ideal<K>(const GradedAlgebra<K>&, const std::vector<NcPoly<K>>&, int, int);           \
  template bool right_ideal_contains<K>(const GradedAlgebra<K>&, const std::vector<NcPoly<K>>&, const NcPoly<K>&); \
  template std::vector<NcPoly<K>> minimize_ideal_generators<K>(const GradedAlgebra<K>&,                           \
                                                               const std::vector<NcPoly<K>>&,                     \
                                                               std::vector<NcPoly<K>>*);                          \
  template bool probe_matches_tor<K>(const GradedAlgebra<K>&, const std::vector<NcPoly<K>>&, const IdealProbe&);  \
  template AlgebraProbe probe_algebra<K>(const AlgebraPresentation&, const ProbeConfig&, Side);                   \
  template std::vector<ChainStage> staged_chain<K>(const GradedAlgebra<K>&, const std::vector<NcPoly<K>>&);

NCOH_INSTANTIATE(Rational)
NCOH_INSTANTIATE(ModP)

}  // namespace ncoh
