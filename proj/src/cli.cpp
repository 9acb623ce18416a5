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

#include "ncoh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncoh/acceptance.hpp"
#include "ncoh/veronese.hpp"
#include "ncoh/zalg.hpp"

namespace ncoh {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

json algebra_block(const AlgebraPresentation& p) {
  json gens = json::array();
  for (const auto& g : p.gens.generators()) gens.push_back({{"name", g.name}, {"weight", g.weight}});
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(r.to_string(p.gens));
  json fams = json::array();
  for (const auto& f : p.families)
    fams.push_back({{"text", f.text}, {"param", f.param}, {"start", f.start}, {"reversed", f.reversed}});
  return {{"label", p.label},     {"hash", content_hash(p)}, {"field", p.field.to_string()},
          {"generators", gens},  {"relations", rels},       {"families", fams}};
}

json verdict_json(const Verdict& v) { return v.to_string(); }

json probe_json(const AlgebraProbe& probe) {
  json ideals = json::array();
  for (const auto& ideal : probe.ideals) {
    json witness = json::array();
    for (const auto& s : ideal.witness) witness.push_back({{"t", s.t}, {"coefficients", s.coefficients}});
    ideals.push_back({{"gens", ideal.gens},
                      {"dropped", ideal.dropped},
                      {"shift", ideal.shift},
                      {"profile", ideal.profile},
                      {"verdict", verdict_json(ideal.verdict)},
                      {"witness", witness}});
  }
  json out = {{"algebra", probe.algebra},
              {"side", to_string(probe.side)},
              {"D", probe.config.D},
              {"gen_degree_bound", probe.config.gen_degree_bound},
              {"max_ideals", probe.config.max_ideals},
              {"margin", probe.config.margin},
              {"ideals", ideals},
              {"aggregate", verdict_json(probe.aggregate)}};
  out["witness_ideal"] = probe.witness_ideal ? json(probe.ideals[*probe.witness_ideal].gens) : json(nullptr);
  return out;
}

json veronese_json(const VeronesePresentation& v) {
  json gens = json::array();
  for (std::size_t k = 0; k < v.symbols.size(); ++k) gens.push_back({{"symbol", v.symbols[k]}, {"word", v.symbol_words[k]}});
  json degrees = json::array();
  for (const auto& d : v.degrees)
    degrees.push_back({{"internal", d.internal},
                       {"ambient", d.ambient},
                       {"free_dim", d.free_dim},
                       {"kernel_dim", d.kernel_dim},
                       {"consequences", d.consequences},
                       {"new_relations", d.new_relations},
                       {"new_modulo_commutators", d.new_modulo_commutators}});
  return {{"n", v.n},
          {"D", v.D},
          {"window", v.window},
          {"generators", gens},
          {"degrees", degrees},
          {"relation_count", v.relation_count()},
          {"relation_count_modulo_commutators", v.relation_count_modulo_commutators()},
          {"hilbert", {{"presented", v.hilbert_presented}, {"ambient", v.hilbert_ambient}, {"consistent", v.hilbert_consistent}}},
          {"monomial_only", v.monomial_only},
          {"last_relation_degree", v.last_relation_degree},
          {"trailing_silent", v.trailing_silent()},
          {"silence_is_heuristic", true}};
}

json cohproj_json(int a, int b, const CohprojHom& h) {
  return {{"a", a},           {"b", b},           {"levels", h.levels},         {"dims", h.dims},
          {"stabilized", h.stabilized}, {"value", h.stabilized ? json(h.value) : json(nullptr)},
          {"stable_from", h.stabilized ? json(h.stable_from) : json(nullptr)}};
}

template <class K>
ModulePresentation<K> module_from_config(const SessionConfig& c, const AlgebraPresentation& p) {
  auto poly = [&](const std::string& s) { return to_ncpoly<K>(parse_poly(trim(s), p.gens), p.gens); };
  if (c.module == "simple") return ModulePresentation<K>::simple(p.gens);
  if (c.module == "free") return ModulePresentation<K>::free(FreeModule{c.gen_shifts});
  if (c.module == "quotient") {
    std::vector<NcPoly<K>> gens;
    for (const auto& s : c.ideal) gens.push_back(poly(s));
    if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "--module quotient needs --ideal");
    return ModulePresentation<K>::cyclic_quotient(gens);
  }
  if (c.module == "custom") {
    auto f = ModuleMap<K>::zero(FreeModule{c.rel_shifts}, FreeModule{c.gen_shifts});
    auto rows = split(c.matrix, ';');
    if (rows.size() != c.gen_shifts.size())
      throw Error(ErrorKind::InvalidArgument, "--matrix has " + std::to_string(rows.size()) + " rows for " +
                                                  std::to_string(c.gen_shifts.size()) + " generators");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      auto entries = split(rows[k], ',');
      if (entries.size() != c.rel_shifts.size())
        throw Error(ErrorKind::InvalidArgument, "--matrix row " + std::to_string(k) + " has " +
                                                    std::to_string(entries.size()) + " entries for " +
                                                    std::to_string(c.rel_shifts.size()) + " relations");
      for (std::size_t l = 0; l < entries.size(); ++l)
        if (trim(entries[l]) != "0") f.entries[k][l] = poly(entries[l]);
    }
    f.validate();
    return {f};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown module kind '" + c.module + "'");
}

template <class K>
json hilbert_block(const SessionConfig& c, const AlgebraPresentation& p) {
  auto gb = GroebnerBasis<K>::complete(p, c.D);
  json out = {{"dims", gb.hilbert_dims(c.D)}};
  if (c.check) {
    const int top = std::min(c.D, 8);
    std::vector<std::size_t> brute;
    for (int d = 0; d <= top; ++d) brute.push_back(component_dim_bruteforce<K>(p, d));
    auto dims = gb.hilbert_dims(top);
    out["bruteforce"] = brute;
    out["bruteforce_agrees"] = brute == dims;
  }
  return out;
}

template <class K>
json gb_block(const SessionConfig& c, const AlgebraPresentation& p) {
  auto gb = GroebnerBasis<K>::complete(p, c.D);
  json elements = json::array();
  for (const auto& f : gb.elements()) elements.push_back(f.to_string(p.gens));
  json log = json::array();
  for (const auto& s : gb.log())
    log.push_back({{"degree", s.degree}, {"relations", s.relations}, {"overlaps", s.overlaps}, {"added", s.added}});
  return {{"elements", elements}, {"log", log}};
}

template <class K>
json tor_block(const SessionConfig& c, const AlgebraPresentation& p) {
  auto A = GradedAlgebra<K>::from_presentation(p, c.D);
  auto m = module_from_config<K>(c, p);
  auto res = minimal_resolution(A, m, c.D, static_cast<std::size_t>(c.length));
  auto tor = tor_profile(res);
  auto audit = audit_resolution(A, m, res);
  json terms = json::array();
  for (std::size_t i = 0; i <= res.length(); ++i) terms.push_back(res.term(i).shifts);
  return {{"module", c.module},
          {"length", c.length},
          {"min_degree", tor.min_degree},
          {"max_degree", tor.max_degree},
          {"rows", tor.rows},
          {"terms", terms},
          {"audit", {{"exact", audit.exact}, {"minimal", audit.minimal}, {"euler_applicable", audit.euler_applicable},
                     {"euler_holds", audit.euler_holds}, {"failures", audit.failures}}}};
}

template <class K>
json probe_block(const SessionConfig& c, const AlgebraPresentation& p) {
  ProbeConfig cfg;
  cfg.D = c.D;
  cfg.gen_degree_bound = c.gen_degree_bound;
  cfg.max_ideals = c.max_ideals;
  json out = json::array();
  if (c.side != "right" && c.side != "left" && c.side != "both")
    throw Error(ErrorKind::InvalidArgument, "--side must be right, left or both");
  if (c.side != "left") out.push_back(probe_json(probe_algebra<K>(p, cfg, Side::Right)));
  if (c.side != "right") out.push_back(probe_json(probe_algebra<K>(p, cfg, Side::Left)));
  return out;
}

template <class K>
json veronese_block(const SessionConfig& c, const AlgebraPresentation& p) {
  auto v = veronese_presentation<K>(p, c.n, c.D);
  json out = veronese_json(v);
  if (p.gens.degree_one_generated()) {
    json pm = json::array();
    for (const auto& r : pm_module_presentations<K>(p, c.n, c.D))
      pm.push_back({{"m", r.m},
                    {"window", r.window},
                    {"generators", r.generators},
                    {"syzygies", r.syzygies},
                    {"generated_in_bottom_degree", r.generated_in_bottom_degree},
                    {"spans_components", r.spans_components},
                    {"trailing_silent", r.trailing_silent()}});
    out["pm_modules"] = pm;
  } else {
    out["pm_modules"] = nullptr;
  }
  if (c.cross_check) {
    ProbeConfig a;
    a.D = c.D;
    a.gen_degree_bound = c.gen_degree_bound;
    a.max_ideals = c.max_ideals;
    ProbeConfig b = a;
    b.D = c.veronese_probe_degree;
    auto cc = veronese_cross_check<K>(p, c.n, c.D, a, b);
    out["cross_check"] = {{"algebra", verdict_json(cc.algebra_probe.aggregate)},
                          {"veronese", verdict_json(cc.veronese_probe.aggregate)},
                          {"veronese_D", b.D},
                          {"agree", cc.agree},
                          {"extrapolated", cc.extrapolated}};
  }
  return out;
}

template <class K>
void zalg_blocks(const SessionConfig& c, const AlgebraPresentation& p, json& report) {
  auto [lo, hi] = c.window.value_or(std::pair<int, int>{0, std::min(c.D, 8)});
  auto A = std::make_shared<const GradedAlgebra<K>>(GradedAlgebra<K>::from_presentation(p, std::max(c.D, hi - lo)));
  auto Z = std::make_shared<const ZAlgebraWindow<K>>(ZAlgebraWindow<K>::from_graded(A, lo, hi));
  auto audit = Z->audit();
  json dims = json::array();
  for (int j = lo; j <= hi; ++j) dims.push_back(Z->dim(lo, j));
  report["zalgebra"] = {{"window", {lo, hi}},
                        {"dims_from_lo", dims},
                        {"audit", {{"associative", audit.associative}, {"unital", audit.unital}, {"checks", audit.checks}}}};
  const int a0 = std::max(lo, c.hom_range.first), b0 = std::min(hi, c.hom_range.second);
  json entries = json::array();
  std::vector<ZModuleWindow<K>> proj;
  for (int j = a0; j <= b0; ++j) proj.push_back(projective_module<K>(Z, j));
  for (int a = a0; a <= b0; ++a)
    for (int b = a; b <= b0; ++b)
      entries.push_back(cohproj_json(a, b, cohproj_hom(proj[static_cast<std::size_t>(a - a0)],
                                                       proj[static_cast<std::size_t>(b - a0)])));
  report["homtables"] = {{"range", {a0, b0}}, {"entries", entries}};
  if (c.round_trip) {
    const int m = hi - 3;
    auto rt = serre_round_trip(lo, hi, m);
    json table = json::array();
    for (std::size_t s = 0; s < rt.names.size(); ++s)
      for (std::size_t t = 0; t < rt.names.size(); ++t)
        table.push_back({{"source", rt.names[s]},
                         {"target", rt.names[t]},
                         {"before", rt.before[s][t].to_string()},
                         {"after", rt.after[s][t].to_string()}});
    report["homtables"]["round_trip"] = {{"m", m},
                                         {"model", "comm"},
                                         {"pairs", table},
                                         {"transports_agree", rt.transports_agree},
                                         {"preserved", rt.preserved}};
  }
}

json corpus_block(bool& mismatch) {
  json criteria = json::array();
  for (const auto& r : run_acceptance()) {
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) mismatch = true;
  }
  json entries = json::array();
  ProbeConfig cfg;
  for (const auto& e : builtin_corpus()) {
    json row = {{"label", e.label}, {"description", e.description}, {"hash", content_hash(e.presentation)}};
    for (auto side : {Side::Right, Side::Left}) {
      const auto& expected = side == Side::Right ? e.expected_right : e.expected_left;
      auto probe = with_field(e.presentation.field, [&]<class K>() { return probe_algebra<K>(e.presentation, cfg, side); });
      bool match = !expected || *expected == probe.aggregate.kind;
      if (!match) mismatch = true;
      row[to_string(side)] = {{"expected", expected ? json(to_string(*expected)) : json(nullptr)},
                              {"actual", verdict_json(probe.aggregate)},
                              {"match", match}};
    }
    entries.push_back(row);
  }
  return {{"criteria", criteria}, {"entries", entries}};
}

// ------------------------------------------------------------ text output

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

/// Left-aligned columns padded to the widest cell.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], r[k].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) {
      line += r[k];
      if (k + 1 < r.size()) line += std::string(width[k] - r[k].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

std::vector<std::string> numbered(const std::string& head, std::size_t n, int first = 0) {
  std::vector<std::string> row{head};
  for (std::size_t i = 0; i < n; ++i) row.push_back(std::to_string(first + static_cast<int>(i)));
  return row;
}

std::vector<std::string> values(const std::string& head, const json& arr) {
  std::vector<std::string> row{head};
  for (const auto& v : arr) row.push_back(cell(v));
  return row;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) throw Error(ErrorKind::InvalidArgument, "range '" + text + "' is not lo..hi");
  try {
    std::size_t used = 0;
    std::string a = text.substr(0, pos), b = text.substr(pos + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "range '" + text + "' is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "range '" + text + "' is not lo..hi");
  }
}

AlgebraPresentation load_presentation(const SessionConfig& c) {
  AlgebraPresentation p;
  if (!c.builtin.empty() && !c.input.empty())
    throw Error(ErrorKind::InvalidArgument, "give either an input file or --builtin, not both");
  if (!c.builtin.empty())
    p = corpus_entry(c.builtin).presentation;
  else if (!c.input.empty())
    p = parse_algebra_file(read_file(c.input), stem(c.input));
  else
    throw Error(ErrorKind::InvalidArgument, "no algebra given (input file or --builtin)");
  if (c.field) p.field = FieldSpec::parse(*c.field);
  if (!c.order.empty()) p = with_order(p, c.order);
  return p;
}

json build_report(const SessionConfig& c, bool& mismatch) {
  if (c.D < 2) throw Error(ErrorKind::InvalidArgument, "--max-degree must be at least 2");
  json report = {{"tool", {{"name", "ncoh"}, {"version", kToolVersion}}}, {"command", c.subcommand}, {"D", c.D}};
  if (c.subcommand == "corpus") {
    report["corpus"] = corpus_block(mismatch);
    return report;
  }
  AlgebraPresentation p = load_presentation(c);
  report["algebra"] = algebra_block(p);
  with_field(p.field, [&]<class K>() {
    if (c.subcommand == "hilbert") {
      report["hilbert"] = hilbert_block<K>(c, p);
      if (c.check && !report["hilbert"]["bruteforce_agrees"].get<bool>()) mismatch = true;
    } else if (c.subcommand == "gb") {
      report["groebner"] = gb_block<K>(c, p);
    } else if (c.subcommand == "tor") {
      report["tor"] = tor_block<K>(c, p);
    } else if (c.subcommand == "probe") {
      report["probe"] = probe_block<K>(c, p);
    } else if (c.subcommand == "veronese") {
      report["veronese"] = veronese_block<K>(c, p);
    } else if (c.subcommand == "zalg") {
      zalg_blocks<K>(c, p, report);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown subcommand '" + c.subcommand + "'");
    }
  });
  return report;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  os << "ncoh " << r["tool"]["version"].get<std::string>() << "  " << r["command"].get<std::string>()
     << "  D=" << r["D"].get<int>() << "\n";
  if (r.contains("algebra")) {
    const auto& a = r["algebra"];
    os << "algebra " << a["label"].get<std::string>() << " over " << a["field"].get<std::string>() << "  sha256 "
       << a["hash"].get<std::string>().substr(0, 16) << "\n";
  }
  os << "\n";
  if (r.contains("hilbert")) {
    const auto& h = r["hilbert"];
    std::vector<std::vector<std::string>> rows{numbered("d", h["dims"].size()), values("dim A_d", h["dims"])};
    if (h.contains("bruteforce")) rows.push_back(values("span oracle", h["bruteforce"]));
    os << table(rows);
  }
  if (r.contains("groebner")) {
    const auto& g = r["groebner"];
    os << g["elements"].size() << " basis elements\n";
    for (const auto& e : g["elements"]) os << "  " << e.get<std::string>() << "\n";
    std::vector<std::vector<std::string>> rows{{"degree", "relations", "overlaps", "added"}};
    for (const auto& s : g["log"])
      rows.push_back({cell(s["degree"]), cell(s["relations"]), cell(s["overlaps"]), cell(s["added"])});
    os << "\n" << table(rows);
  }
  if (r.contains("tor")) {
    const auto& t = r["tor"];
    std::vector<std::vector<std::string>> rows{numbered("Tor_i \\ d", t["rows"][0].size(), t["min_degree"].get<int>())};
    for (std::size_t i = 0; i < t["rows"].size(); ++i) rows.push_back(values(std::to_string(i), t["rows"][i]));
    os << table(rows) << "exact " << cell(t["audit"]["exact"]) << ", minimal " << cell(t["audit"]["minimal"]) << "\n";
  }
  if (r.contains("probe")) {
    for (const auto& side : r["probe"]) {
      os << side["side"].get<std::string>() << " probe of " << side["algebra"].get<std::string>() << ": "
         << side["aggregate"].get<std::string>() << "  (" << side["ideals"].size() << " ideals)\n";
      std::vector<std::vector<std::string>> rows{numbered("ideal \\ t", side["ideals"][0]["profile"].size())};
      rows.front().push_back("verdict");
      for (const auto& ideal : side["ideals"]) {
        std::string name = "(";
        for (std::size_t k = 0; k < ideal["gens"].size(); ++k) name += (k ? ", " : "") + ideal["gens"][k].get<std::string>();
        auto row = values(name + ")", ideal["profile"]);
        row.push_back(ideal["verdict"].get<std::string>());
        rows.push_back(row);
      }
      os << table(rows) << "\n";
    }
  }
  if (r.contains("veronese")) {
    const auto& v = r["veronese"];
    os << "Veronese n=" << v["n"].get<int>() << ": " << v["generators"].size() << " generators, "
       << v["relation_count"].get<std::size_t>() << " relations ("
       << v["relation_count_modulo_commutators"].get<std::size_t>() << " modulo commutators)\n";
    std::vector<std::vector<std::string>> rows{{"i", "in", "kernel", "consequences", "new", "new mod comm"}};
    for (const auto& d : v["degrees"])
      rows.push_back({cell(d["internal"]), cell(d["ambient"]), cell(d["kernel_dim"]), cell(d["consequences"]),
                      std::to_string(d["new_relations"].size()), cell(d["new_modulo_commutators"])});
    os << table(rows);
    os << table({numbered("i", v["hilbert"]["presented"].size()), values("presented", v["hilbert"]["presented"]),
                 values("dim A_in", v["hilbert"]["ambient"])});
    os << "trailing silent degrees: " << v["trailing_silent"].get<int>() << " (heuristic evidence)\n";
    if (v["pm_modules"].is_array())
      for (const auto& pm : v["pm_modules"])
        os << "P^" << pm["m"].get<int>() << ": generators " << pm["generators"].dump() << ", syzygies "
           << pm["syzygies"].dump() << "\n";
    if (v.contains("cross_check"))
      os << "cross-check: A " << cell(v["cross_check"]["algebra"]) << ", A^(n) " << cell(v["cross_check"]["veronese"])
         << (v["cross_check"]["agree"].get<bool>() ? ", agree\n" : ", disagree\n");
  }
  if (r.contains("zalgebra")) {
    const auto& z = r["zalgebra"];
    os << "Z-window [" << z["window"][0].get<int>() << ", " << z["window"][1].get<int>() << "]  associative "
       << cell(z["audit"]["associative"]) << ", unital " << cell(z["audit"]["unital"]) << "\n";
    std::vector<std::vector<std::string>> rows{{"a", "b", "cohproj Hom", "levels"}};
    for (const auto& e : r["homtables"]["entries"])
      rows.push_back({cell(e["a"]), cell(e["b"]),
                      e["stabilized"].get<bool>() ? cell(e["value"]) : std::string("NOT_STABILIZED"), e["dims"].dump()});
    os << table(rows);
    if (r["homtables"].contains("round_trip"))
      os << "round trip preserved: " << cell(r["homtables"]["round_trip"]["preserved"]) << "\n";
  }
  if (r.contains("corpus")) {
    std::vector<std::vector<std::string>> rows{{"#", "criterion", "result"}};
    for (const auto& c : r["corpus"]["criteria"])
      rows.push_back({cell(c["id"]), c["title"].get<std::string>(), c["pass"].get<bool>() ? "PASS" : "FAIL"});
    os << table(rows) << "\n";
    std::vector<std::vector<std::string>> erows{{"algebra", "right", "expected", "left", "expected"}};
    for (const auto& e : r["corpus"]["entries"])
      erows.push_back({e["label"].get<std::string>(), cell(e["right"]["actual"]), cell(e["right"]["expected"]),
                       cell(e["left"]["actual"]), cell(e["left"]["expected"])});
    os << table(erows);
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  SessionConfig c;
  std::string field, order, window, hom_range;
  CLI::App app{"Coherence probes for finitely presented graded algebras", "ncoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto common = [&](CLI::App* sub, bool needs_algebra) {
    if (needs_algebra) {
      sub->add_option("input", c.input, "algebra file");
      sub->add_option("--builtin", c.builtin, "built-in corpus algebra instead of a file");
    }
    sub->add_option("--max-degree,-D", c.D, "degree bound D (>= 2)")->capture_default_str();
    sub->add_option("--field", field, "Q or 'Fp <prime>'; overrides the file");
    sub->add_option("--order", order, "generator precedence, e.g. x>y>z");
    sub->add_flag("--json", c.json, "emit JSON");
  };
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function up to D");
  common(hilbert, true);
  hilbert->add_flag("--check", c.check, "compare with the span oracle up to degree 8");
  common(app.add_subcommand("gb", "truncated Gröbner basis and completion log"), true);
  auto* tor = app.add_subcommand("tor", "Tor of a module from a minimal resolution");
  common(tor, true);
  tor->add_option("--module", c.module, "simple, free, quotient or custom")->capture_default_str();
  tor->add_option("--ideal", c.ideal, "right ideal generators for --module quotient")->delimiter(',');
  tor->add_option("--gen-shifts", c.gen_shifts, "generator degrees")->delimiter(',');
  tor->add_option("--rel-shifts", c.rel_shifts, "relation degrees")->delimiter(',');
  tor->add_option("--matrix", c.matrix, "relation matrix, rows ';', entries ','");
  tor->add_option("--length", c.length, "resolution length")->capture_default_str();
  auto* probe = app.add_subcommand("probe", "coherence probe over small ideals");
  common(probe, true);
  probe->add_option("--side", c.side, "right, left or both")->capture_default_str();
  probe->add_option("--gen-degree-bound", c.gen_degree_bound, "largest generator degree")->capture_default_str();
  probe->add_option("--max-ideals", c.max_ideals, "ideal cap")->capture_default_str();
  auto* veronese = app.add_subcommand("veronese", "Veronese subalgebra presentation");
  common(veronese, true);
  veronese->add_option("--n", c.n, "step")->capture_default_str();
  veronese->add_flag("--cross-check", c.cross_check, "probe A and A^(n)");
  veronese->add_option("--veronese-probe-degree", c.veronese_probe_degree, "D for the A^(n) probe")
      ->capture_default_str();
  veronese->add_option("--gen-degree-bound", c.gen_degree_bound, "largest generator degree")->capture_default_str();
  veronese->add_option("--max-ideals", c.max_ideals, "ideal cap")->capture_default_str();
  auto* zalg = app.add_subcommand("zalg", "Z-algebra window and cohproj Hom tables");
  common(zalg, true);
  zalg->add_option("--window", window, "index window lo..hi");
  zalg->add_option("--hom-range", hom_range, "projectives P_a, P_b with a, b in lo..hi")->default_str("0..5");
  zalg->add_flag("--round-trip", c.round_trip, "Γ* round trip on the commutative model");
  auto* corpus = app.add_subcommand("corpus", "built-in acceptance suite");
  common(corpus, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (!field.empty()) c.field = field;
    if (!order.empty()) {
      std::string norm = order;
      std::replace(norm.begin(), norm.end(), ',', '>');
      for (const auto& name : split(norm, '>'))
        if (!trim(name).empty()) c.order.push_back(trim(name));
    }
    if (!window.empty()) c.window = parse_range(window);
    if (!hom_range.empty()) c.hom_range = parse_range(hom_range);
    bool mismatch = false;
    json report = build_report(c, mismatch);
    if (c.json)
      out << report.dump(2) << "\n";
    else
      out << render_text(report);
    return mismatch ? kExitMismatch : kExitOk;
  } catch (const Error& e) {
    err << "ncoh: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "ncoh: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ncoh
