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

#include "ncoh/presentation.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>
#include <sstream>

namespace ncoh {

namespace {

constexpr long kMaxFamilyMembers = 100000;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

RawPoly family_member(const AlgebraPresentation& p, const RelationFamily& f, long n) {
  RawPoly raw = parse_poly(f.text, p.gens, ParamBinding{f.param, n});
  return f.reversed ? raw.reversed() : raw;
}

int single_degree(const RawPoly& raw, const GeneratorTable& gens) {
  auto ds = raw.degrees(gens);
  return ds.empty() ? -1 : ds.back();
}

}  // namespace

AlgebraPresentation make_presentation(std::string label, const std::vector<std::pair<std::string, int>>& gens,
                                      const std::vector<std::string>& relations,
                                      const std::vector<RelationFamily>& families, FieldSpec field) {
  AlgebraPresentation p;
  p.label = std::move(label);
  p.field = field;
  std::vector<Generator> table;
  for (const auto& [name, weight] : gens) table.push_back({name, weight});
  p.gens = GeneratorTable(std::move(table));
  for (std::size_t i = 0; i < relations.size(); ++i) {
    RawPoly raw = parse_poly(relations[i], p.gens, std::nullopt, i + 1);
    if (!raw.is_zero()) p.relations.push_back(std::move(raw));
  }
  p.families = families;
  validate_presentation(p);
  return p;
}

std::vector<ValidationIssue> validation_issues(const AlgebraPresentation& p) {
  std::vector<ValidationIssue> issues;
  for (const auto& g : p.gens.generators())
    if (g.weight < 1)
      issues.push_back({ErrorKind::ZeroDegreeGenerator,
                        "generator '" + g.name + "' has weight " + std::to_string(g.weight) + "; weights must be >= 1"});
  if (!issues.empty()) return issues;  // degrees below are meaningless otherwise
  for (const auto& r : p.relations) {
    auto ds = r.degrees(p.gens);
    if (ds.size() > 1)
      issues.push_back({ErrorKind::NonHomogeneousRelation, "relation '" + r.to_string(p.gens) + "' mixes degrees"});
    else if (!ds.empty() && ds.front() == 0)
      issues.push_back({ErrorKind::NonHomogeneousRelation, "relation '" + r.to_string(p.gens) + "' is a nonzero constant"});
  }
  for (const auto& f : p.families) {
    if (!is_identifier(f.param)) {
      issues.push_back({ErrorKind::InvalidArgument, "family parameter '" + f.param + "' is not an identifier"});
      continue;
    }
    // the first two members decide homogeneity and growth
    for (long n = f.start; n < f.start + 2; ++n) {
      RawPoly raw = family_member(p, f, n);
      if (raw.degrees(p.gens).size() > 1)
        issues.push_back({ErrorKind::NonHomogeneousRelation,
                          "family member '" + raw.to_string(p.gens) + "' (" + f.param + "=" + std::to_string(n) +
                              ") mixes degrees"});
    }
  }
  return issues;
}

void validate_presentation(const AlgebraPresentation& p) {
  auto issues = validation_issues(p);
  if (!issues.empty()) throw Error(issues.front().kind, issues.front().message);
}

std::vector<FamilyMember> expand_families(const AlgebraPresentation& p, int max_degree) {
  std::vector<FamilyMember> out;
  for (std::size_t i = 0; i < p.families.size(); ++i) {
    const auto& f = p.families[i];
    int previous = -1;
    for (long n = f.start; n < f.start + kMaxFamilyMembers; ++n) {
      RawPoly raw = family_member(p, f, n);
      if (raw.degrees(p.gens).size() > 1)
        throw Error(ErrorKind::NonHomogeneousRelation, "family member '" + raw.to_string(p.gens) + "' mixes degrees");
      int d = single_degree(raw, p.gens);
      if (d <= previous)
        throw Error(ErrorKind::InvalidArgument, "relation family '" + f.text + "' does not grow with " + f.param);
      previous = d;
      if (d > max_degree) break;
      out.push_back({i, n, std::move(raw)});
    }
  }
  return out;
}

std::vector<RawPoly> relations_up_to(const AlgebraPresentation& p, int max_degree) {
  std::vector<RawPoly> out;
  for (const auto& r : p.relations)
    if (single_degree(r, p.gens) <= max_degree) out.push_back(r);
  for (auto& m : expand_families(p, max_degree)) out.push_back(std::move(m.poly));
  return out;
}

AlgebraPresentation opposite(const AlgebraPresentation& p) {
  AlgebraPresentation q = p;
  const std::string suffix = "^op";
  if (q.label.size() >= suffix.size() && q.label.compare(q.label.size() - suffix.size(), suffix.size(), suffix) == 0)
    q.label.resize(q.label.size() - suffix.size());
  else
    q.label += suffix;
  for (auto& r : q.relations) r = r.reversed();
  for (auto& f : q.families) f.reversed = !f.reversed;
  return q;
}

AlgebraPresentation with_order(const AlgebraPresentation& p, const std::vector<std::string>& order) {
  AlgebraPresentation q = p;
  std::vector<Letter> perm;
  q.gens = p.gens.reordered(order, perm);
  for (auto& r : q.relations) r = r.relabeled(perm);
  return q;  // families are parsed by name and need no relabeling
}

std::string render_algebra_file(const AlgebraPresentation& p) {
  std::ostringstream os;
  os << "label " << p.label << "\n";
  os << "field " << p.field.to_string() << "\n";
  for (const auto& g : p.gens.generators()) os << "gen " << g.name << " " << g.weight << "\n";
  os << "order deglex";
  for (std::size_t i = 0; i < p.gens.size(); ++i) os << (i == 0 ? " " : " > ") << p.gens.name(static_cast<Letter>(i));
  os << "\n";
  for (const auto& r : p.relations) os << "rel " << r.to_string(p.gens) << "\n";
  for (const auto& f : p.families)
    os << (f.reversed ? "relfam-op " : "relfam ") << f.text << "  " << f.param << " >= " << f.start << "\n";
  return os.str();
}

std::string content_hash(const AlgebraPresentation& p) {
  std::string text = render_algebra_file(p);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InvalidArgument, "SHA-256 unavailable");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

AlgebraPresentation parse_algebra_file(std::string_view text, const std::string& default_label) {
  struct PendingRel {
    std::string body;
    std::size_t line;
    std::size_t column;
  };
  AlgebraPresentation p;
  p.label = default_label;
  std::vector<Generator> gens;
  std::optional<std::vector<std::string>> order;
  std::size_t order_line = 0;
  std::vector<PendingRel> rels;
  std::vector<std::pair<RelationFamily, std::size_t>> fams;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw_line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line(raw_line);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t indent = 0;
    while (indent < line.size() && std::isspace(static_cast<unsigned char>(line[indent]))) ++indent;
    if (indent == line.size()) continue;
    std::size_t kw_end = indent;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    std::string keyword = line.substr(indent, kw_end - indent);
    std::size_t body_start = kw_end;
    while (body_start < line.size() && std::isspace(static_cast<unsigned char>(line[body_start]))) ++body_start;
    std::string body = trim(std::string_view(line).substr(body_start));
    auto fail = [&](std::size_t col, const std::string& what) -> void { throw ParseError(line_no, col, what); };

    if (keyword == "label") {
      if (body.empty()) fail(body_start + 1, "missing label");
      p.label = body;
    } else if (keyword == "field") {
      try {
        p.field = FieldSpec::parse(body);
      } catch (const Error& e) {
        fail(body_start + 1, e.what());
      }
    } else if (keyword == "gen") {
      std::istringstream is(body);
      std::string name;
      std::string weight_text;
      is >> name >> weight_text;
      if (!is_identifier(name)) fail(body_start + 1, "expected generator name");
      int weight = 1;
      if (!weight_text.empty()) {
        try {
          std::size_t used = 0;
          weight = std::stoi(weight_text, &used);
          if (used != weight_text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          fail(body_start + name.size() + 2, "weight must be an integer");
        }
      }
      std::string extra;
      if (is >> extra) fail(body_start + 1, "unexpected text after weight");
      for (const auto& g : gens)
        if (g.name == name) fail(body_start + 1, "duplicate generator '" + name + "'");
      gens.push_back({name, weight});
    } else if (keyword == "order") {
      std::istringstream is(body);
      std::string kind;
      is >> kind;
      if (kind != "deglex") fail(body_start + 1, "only 'deglex' orders are supported");
      std::string rest;
      std::getline(is, rest);
      std::vector<std::string> names;
      std::size_t start = 0;
      while (true) {
        std::size_t gt = rest.find('>', start);
        std::string name = trim(std::string_view(rest).substr(start, gt == std::string::npos ? std::string::npos : gt - start));
        if (!is_identifier(name)) fail(body_start + 1, "malformed order; expected 'deglex a > b > ...'");
        names.push_back(name);
        if (gt == std::string::npos) break;
        start = gt + 1;
      }
      order = names;
      order_line = line_no;
    } else if (keyword == "rel") {
      if (body.empty()) fail(body_start + 1, "empty relation");
      rels.push_back({body, line_no, body_start});
    } else if (keyword == "relfam" || keyword == "relfam-op") {
      std::size_t ge = body.rfind(">=");
      if (ge == std::string::npos) fail(body_start + 1, "relfam needs '<poly> <param> >= <start>'");
      std::string start_text = trim(std::string_view(body).substr(ge + 2));
      std::string head = trim(std::string_view(body).substr(0, ge));
      std::size_t sp = head.find_last_of(" \t");
      if (sp == std::string::npos) fail(body_start + 1, "relfam needs '<poly> <param> >= <start>'");
      RelationFamily f;
      f.param = trim(std::string_view(head).substr(sp + 1));
      f.text = trim(std::string_view(head).substr(0, sp));
      f.reversed = keyword == "relfam-op";
      if (!is_identifier(f.param)) fail(body_start + sp + 2, "expected parameter name");
      try {
        std::size_t used = 0;
        f.start = std::stol(start_text, &used);
        if (used != start_text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(body_start + ge + 3, "expected integer start value");
      }
      fams.emplace_back(std::move(f), line_no);
    } else {
      fail(indent + 1, "unknown directive '" + keyword + "'");
    }
  }

  p.gens = GeneratorTable(std::move(gens));
  if (order) {
    std::vector<Letter> perm;
    try {
      p.gens = p.gens.reordered(*order, perm);
    } catch (const Error& e) {
      throw ParseError(order_line, 1, e.what());
    }
  }
  for (const auto& r : rels) {
    RawPoly raw = parse_poly(r.body, p.gens, std::nullopt, r.line, r.column);
    if (!raw.is_zero()) p.relations.push_back(std::move(raw));
  }
  for (auto& [f, line] : fams) {
    // parse once with a binding to report syntax errors at the right line
    parse_poly(f.text, p.gens, ParamBinding{f.param, f.start}, line);
    p.families.push_back(std::move(f));
  }
  validate_presentation(p);
  return p;
}

}  // namespace ncoh
