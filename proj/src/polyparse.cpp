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

#include "ncoh/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ncoh/scalar.hpp"

namespace ncoh {

void RawPoly::add_term(const std::string& letters, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(letters, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

RawPoly& RawPoly::operator+=(const RawPoly& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

RawPoly RawPoly::operator*(const RawPoly& o) const {
  RawPoly out;
  for (const auto& [u, cu] : terms)
    for (const auto& [v, cv] : o.terms) out.add_term(u + v, cu * cv);
  return out;
}

RawPoly RawPoly::scaled(const mpq_class& c) const {
  RawPoly out;
  for (const auto& [w, x] : terms) out.add_term(w, x * c);
  return out;
}

RawPoly RawPoly::reversed() const {
  RawPoly out;
  for (const auto& [w, c] : terms) out.add_term(std::string(w.rbegin(), w.rend()), c);
  return out;
}

RawPoly RawPoly::relabeled(const std::vector<Letter>& permutation) const {
  RawPoly out;
  for (const auto& [w, c] : terms) {
    std::string s = w;
    for (char& ch : s) ch = static_cast<char>(permutation[static_cast<Letter>(ch)]);
    out.add_term(s, c);
  }
  return out;
}

std::vector<int> RawPoly::degrees(const GeneratorTable& table) const {
  std::set<int> ds;
  for (const auto& [w, c] : terms) ds.insert(table.degree_of(w));
  return {ds.begin(), ds.end()};
}

std::string RawPoly::to_string(const GeneratorTable& table) const {
  // reuse NcPoly printing: group by degree so inhomogeneous input still prints
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  std::vector<std::pair<Word, mpq_class>> sorted;
  for (const auto& [w, c] : terms) sorted.emplace_back(Word(w, table.degree_of(w)), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return WordLess{}(b.first, a.first); });
  for (const auto& [w, c] : sorted) {
    bool negative = c < 0;
    mpq_class a = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (w.empty())
      out += a.get_str();
    else if (a == 1)
      out += w.to_string(table);
    else
      out += a.get_str() + "*" + w.to_string(table);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const GeneratorTable& table, const std::optional<ParamBinding>& binding,
             std::size_t line, std::size_t column_offset)
      : text_(text), table_(table), binding_(binding), line_(line), offset_(column_offset) {}

  RawPoly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    RawPoly p = parse_sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, offset_ + pos_ + 1, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawPoly parse_sum() {
    RawPoly total;
    bool negative = false;
    skip_space();
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    RawPoly t = parse_product();
    total += negative ? t.scaled(-1) : t;
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
      t = parse_product();
      total += negative ? t.scaled(-1) : t;
    }
    return total;
  }

  RawPoly parse_product() {
    RawPoly p = parse_power();
    while (accept('*')) p = p * parse_power();
    return p;
  }

  RawPoly parse_power() {
    RawPoly base = parse_atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    long e = parse_exponent();
    if (e < 0) fail("negative exponent");
    RawPoly out;
    out.add_term("", 1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  long parse_exponent() {
    skip_space();
    if (at_end()) fail("missing exponent after '^'");
    if (peek() == '{') {
      ++pos_;
      long v = parse_linear();
      if (!accept('}')) fail("expected '}' to close exponent");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return parse_integer();
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') return parameter_value(parse_identifier());
    fail("missing exponent after '^'");
  }

  long parse_linear() {
    long total = 0;
    long sign = 1;
    skip_space();
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    total += sign * parse_linear_term();
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      total += sign * parse_linear_term();
    }
    return total;
  }

  long parse_linear_term() {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long c = parse_integer();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        return c * parameter_value(parse_identifier());
      }
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') return c * parameter_value(parse_identifier());
      return c;
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') return parameter_value(parse_identifier());
    fail("expected integer or parameter in exponent");
  }

  long parameter_value(const std::string& name) {
    if (!binding_ || binding_->name != name) fail("unknown exponent parameter '" + name + "'");
    return binding_->value;
  }

  long parse_integer() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string parse_identifier() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  RawPoly parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    RawPoly out;
    if (c == '(') {
      ++pos_;
      out = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      mpq_class q(mpz_class(num), 1);
      if (peek() == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
        q = mpq_class(mpz_class(num), den);
        q.canonicalize();
      }
      out.add_term("", q);
      return out;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = parse_identifier();
      auto g = table_.find(name);
      if (!g) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      out.add_term(std::string(1, static_cast<char>(*g)), 1);
      return out;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const GeneratorTable& table_;
  const std::optional<ParamBinding>& binding_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RawPoly parse_poly(std::string_view text, const GeneratorTable& table, const std::optional<ParamBinding>& binding,
                   std::size_t line, std::size_t column_offset) {
  return PolyParser(text, table, binding, line, column_offset).parse();
}

mpq_class to_mpq(const Rational& r) { return r.value(); }

mpq_class to_mpq(const ModP& r) {
  long v = r.value();
  if (v > static_cast<long>(ModP::modulus() / 2)) v -= ModP::modulus();
  return mpq_class(v);
}

}  // namespace ncoh
