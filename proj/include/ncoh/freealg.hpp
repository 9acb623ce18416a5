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

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncoh/errors.hpp"

namespace ncoh {

/// Generator index. Indices follow precedence: letter 0 is the largest.
using Letter = std::uint8_t;

struct Generator {
  std::string name;
  int weight = 1;
};

/// Names and weights of the generators, stored in decreasing precedence.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<Generator> generators);

  std::size_t size() const { return gens_.size(); }
  const std::string& name(Letter g) const { return gens_[g].name; }
  int weight(Letter g) const { return gens_[g].weight; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<Letter> find(std::string_view name) const;
  bool degree_one_generated() const;
  int degree_of(std::string_view letters) const;

  /// Table with the given names in decreasing precedence. `permutation[old]`
  /// is the new index of each letter. Throws if `order` is not a permutation
  /// of the existing names.
  GeneratorTable reordered(const std::vector<std::string>& order, std::vector<Letter>& permutation) const;

  friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) {
    if (a.gens_.size() != b.gens_.size()) return false;
    for (std::size_t i = 0; i < a.gens_.size(); ++i)
      if (a.gens_[i].name != b.gens_[i].name || a.gens_[i].weight != b.gens_[i].weight) return false;
    return true;
  }

 private:
  std::vector<Generator> gens_;
};

/// Word in the free monoid; letters are packed into a string so factor
/// searches can hash string_views directly.
class Word {
 public:
  Word() = default;
  Word(std::string letters, int degree) : letters_(std::move(letters)), degree_(degree) {}
  static Word from_letters(const GeneratorTable& table, const std::vector<Letter>& letters);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int degree() const { return degree_; }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

  Word concat(const Word& other) const { return Word(letters_ + other.letters_, degree_ + other.degree_); }
  Word reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend()), degree_); }
  Word subword(const GeneratorTable& table, std::size_t pos, std::size_t len) const;
  std::string to_string(const GeneratorTable& table) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  std::string letters_;
  int degree_ = 0;
};

/// Weighted degree-lexicographic order: degree first, then the first
/// differing letter, where the letter of higher precedence wins.
std::strong_ordering deglex_compare(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_compare(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.letters()); }
};

/// All words of weighted degree exactly d, in increasing monomial order.
std::vector<Word> enumerate_words(const GeneratorTable& table, int d);

/// Homogeneous noncommutative polynomial. The zero polynomial has no degree.
template <class K>
class NcPoly {
 public:
  using Terms = std::map<Word, K, WordLess>;

  NcPoly() = default;
  static NcPoly monomial(Word w, K c = K::one()) {
    NcPoly p;
    if (!c.is_zero()) {
      p.degree_ = w.degree();
      p.terms_.emplace(std::move(w), std::move(c));
    }
    return p;
  }
  static NcPoly constant(K c) { return monomial(Word(), std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  int degree() const { return degree_; }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const K& leading_coeff() const { return terms_.rbegin()->second; }
  K coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? K::zero() : it->second;
  }

  /// Adds c·w; throws InhomogeneousSum when the degree does not match.
  void add_term(const Word& w, const K& c) {
    if (c.is_zero()) return;
    if (!is_zero() && w.degree() != degree_)
      throw Error(ErrorKind::InhomogeneousSum,
                  "degree " + std::to_string(w.degree()) + " term added to degree " + std::to_string(degree_));
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty())
      degree_ = -1;
    else
      degree_ = w.degree();
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) out.add_term(u.concat(v), cu * cv);
    return out;
  }
  NcPoly scaled(const K& c) const {
    NcPoly out;
    if (c.is_zero()) return out;
    for (const auto& [w, x] : terms_) out.terms_.emplace(w, x * c);
    out.degree_ = degree_;
    return out;
  }
  NcPoly monic() const { return is_zero() ? *this : scaled(leading_coeff().inverse()); }
  /// Multiplies by words on both sides: u·p·v.
  NcPoly sandwich(const Word& u, const Word& v) const {
    NcPoly out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(u.concat(w).concat(v), c);
    out.degree_ = is_zero() ? -1 : degree_ + u.degree() + v.degree();
    return out;
  }
  NcPoly reversed() const {
    NcPoly out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.reversed(), c);
    out.degree_ = degree_;
    return out;
  }

  /// Human-readable form such as "x*z - z*x"; terms in decreasing order.
  std::string to_string(const GeneratorTable& table) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string c = it->second.to_string();
      bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(c.begin());
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string w = it->first.to_string(table);
      if (it->first.empty())
        out += c;
      else if (c == "1")
        out += w;
      else
        out += c + "*" + w;
    }
    return out;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
  int degree_ = -1;
};

}  // namespace ncoh
