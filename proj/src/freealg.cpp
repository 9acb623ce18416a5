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

#include "ncoh/freealg.hpp"

#include <algorithm>
#include <set>

namespace ncoh {

GeneratorTable::GeneratorTable(std::vector<Generator> generators) : gens_(std::move(generators)) {
  if (gens_.size() > 200) throw Error(ErrorKind::InvalidArgument, "too many generators");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator name");
    if (!seen.insert(g.name).second) throw Error(ErrorKind::InvalidArgument, "duplicate generator '" + g.name + "'");
  }
}

std::optional<Letter> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

bool GeneratorTable::degree_one_generated() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.weight == 1; });
}

int GeneratorTable::degree_of(std::string_view letters) const {
  int d = 0;
  for (char c : letters) d += gens_[static_cast<Letter>(c)].weight;
  return d;
}

GeneratorTable GeneratorTable::reordered(const std::vector<std::string>& order, std::vector<Letter>& permutation) const {
  if (order.size() != gens_.size())
    throw Error(ErrorKind::InvalidArgument, "order must list every generator exactly once");
  std::vector<Generator> next;
  permutation.assign(gens_.size(), 0);
  std::vector<bool> used(gens_.size(), false);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto idx = find(order[pos]);
    if (!idx || used[*idx]) throw Error(ErrorKind::InvalidArgument, "order names unknown or repeated generator '" + order[pos] + "'");
    used[*idx] = true;
    permutation[*idx] = static_cast<Letter>(pos);
    next.push_back(gens_[*idx]);
  }
  return GeneratorTable(std::move(next));
}

Word Word::from_letters(const GeneratorTable& table, const std::vector<Letter>& letters) {
  std::string s(letters.begin(), letters.end());
  int d = table.degree_of(s);
  return Word(std::move(s), d);
}

Word Word::subword(const GeneratorTable& table, std::size_t pos, std::size_t len) const {
  std::string s = letters_.substr(pos, len);
  int d = table.degree_of(s);
  return Word(std::move(s), d);
}

std::string Word::to_string(const GeneratorTable& table) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += '*';
    out += table.name(static_cast<Letter>(letters_[i]));
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::strong_ordering deglex_compare(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::string& x = a.letters();
  const std::string& y = b.letters();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto cx = static_cast<Letter>(x[i]);
    auto cy = static_cast<Letter>(y[i]);
    // smaller index = higher precedence = larger word
    if (cx != cy) return cy <=> cx;
  }
  return x.size() <=> y.size();
}

std::vector<Word> enumerate_words(const GeneratorTable& table, int d) {
  if (d < 0) return {};
  // words[e] for e = 0..d, built by appending one letter
  std::vector<std::vector<Word>> words(static_cast<std::size_t>(d) + 1);
  words[0].push_back(Word());
  for (int e = 1; e <= d; ++e) {
    for (std::size_t g = 0; g < table.size(); ++g) {
      int w = table.weight(static_cast<Letter>(g));
      if (w > e) continue;
      for (const Word& prefix : words[static_cast<std::size_t>(e - w)])
        words[static_cast<std::size_t>(e)].emplace_back(prefix.letters() + static_cast<char>(g), e);
    }
  }
  std::vector<Word> out = std::move(words[static_cast<std::size_t>(d)]);
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

}  // namespace ncoh
