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

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ncoh/freealg.hpp"
#include "ncoh/scalar.hpp"

namespace ncoh {

/// Field-independent polynomial as written in an input file. Unlike NcPoly it
/// may be inhomogeneous; validation decides whether that is acceptable.
struct RawPoly {
  std::map<std::string, mpq_class> terms;  // letters -> nonzero coefficient

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::string& letters, const mpq_class& c);
  RawPoly& operator+=(const RawPoly& o);
  RawPoly operator*(const RawPoly& o) const;
  RawPoly scaled(const mpq_class& c) const;
  RawPoly reversed() const;
  RawPoly relabeled(const std::vector<Letter>& permutation) const;
  /// Distinct weighted degrees of the terms, ascending.
  std::vector<int> degrees(const GeneratorTable& table) const;
  std::string to_string(const GeneratorTable& table) const;

  friend bool operator==(const RawPoly&, const RawPoly&) = default;
};

/// Binds a relation-family parameter (e.g. n) to a value while parsing.
struct ParamBinding {
  std::string name;
  long value = 0;
};

/// Parses the surface syntax: terms joined by + and -, products with *,
/// powers with ^ (integer, parameter, or {linear expression in the
/// parameter}), rational coefficients, parentheses. Errors carry the line
/// and the column of `text` shifted by `column_offset`.
RawPoly parse_poly(std::string_view text, const GeneratorTable& table, const std::optional<ParamBinding>& binding = {},
                   std::size_t line = 1, std::size_t column_offset = 0);

/// Converts to a homogeneous polynomial over K; throws NonHomogeneousRelation.
template <class K>
NcPoly<K> to_ncpoly(const RawPoly& raw, const GeneratorTable& table) {
  NcPoly<K> p;
  auto degrees = raw.degrees(table);
  if (degrees.size() > 1)
    throw Error(ErrorKind::NonHomogeneousRelation, "'" + raw.to_string(table) + "' mixes degrees");
  for (const auto& [letters, c] : raw.terms) {
    K k = K::from_rational(c);
    p.add_term(Word(letters, table.degree_of(letters)), k);
  }
  return p;
}

/// Exact rational representative of a scalar (symmetric residue for Fp).
mpq_class to_mpq(const Rational& r);
mpq_class to_mpq(const ModP& r);

template <class K>
RawPoly to_raw(const NcPoly<K>& p) {
  RawPoly raw;
  for (const auto& [w, c] : p.terms()) raw.add_term(w.letters(), to_mpq(c));
  return raw;
}

}  // namespace ncoh
