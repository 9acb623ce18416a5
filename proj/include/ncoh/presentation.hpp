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
#include <string_view>
#include <vector>

#include "ncoh/freealg.hpp"
#include "ncoh/polyparse.hpp"
#include "ncoh/scalar.hpp"

namespace ncoh {

/// Parametrized relation template such as x*y^{2*n+1}*x for n >= 0.
struct RelationFamily {
  std::string text;
  std::string param;
  long start = 0;
  bool reversed = false;  // set on the opposite algebra

  friend bool operator==(const RelationFamily&, const RelationFamily&) = default;
};

struct AlgebraPresentation {
  std::string label;
  FieldSpec field;
  GeneratorTable gens;
  std::vector<RawPoly> relations;
  std::vector<RelationFamily> families;
};

/// Builds a presentation from generator (name, weight) pairs in decreasing
/// precedence and relation strings. Validates the result.
AlgebraPresentation make_presentation(std::string label, const std::vector<std::pair<std::string, int>>& gens,
                                      const std::vector<std::string>& relations,
                                      const std::vector<RelationFamily>& families = {},
                                      FieldSpec field = FieldSpec::prime_field(32003));

struct ValidationIssue {
  ErrorKind kind;
  std::string message;
};

/// Empty when the presentation is usable.
std::vector<ValidationIssue> validation_issues(const AlgebraPresentation& p);
/// Throws the first issue as an Error.
void validate_presentation(const AlgebraPresentation& p);

struct FamilyMember {
  std::size_t family = 0;
  long n = 0;
  RawPoly poly;
};

/// Members of every family with degree <= max_degree, in family order then
/// increasing parameter. Throws InvalidArgument if a family's degree fails
/// to grow with the parameter.
std::vector<FamilyMember> expand_families(const AlgebraPresentation& p, int max_degree);

/// Plain relations of degree <= max_degree followed by the family members.
std::vector<RawPoly> relations_up_to(const AlgebraPresentation& p, int max_degree);

/// Reverses every relation; left modules over A are right modules over this.
AlgebraPresentation opposite(const AlgebraPresentation& p);

/// Same algebra with a new generator precedence (highest first).
AlgebraPresentation with_order(const AlgebraPresentation& p, const std::vector<std::string>& order);

/// Canonical file rendering; parse_algebra_file(render(p)) reproduces p.
std::string render_algebra_file(const AlgebraPresentation& p);

/// Hex SHA-256 of the canonical rendering.
std::string content_hash(const AlgebraPresentation& p);

/// Parses the line-oriented algebra format and validates the result.
AlgebraPresentation parse_algebra_file(std::string_view text, const std::string& default_label = "algebra");

}  // namespace ncoh
