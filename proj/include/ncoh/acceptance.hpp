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

#include <functional>
#include <string>
#include <vector>

namespace ncoh {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

inline constexpr int kCriteria = 10;

/// Runs one acceptance criterion (1..kCriteria). Exceptions become failures.
CriterionResult run_criterion(int id);

/// Runs every criterion in order; `progress` sees each result as it lands.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace ncoh
