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

#include <chrono>
#include <iomanip>
#include <iostream>

#include "ncoh/acceptance.hpp"

// One PASS/FAIL line per criterion; exit status 1 when any fails.
int main() {
  bool all = true;
  auto start = std::chrono::steady_clock::now();
  ncoh::run_acceptance([&](const ncoh::CriterionResult& r) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << "  " << r.title << "  [" << r.detail
              << "]" << std::endl;
  });
  std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
  std::cout << (all ? "all criteria pass" : "some criteria fail") << " (" << std::fixed << std::setprecision(1)
            << secs.count() << " s)\n";
  return all ? 0 : 1;
}
