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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncoh/presentation.hpp"

namespace ncoh {

inline constexpr const char* kToolVersion = "0.1.0";

struct SessionConfig {
  std::string subcommand;
  std::string input;    // algebra file
  std::string builtin;  // corpus label, alternative to a file
  std::optional<std::string> field;
  int D = 10;
  std::vector<std::string> order;
  bool json = false;

  // probe
  std::string side = "right";
  int gen_degree_bound = 2;
  std::size_t max_ideals = 64;

  // hilbert
  bool check = false;

  // tor
  std::string module = "simple";  // simple | free | quotient | custom
  std::vector<std::string> ideal;
  std::vector<int> gen_shifts{0};
  std::vector<int> rel_shifts;
  std::string matrix;  // rows separated by ';', entries by ','
  int length = 2;

  // veronese
  int n = 2;
  bool cross_check = false;
  int veronese_probe_degree = 6;

  // zalg
  std::optional<std::pair<int, int>> window;
  std::pair<int, int> hom_range{0, 5};
  bool round_trip = false;
};

/// Exit codes of the command-line contract.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitMismatch = 2 };

/// Presentation named by the config, with --field and --order applied.
AlgebraPresentation load_presentation(const SessionConfig& config);

/// Deterministic report; keys come out sorted. `mismatch` is set when an
/// expected-vs-actual comparison fails (corpus).
nlohmann::json build_report(const SessionConfig& config, bool& mismatch);

/// Aligned plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Parses "lo..hi".
std::pair<int, int> parse_range(const std::string& text);

/// Full command line: parse, run, print. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncoh
