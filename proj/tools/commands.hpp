// Copyright 2026 The lclt Authors.
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

// The `lclt` command line: subcommands coeffs, prob, density-grid, mc,
// compare, zeta and selftest.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical assertion failed,
// 4 model gate failed, 1 anything else.

#ifndef LCLT_TOOLS_COMMANDS_HPP_
#define LCLT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lclt/expansion.hpp"

namespace lclt::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalid = 2,
  kNumerical = 3,
  kGate = 4,
};

struct RunConfig {
  std::string subcommand;
  std::string spec = "zeta";
  double theta = 0.4;
  double logT = 1e4;
  ExpansionConfig expansion;
  std::vector<std::string> rects;

  // Inputs produced by earlier runs (optional).
  std::string table_path;
  std::string batch_path;

  // Outputs; empty means stdout where that makes sense.
  std::string out;
  std::string csv_out;

  // density-grid
  double u_lo = -3.0, u_hi = 3.0, v_lo = -3.0, v_hi = 3.0;
  int nu = 61, nv = 61;

  // mc / compare
  std::uint64_t P_MC = 100'000;
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t band_to = 0;
  bool band_tail = false;
  double perturb_b = 0.0;  // added to b((2,0..),(0..)) before comparing

  // zeta
  double T = 1e6;
  double zeta_step = 0.05;
  int zeta_digits = 10;
};

// Full resolved configuration as one line of JSON.
std::string config_json(const RunConfig& c);

// Validates, runs, and maps errors to exit codes (messages go to err).
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

// Parses argv (flags, then an optional --config file; flags win) and runs.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace lclt::cli

#endif  // LCLT_TOOLS_COMMANDS_HPP_
