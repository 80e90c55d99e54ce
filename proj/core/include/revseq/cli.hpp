// Copyright 2026 The revseq Authors
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
#include <string>
#include <vector>

namespace revseq::cli {

/// Exit statuses of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_verification = 3;
inline constexpr int exit_internal = 4;

/// Executes one subcommand (sim, opt, synth, cost, verify, report).
/// `args` excludes the program name. Circuit arguments accept either a
/// netlist path or a built-in design as `corpus:<family>-<variant>`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revseq::cli
