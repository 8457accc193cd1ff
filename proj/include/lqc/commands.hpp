// Copyright 2026 The lqcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "lqc/json_io.hpp"

namespace lqc {

/// Command names accepted by run_command.
[[nodiscard]] const std::vector<std::string> &command_names();

/// Runs one subcommand on the input text (circuit JSON, DIMACS graph or
/// DIMACS CNF; empty for the demo commands) and returns its report. Every
/// report embeds the resolved configuration.
[[nodiscard]] Json run_command(std::string_view name, std::string_view input, const Json &options);

/// "json" (indented, trailing newline) or "csv" (histogram or distribution table).
[[nodiscard]] std::string render_report(const Json &report, std::string_view format);

} // namespace lqc
