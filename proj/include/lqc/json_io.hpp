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

#include "json.hpp"
#include "lqc/circuit.hpp"

namespace lqc {

using Json = nlohmann::json;

struct CircuitDocument {
    Circuit circuit;
    LorentzState initial;
};

/// Parses text as JSON, reporting syntax errors with line and column.
[[nodiscard]] Json parse_json_text(std::string_view text, std::string_view what);

/// {"wires": [...], "gates": [...], "measurements": [...], "initial": "0101"}.
/// Schema violations name the offending field, e.g. "gates[2].wires".
[[nodiscard]] CircuitDocument parse_circuit(const Json &doc);
[[nodiscard]] CircuitDocument parse_circuit_text(std::string_view text);

[[nodiscard]] Json layout_to_json(const WireLayout &layout);
/// Nonzero amplitudes keyed by the full bitstring, as [re, im] pairs.
[[nodiscard]] Json state_to_json(const LorentzState &state);
[[nodiscard]] Json distribution_to_json(const ObservableDistribution &dist);

[[nodiscard]] std::string_view wire_kind_name(WireKind kind);
[[nodiscard]] std::string_view wire_role_name(WireRole role);

} // namespace lqc
