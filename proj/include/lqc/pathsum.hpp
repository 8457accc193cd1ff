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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqc/circuit.hpp"

namespace lqc {

inline constexpr std::size_t kPathSumMaxGates = 8;
inline constexpr std::size_t kPathSumMaxWires = 5;

/// Nonzero entries (output index, matrix element) of one gate column.
using SparseColumn = std::vector<std::pair<std::uint64_t, Complex>>;

[[nodiscard]] SparseColumn gate_column(const Gate &gate, const WireLayout &layout, std::uint64_t input);

/// Final basis index -> amplitude of each computational-basis path from x,
/// in depth-first order. Throws SizeLimit outside the gate and wire caps.
[[nodiscard]] std::map<std::uint64_t, std::vector<Complex>> enumerate_paths(const Circuit &circuit, std::uint64_t x);

/// Sum over path pairs (p, q) ending at y of Re(a_p conj(a_q)), pairwise summed.
[[nodiscard]] double squared_amplitude(const std::vector<Complex> &path_amplitudes);

/// |A(y)|^2 for a qubit bitstring y with every hybit in |0).
[[nodiscard]] double path_amplitude(const Circuit &circuit, std::uint64_t x, std::string_view y);

/// The Y wire: the first oracle-role qubit, otherwise the last qubit.
[[nodiscard]] std::size_t default_yes_wire(const WireLayout &layout);

struct AcceptAmplitude {
    std::size_t yes_wire = 0;
    double yes = 0.0;
    double total = 0.0;
    double ratio = 0.0;
};

[[nodiscard]] AcceptAmplitude accept_amplitude(const Circuit &circuit, std::uint64_t x,
                                               std::optional<std::size_t> yes_wire = std::nullopt);

/// Observable weight of every output whose search wires start with a prefix.
using IntervalWeight = std::function<double(std::string_view prefix)>;

[[nodiscard]] IntervalWeight path_sum_weight(const Circuit &circuit, std::uint64_t x,
                                             std::vector<std::size_t> search_wires);
[[nodiscard]] IntervalWeight state_weight(const LorentzState &state, std::vector<std::size_t> search_wires);

struct BranchStep {
    std::string prefix;
    double w_zero = 0.0;
    double w_one = 0.0;
};

struct BranchingResult {
    std::string output;
    double total = 0.0;
    double threshold = 0.0;
    std::vector<BranchStep> steps;
};

/// Interval halving over the search bits. A half is kept when it holds at
/// least (1 - threshold) of the total weight; default threshold 2^-(bits+2).
[[nodiscard]] BranchingResult branching_search(const IntervalWeight &weight, std::size_t bits,
                                               std::optional<double> threshold = std::nullopt);

/// Seeded circuit within the path-sum caps on fresh wires q*/h*.
[[nodiscard]] Circuit random_circuit(std::uint64_t seed, std::size_t wires, std::size_t gates);

} // namespace lqc
