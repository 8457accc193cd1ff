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
#include <map>
#include <string>
#include <vector>

#include "lqc/gates.hpp"
#include "lqc/rng.hpp"
#include "lqc/state.hpp"

namespace lqc {

enum class MeasurementBasis { Computational, XBasis };

struct MeasurementDirective {
    std::vector<std::size_t> wires;
    MeasurementBasis basis = MeasurementBasis::Computational;
};

/// Gates followed by trailing measurement directives; no gate may follow a
/// measurement.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(WireLayout layout) : layout_(std::move(layout)) {}

    [[nodiscard]] const WireLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] const std::vector<MeasurementDirective> &directives() const noexcept { return directives_; }

    Circuit &add(Gate gate);
    Circuit &add(const std::vector<Gate> &gates);
    Circuit &measure(std::vector<std::size_t> wires, MeasurementBasis basis = MeasurementBasis::Computational);

  private:
    WireLayout layout_;
    std::vector<Gate> gates_;
    std::vector<MeasurementDirective> directives_;
};

/// Outcome values: 0/1 for computational measurements, +1/-1 for XBasis.
struct RunRecord {
    std::vector<std::pair<std::size_t, int>> outcome;
    LorentzState post_state;
    double probability = 1.0;
};

/// Applies the gates in order with automatic rescaling; directives are left for measure_partial.
[[nodiscard]] LorentzState execute(const Circuit &circuit, const LorentzState &initial);
void execute_in_place(const Circuit &circuit, LorentzState &state);

/// Samples one outcome per wire of the directive, in order, collapsing the
/// state after each. Components with any hybit in |1) never contribute to
/// the outcome distribution; a hybit always reads 0.
[[nodiscard]] RunRecord measure_partial(const LorentzState &state, const MeasurementDirective &directive,
                                        CounterRng &rng);

/// Exact joint outcome probabilities of a directive. Keys concatenate one
/// symbol per wire: '0'/'1' for computational, '+'/'-' for XBasis.
[[nodiscard]] std::map<std::string, double> exact_outcome_probabilities(const LorentzState &state,
                                                                        const MeasurementDirective &directive);

/// Exact probabilities of the full, ordered directive list of a circuit.
[[nodiscard]] std::map<std::string, double> exact_outcome_probabilities(const Circuit &circuit,
                                                                        const LorentzState &final_state);

/// Outcome key of each shot, in shot order.
[[nodiscard]] std::vector<std::string> sample_shots(const Circuit &circuit, const LorentzState &initial,
                                                    std::uint64_t shots, std::uint64_t seed);

/// Histogram of sample_shots. Identical (circuit, initial, shots, seed) gives an identical histogram.
[[nodiscard]] std::map<std::string, std::uint64_t> sample(const Circuit &circuit, const LorentzState &initial,
                                                          std::uint64_t shots, std::uint64_t seed);

[[nodiscard]] char outcome_symbol(MeasurementBasis basis, int value);

} // namespace lqc
