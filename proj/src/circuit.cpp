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

#include "lqc/circuit.hpp"

#include <cmath>

#include "lqc/error.hpp"

namespace lqc {

Circuit &Circuit::add(Gate gate) {
    if (!directives_.empty()) {
        fail(ErrorCode::InvalidArgument, "gates cannot follow a measurement");
    }
    validate(gate, layout_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::add(const std::vector<Gate> &gates) {
    for (const Gate &g : gates) {
        add(g);
    }
    return *this;
}

Circuit &Circuit::measure(std::vector<std::size_t> wires, MeasurementBasis basis) {
    for (std::size_t w : wires) {
        if (w >= layout_.size()) {
            fail(ErrorCode::InvalidArgument, "measurement references wire " + std::to_string(w) +
                                                 " outside the layout");
        }
        if (basis == MeasurementBasis::XBasis && layout_.is_hybit(w)) {
            fail(ErrorCode::InvalidArgument, "x-basis measurement is only defined on qubits (wire '" +
                                                 layout_[w].label + "')");
        }
    }
    directives_.push_back({std::move(wires), basis});
    return *this;
}

void execute_in_place(const Circuit &circuit, LorentzState &state) {
    if (!(state.layout() == circuit.layout())) {
        fail(ErrorCode::InvalidArgument, "initial state layout does not match the circuit layout");
    }
    for (const Gate &g : circuit.gates()) {
        apply(state, g);
        state.rescale_if_needed();
    }
}

LorentzState execute(const Circuit &circuit, const LorentzState &initial) {
    LorentzState state = initial;
    execute_in_place(circuit, state);
    return state;
}

char outcome_symbol(MeasurementBasis basis, int value) {
    if (basis == MeasurementBasis::XBasis) {
        return value > 0 ? '+' : '-';
    }
    return value ? '1' : '0';
}

namespace {

struct Branch {
    int value;
    double weight;
    LorentzState state;
};

LorentzState project(const LorentzState &state, std::size_t wire, MeasurementBasis basis, int value) {
    LorentzState out = state;
    const std::uint64_t bit = state.layout().mask(wire);
    auto amps = out.amplitudes();
    if (basis == MeasurementBasis::Computational) {
        const bool keep_one = value == 1;
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            if (((i & bit) != 0) != keep_one) {
                amps[i] = 0.0;
            }
        }
        return out;
    }
    const double sign = value > 0 ? 1.0 : -1.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex c = (amps[i] + sign * amps[i | bit]) * 0.5;
        amps[i] = c;
        amps[i | bit] = sign * c;
    }
    return out;
}

/// Outcome branches with their observable weights (stored units).
std::vector<Branch> branches(const LorentzState &state, std::size_t wire, MeasurementBasis basis) {
    const WireLayout &layout = state.layout();
    if (wire >= layout.size()) {
        fail(ErrorCode::InvalidArgument, "measurement wire out of range");
    }
    std::vector<Branch> out;
    if (layout.is_hybit(wire)) {
        if (basis == MeasurementBasis::XBasis) {
            fail(ErrorCode::InvalidArgument, "x-basis measurement is only defined on qubits");
        }
        LorentzState p = project(state, wire, basis, 0);
        const double w = p.observable_weight();
        out.push_back({0, w, std::move(p)});
        return out;
    }
    const int values[2] = {basis == MeasurementBasis::XBasis ? 1 : 0, basis == MeasurementBasis::XBasis ? -1 : 1};
    for (int v : values) {
        LorentzState p = project(state, wire, basis, v);
        const double w = p.observable_weight();
        out.push_back({v, w, std::move(p)});
    }
    return out;
}

void exact_recurse(const LorentzState &state, const std::vector<const MeasurementDirective *> &dirs,
                   std::size_t dir_index, std::size_t wire_index, const std::string &prefix, double probability,
                   std::map<std::string, double> &out) {
    if (dir_index == dirs.size()) {
        out[prefix] += probability;
        return;
    }
    const MeasurementDirective &d = *dirs[dir_index];
    if (wire_index == d.wires.size()) {
        exact_recurse(state, dirs, dir_index + 1, 0, prefix, probability, out);
        return;
    }
    const double total = state.observable_weight();
    if (!(total > 0.0)) {
        fail(ErrorCode::Unobservable, "unobservable state: zero observable weight at measurement");
    }
    for (Branch &b : branches(state, d.wires[wire_index], d.basis)) {
        const double p = b.weight / total;
        if (p <= 0.0) {
            continue;
        }
        b.state.rescale();
        exact_recurse(b.state, dirs, dir_index, wire_index + 1, prefix + outcome_symbol(d.basis, b.value),
                      probability * p, out);
    }
}

} // namespace

RunRecord measure_partial(const LorentzState &state, const MeasurementDirective &directive, CounterRng &rng) {
    RunRecord record{{}, state, 1.0};
    for (std::size_t wire : directive.wires) {
        const double total = record.post_state.observable_weight();
        if (!(total > 0.0)) {
            fail(ErrorCode::Unobservable, "unobservable state: zero observable weight at measurement");
        }
        std::vector<Branch> options = branches(record.post_state, wire, directive.basis);
        const double u = rng.uniform();
        std::size_t chosen = options.size() - 1;
        double acc = 0.0;
        for (std::size_t k = 0; k < options.size(); ++k) {
            acc += options[k].weight / total;
            if (u < acc) {
                chosen = k;
                break;
            }
        }
        // Never land on a zero-probability branch through rounding.
        while (options[chosen].weight <= 0.0 && chosen > 0) {
            --chosen;
        }
        Branch &b = options[chosen];
        record.outcome.emplace_back(wire, b.value);
        record.probability *= b.weight / total;
        record.post_state = std::move(b.state);
        record.post_state.rescale();
    }
    return record;
}

std::map<std::string, double> exact_outcome_probabilities(const LorentzState &state,
                                                          const MeasurementDirective &directive) {
    std::map<std::string, double> out;
    exact_recurse(state, {&directive}, 0, 0, "", 1.0, out);
    return out;
}

std::map<std::string, double> exact_outcome_probabilities(const Circuit &circuit, const LorentzState &final_state) {
    std::vector<const MeasurementDirective *> dirs;
    for (const MeasurementDirective &d : circuit.directives()) {
        dirs.push_back(&d);
    }
    std::map<std::string, double> out;
    exact_recurse(final_state, dirs, 0, 0, "", 1.0, out);
    return out;
}

std::vector<std::string> sample_shots(const Circuit &circuit, const LorentzState &initial, std::uint64_t shots,
                                      std::uint64_t seed) {
    require(shots >= 1, "shots must be at least 1");
    const LorentzState final_state = execute(circuit, initial);
    std::vector<std::string> keys;
    keys.reserve(shots);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        CounterRng rng(seed, shot);
        LorentzState current = final_state;
        std::string key;
        for (const MeasurementDirective &d : circuit.directives()) {
            RunRecord r = measure_partial(current, d, rng);
            for (const auto &[wire, value] : r.outcome) {
                key.push_back(outcome_symbol(d.basis, value));
            }
            current = std::move(r.post_state);
        }
        keys.push_back(std::move(key));
    }
    return keys;
}

std::map<std::string, std::uint64_t> sample(const Circuit &circuit, const LorentzState &initial,
                                            std::uint64_t shots, std::uint64_t seed) {
    std::map<std::string, std::uint64_t> histogram;
    for (std::string &key : sample_shots(circuit, initial, shots, seed)) {
        ++histogram[key];
    }
    return histogram;
}

} // namespace lqc
