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

#include "lqc/pathsum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>

#include "lqc/error.hpp"
#include "lqc/rng.hpp"

namespace lqc {

namespace {

double pairwise_sum(std::span<const double> v) {
    if (v.empty()) {
        return 0.0;
    }
    if (v.size() == 1) {
        return v[0];
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void check_caps(const Circuit &c) {
    if (c.layout().size() > kPathSumMaxWires || c.gates().size() > kPathSumMaxGates) {
        fail(ErrorCode::SizeLimit, "path sum is limited to " + std::to_string(kPathSumMaxGates) + " gates on " +
                                       std::to_string(kPathSumMaxWires) + " wires (got " +
                                       std::to_string(c.gates().size()) + " gates on " +
                                       std::to_string(c.layout().size()) + " wires)");
    }
}

void walk(const Circuit &c, std::size_t depth, std::uint64_t index, Complex amp,
          std::map<std::uint64_t, std::vector<Complex>> &out) {
    if (depth == c.gates().size()) {
        out[index].push_back(amp);
        return;
    }
    for (const auto &[next, m] : gate_column(c.gates()[depth], c.layout(), index)) {
        walk(c, depth + 1, next, amp * m, out);
    }
}

/// Leaf weights keyed by the full search-bit string, summed up the binary
/// prefix tree so that every interval is the sum of its two halves.
IntervalWeight tree_weight(std::shared_ptr<std::map<std::string, double>> leaves, std::size_t bits) {
    auto self = std::make_shared<std::function<double(std::string_view)>>();
    std::weak_ptr<std::function<double(std::string_view)>> weak = self;
    *self = [leaves, bits, weak](std::string_view prefix) -> double {
        for (char ch : prefix) {
            require(ch == '0' || ch == '1', "prefix must be a bitstring");
        }
        require(prefix.size() <= bits, "prefix is longer than the search register");
        if (prefix.size() == bits) {
            const auto it = leaves->find(std::string(prefix));
            return it == leaves->end() ? 0.0 : it->second;
        }
        auto rec = weak.lock();
        return (*rec)(std::string(prefix) + "0") + (*rec)(std::string(prefix) + "1");
    };
    return [self](std::string_view prefix) { return (*self)(prefix); };
}

void check_search_wires(const WireLayout &layout, const std::vector<std::size_t> &wires) {
    for (std::size_t w : wires) {
        require(w < layout.size() && layout.is_qubit(w), "search wires must be qubits of the layout");
    }
}

std::string search_key(const WireLayout &layout, std::uint64_t index, const std::vector<std::size_t> &wires) {
    std::string key(wires.size(), '0');
    for (std::size_t k = 0; k < wires.size(); ++k) {
        if (index & layout.mask(wires[k])) {
            key[k] = '1';
        }
    }
    return key;
}

} // namespace

SparseColumn gate_column(const Gate &gate, const WireLayout &layout, std::uint64_t input) {
    if (gate.kind == GateKind::OracleFlip) {
        std::uint64_t x = 0;
        for (std::size_t k = 0; k + 1 < gate.wires.size(); ++k) {
            x = (x << 1) | static_cast<std::uint64_t>((input & layout.mask(gate.wires[k])) != 0);
        }
        const std::uint64_t flip = (*gate.predicate)(x) ? layout.mask(gate.wires.back()) : 0;
        return {{input ^ flip, Complex(1.0)}};
    }
    for (std::size_t k = 0; k + 1 < gate.wires.size(); ++k) {
        if (!(input & layout.mask(gate.wires[k]))) {
            return {{input, Complex(1.0)}};
        }
    }
    const SmallMatrix m = target_matrix(gate.kind, gate.chi);
    const std::uint64_t tbit = layout.mask(gate.wires.back());
    const std::size_t col = (input & tbit) ? 1 : 0;
    SparseColumn out;
    for (std::size_t row = 0; row < 2; ++row) {
        if (m(row, col) != Complex(0.0)) {
            out.emplace_back(row ? (input | tbit) : (input & ~tbit), m(row, col));
        }
    }
    return out;
}

std::map<std::uint64_t, std::vector<Complex>> enumerate_paths(const Circuit &circuit, std::uint64_t x) {
    check_caps(circuit);
    require(x < circuit.layout().dimension(), "input basis index outside the layout");
    std::map<std::uint64_t, std::vector<Complex>> out;
    walk(circuit, 0, x, Complex(1.0), out);
    return out;
}

double squared_amplitude(const std::vector<Complex> &a) {
    std::vector<double> terms;
    terms.reserve(a.size() * a.size());
    for (const Complex &p : a) {
        for (const Complex &q : a) {
            terms.push_back((p * std::conj(q)).real());
        }
    }
    return pairwise_sum(terms);
}

double path_amplitude(const Circuit &circuit, std::uint64_t x, std::string_view y) {
    const std::uint64_t target = circuit.layout().index_of_qubit_bits(y);
    const auto paths = enumerate_paths(circuit, x);
    const auto it = paths.find(target);
    return it == paths.end() ? 0.0 : squared_amplitude(it->second);
}

std::size_t default_yes_wire(const WireLayout &layout) {
    for (std::size_t w : layout.qubit_wires()) {
        if (layout[w].role == WireRole::Oracle) {
            return w;
        }
    }
    require(layout.qubit_count() > 0, "layout has no qubit to serve as the yes wire");
    return layout.qubit_wires().back();
}

AcceptAmplitude accept_amplitude(const Circuit &circuit, std::uint64_t x, std::optional<std::size_t> yes_wire) {
    const WireLayout &layout = circuit.layout();
    AcceptAmplitude res;
    res.yes_wire = yes_wire.value_or(default_yes_wire(layout));
    require(res.yes_wire < layout.size() && layout.is_qubit(res.yes_wire), "the yes wire must be a qubit");
    std::vector<double> yes, all;
    for (const auto &[y, amps] : enumerate_paths(circuit, x)) {
        if (!layout.is_observable(y)) {
            continue;
        }
        const double w = squared_amplitude(amps);
        all.push_back(w);
        if (y & layout.mask(res.yes_wire)) {
            yes.push_back(w);
        }
    }
    res.yes = pairwise_sum(yes);
    res.total = pairwise_sum(all);
    if (!(res.total > 0.0)) {
        fail(ErrorCode::Unobservable, "unobservable state: zero total observable amplitude");
    }
    res.ratio = res.yes / res.total;
    return res;
}

IntervalWeight path_sum_weight(const Circuit &circuit, std::uint64_t x, std::vector<std::size_t> search_wires) {
    const WireLayout &layout = circuit.layout();
    check_search_wires(layout, search_wires);
    std::map<std::string, std::vector<double>> grouped;
    for (const auto &[y, amps] : enumerate_paths(circuit, x)) {
        if (layout.is_observable(y)) {
            grouped[search_key(layout, y, search_wires)].push_back(squared_amplitude(amps));
        }
    }
    auto leaves = std::make_shared<std::map<std::string, double>>();
    for (const auto &[key, ws] : grouped) {
        (*leaves)[key] = pairwise_sum(ws);
    }
    return tree_weight(leaves, search_wires.size());
}

IntervalWeight state_weight(const LorentzState &state, std::vector<std::size_t> search_wires) {
    const WireLayout &layout = state.layout();
    check_search_wires(layout, search_wires);
    std::map<std::string, std::vector<double>> grouped;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (layout.is_observable(i) && amps[i] != Complex(0.0)) {
            grouped[search_key(layout, i, search_wires)].push_back(std::norm(amps[i]));
        }
    }
    auto leaves = std::make_shared<std::map<std::string, double>>();
    for (const auto &[key, ws] : grouped) {
        (*leaves)[key] = pairwise_sum(ws);
    }
    return tree_weight(leaves, search_wires.size());
}

BranchingResult branching_search(const IntervalWeight &weight, std::size_t bits, std::optional<double> threshold) {
    BranchingResult res;
    res.threshold = threshold.value_or(std::ldexp(1.0, -static_cast<int>(bits + 2)));
    require(res.threshold > 0.0 && res.threshold < 0.5, "threshold must lie in (0, 1/2)");
    res.total = weight("");
    if (!(res.total > 0.0)) {
        fail(ErrorCode::Unobservable, "unobservable state: zero total observable weight");
    }
    for (std::size_t step = 0; step < bits; ++step) {
        BranchStep s;
        s.prefix = res.output;
        s.w_zero = weight(res.output + "0");
        s.w_one = weight(res.output + "1");
        res.steps.push_back(s);
        if (s.w_zero / res.total >= 1.0 - res.threshold) {
            res.output += '0';
        } else if (s.w_one / res.total >= 1.0 - res.threshold) {
            res.output += '1';
        } else {
            fail(ErrorCode::AlgorithmFailure, "no dominant solution (after prefix '" + s.prefix + "')");
        }
    }
    return res;
}

Circuit random_circuit(std::uint64_t seed, std::size_t n_wires, std::size_t n_gates) {
    require(n_wires >= 2 && n_wires <= kPathSumMaxWires, "random circuits use 2.." +
                                                              std::to_string(kPathSumMaxWires) + " wires");
    require(n_gates <= kPathSumMaxGates, "random circuits use at most " + std::to_string(kPathSumMaxGates) + " gates");
    CounterRng rng(seed, 0x70617468);
    std::vector<Wire> wires;
    std::vector<std::size_t> qubits, hybits;
    for (std::size_t w = 0; w < n_wires; ++w) {
        const bool hybit = w > 0 && rng.below(3) == 0;
        (hybit ? hybits : qubits).push_back(w);
        wires.push_back({(hybit ? "h" : "q") + std::to_string(w), hybit ? WireKind::Hybit : WireKind::Qubit,
                         WireRole::Plain});
    }
    Circuit c{WireLayout(std::move(wires))};
    auto pick = [&](const std::vector<std::size_t> &from) { return from[rng.below(from.size())]; };
    auto other_qubit = [&](std::size_t not_this) {
        std::vector<std::size_t> rest;
        std::copy_if(qubits.begin(), qubits.end(), std::back_inserter(rest),
                     [&](std::size_t q) { return q != not_this; });
        return rest;
    };
    auto chi = [&] { return 0.1 + 1.4 * rng.uniform(); };
    while (c.gates().size() < n_gates) {
        const auto choice = rng.below(10);
        const std::size_t q = pick(qubits);
        switch (choice) {
        case 0:
            c.add(Gate::single(GateKind::HadamardQ, q));
            break;
        case 1:
            c.add(Gate::single(GateKind::TGate, rng.below(n_wires)));
            break;
        case 2:
            c.add(Gate::single(rng.below(2) ? GateKind::SigmaX : GateKind::SigmaZ, q));
            break;
        case 3: {
            const std::size_t a = rng.below(n_wires);
            std::size_t b = rng.below(n_wires - 1);
            b += b >= a ? 1 : 0;
            c.add(Gate::controlled(GateKind::ControlledSigmaZ, {a}, b));
            break;
        }
        case 4:
        case 5:
            if (!hybits.empty()) {
                const std::size_t h = pick(hybits);
                c.add(choice == 4 ? Gate::single(GateKind::Tau, h) : Gate::single(GateKind::V, h, chi()));
            }
            break;
        case 6:
            if (!hybits.empty()) {
                c.add(Gate::controlled(GateKind::CV, {q}, pick(hybits), chi()));
            }
            break;
        case 7:
            if (!hybits.empty() && qubits.size() >= 2) {
                c.add(Gate::controlled(GateKind::CCV, {q, pick(other_qubit(q))}, pick(hybits), chi()));
            }
            break;
        case 8:
            if (qubits.size() >= 2) {
                c.add(Gate::controlled(GateKind::ControlledH, {q}, pick(other_qubit(q))));
            }
            break;
        default:
            if (qubits.size() >= 2) {
                const std::uint64_t table = rng.below(4);
                auto p = make_predicate(
                    1, [table](std::uint64_t x) { return ((table >> x) & 1U) != 0; },
                    "random table " + std::to_string(table));
                c.add(Gate::oracle(p, {q}, pick(other_qubit(q))));
            }
            break;
        }
    }
    return c;
}

} // namespace lqc
