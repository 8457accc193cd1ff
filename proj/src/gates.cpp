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

#include "lqc/gates.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <set>

#include "lqc/error.hpp"

namespace lqc {

Predicate::Predicate(std::size_t width, Evaluator evaluator, std::string description)
    : width_(width), evaluator_(std::move(evaluator)), description_(std::move(description)) {
    require(static_cast<bool>(evaluator_), "predicate needs an evaluator");
    require(width_ <= 62, "predicate width too large");
}

PredicatePtr make_predicate(std::size_t width, Predicate::Evaluator evaluator, std::string description) {
    return std::make_shared<const Predicate>(width, std::move(evaluator), std::move(description));
}

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    std::size_t controls;
    bool chi;
};

constexpr std::array<KindInfo, 11> kKinds{{
    {GateKind::HadamardQ, "H", 0, false},
    {GateKind::TGate, "T", 0, false},
    {GateKind::Tau, "tau", 0, false},
    {GateKind::SigmaX, "X", 0, false},
    {GateKind::SigmaZ, "Z", 0, false},
    {GateKind::ControlledSigmaZ, "CZ", 1, false},
    {GateKind::ControlledH, "CH", 1, false},
    {GateKind::V, "V", 0, true},
    {GateKind::CV, "CV", 1, true},
    {GateKind::CCV, "CCV", 2, true},
    {GateKind::OracleFlip, "oracle", 0, false},
}};

const KindInfo &info(GateKind kind) {
    for (const KindInfo &k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown gate kind");
}

const double kSqrt2 = std::sqrt(2.0);
const Complex kI{0.0, 1.0};

} // namespace

std::string_view gate_kind_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const KindInfo &k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    return std::nullopt;
}

std::size_t control_count(GateKind kind) { return info(kind).controls; }
bool takes_chi(GateKind kind) { return info(kind).chi; }

SmallMatrix::SmallMatrix(std::size_t d, std::initializer_list<Complex> values) : dim(d), data(values) {
    require(data.size() == d * d, "matrix literal has the wrong number of entries");
}

SmallMatrix SmallMatrix::identity(std::size_t d) {
    SmallMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

SmallMatrix SmallMatrix::adjoint() const {
    SmallMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

double SmallMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex &z : data) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

SmallMatrix operator*(const SmallMatrix &a, const SmallMatrix &b) {
    require(a.dim == b.dim, "matrix dimension mismatch");
    SmallMatrix m(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            const Complex ark = a(r, k);
            for (std::size_t c = 0; c < a.dim; ++c) {
                m(r, c) += ark * b(k, c);
            }
        }
    }
    return m;
}

double max_abs_diff(const SmallMatrix &a, const SmallMatrix &b) {
    if (a.dim != b.dim) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    }
    return m;
}

Gate Gate::single(GateKind kind, std::size_t target, double chi) {
    require(control_count(kind) == 0 && kind != GateKind::OracleFlip,
            std::string(gate_kind_name(kind)) + " is not a single-wire gate");
    return Gate{kind, {target}, chi, nullptr};
}

Gate Gate::controlled(GateKind kind, std::vector<std::size_t> controls, std::size_t target, double chi) {
    require(controls.size() == control_count(kind), std::string(gate_kind_name(kind)) + " expects " +
                                                        std::to_string(control_count(kind)) + " control wires");
    controls.push_back(target);
    return Gate{kind, std::move(controls), chi, nullptr};
}

Gate Gate::oracle(PredicatePtr predicate, std::vector<std::size_t> inputs, std::size_t oracle_wire) {
    require(predicate != nullptr, "oracle gate needs a predicate");
    require(inputs.size() == predicate->width(), "oracle input wire count " + std::to_string(inputs.size()) +
                                                     " does not match predicate width " +
                                                     std::to_string(predicate->width()));
    inputs.push_back(oracle_wire);
    return Gate{GateKind::OracleFlip, std::move(inputs), 0.0, std::move(predicate)};
}

SmallMatrix target_matrix(GateKind kind, double chi) {
    switch (kind) {
    case GateKind::HadamardQ:
    case GateKind::ControlledH: {
        const double h = 1.0 / kSqrt2;
        return SmallMatrix(2, {h, h, h, -h});
    }
    case GateKind::TGate:
        // e^{-i pi/8} diag(e^{i pi/8}, e^{-i pi/8})
        return SmallMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4.0)});
    case GateKind::Tau:
        return SmallMatrix(2, {kSqrt2, kI, kI, -kSqrt2});
    case GateKind::SigmaX:
        return SmallMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case GateKind::SigmaZ:
    case GateKind::ControlledSigmaZ:
        return SmallMatrix(2, {1.0, 0.0, 0.0, -1.0});
    case GateKind::V:
    case GateKind::CV:
    case GateKind::CCV: {
        const double c = std::cosh(chi);
        const double s = std::sinh(chi);
        return SmallMatrix(2, {c, -kI * s, kI * s, c});
    }
    case GateKind::OracleFlip:
        break;
    }
    fail(ErrorCode::InvalidArgument, "matrix unavailable for oracle gates; apply directly");
}

SmallMatrix matrix_of(GateKind kind, double chi) {
    const SmallMatrix block = target_matrix(kind, chi);
    const std::size_t controls = control_count(kind);
    if (controls == 0) {
        return block;
    }
    const std::size_t dim = std::size_t{2} << controls;
    SmallMatrix m = SmallMatrix::identity(dim);
    const std::size_t base = dim - 2;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            m(base + r, base + c) = block(r, c);
        }
    }
    return m;
}

void validate(const Gate &gate, const WireLayout &layout) {
    const std::string name(gate_kind_name(gate.kind));
    std::set<std::size_t> distinct(gate.wires.begin(), gate.wires.end());
    if (distinct.size() != gate.wires.size()) {
        fail(ErrorCode::InvalidArgument, name + " gate repeats a wire");
    }
    for (std::size_t w : gate.wires) {
        if (w >= layout.size()) {
            fail(ErrorCode::InvalidArgument,
                 name + " gate references wire " + std::to_string(w) + " outside the layout");
        }
    }
    auto need = [&](std::size_t wire, WireKind kind, const char *what) {
        if (layout[wire].kind != kind) {
            fail(ErrorCode::InvalidArgument, name + " gate requires its " + what + " to be a " +
                                                 (kind == WireKind::Qubit ? "qubit" : "hybit") + " (wire '" +
                                                 layout[wire].label + "')");
        }
    };
    if (gate.kind == GateKind::OracleFlip) {
        if (!gate.predicate) {
            fail(ErrorCode::InvalidArgument, "oracle gate has no predicate");
        }
        if (gate.wires.size() != gate.predicate->width() + 1) {
            fail(ErrorCode::InvalidArgument, "oracle gate wire count does not match predicate width");
        }
        for (std::size_t w : gate.wires) {
            need(w, WireKind::Qubit, "wires");
        }
        return;
    }
    if (gate.wires.size() != control_count(gate.kind) + 1) {
        fail(ErrorCode::InvalidArgument, name + " gate expects " + std::to_string(control_count(gate.kind) + 1) +
                                             " wires, got " + std::to_string(gate.wires.size()));
    }
    if (takes_chi(gate.kind) && !(gate.chi > 0.0 && std::isfinite(gate.chi))) {
        fail(ErrorCode::InvalidArgument, name + " gate requires chi > 0");
    }
    const std::size_t target = gate.wires.back();
    switch (gate.kind) {
    case GateKind::HadamardQ:
    case GateKind::SigmaX:
        need(target, WireKind::Qubit, "target");
        break;
    case GateKind::Tau:
    case GateKind::V:
        need(target, WireKind::Hybit, "target");
        break;
    case GateKind::ControlledH:
        need(gate.wires[0], WireKind::Qubit, "control");
        need(target, WireKind::Qubit, "target");
        break;
    case GateKind::CV:
        need(gate.wires[0], WireKind::Qubit, "control");
        need(target, WireKind::Hybit, "target");
        break;
    case GateKind::CCV:
        need(gate.wires[0], WireKind::Qubit, "first control");
        need(gate.wires[1], WireKind::Qubit, "second control");
        need(target, WireKind::Hybit, "target");
        break;
    default:
        break;
    }
}

namespace {

void apply_oracle(LorentzState &state, const Gate &gate) {
    const WireLayout &layout = state.layout();
    const std::size_t width = gate.predicate->width();
    const std::uint64_t oracle_bit = layout.mask(gate.wires.back());
    std::vector<std::uint64_t> input_bits(width);
    for (std::size_t k = 0; k < width; ++k) {
        input_bits[k] = layout.mask(gate.wires[k]);
    }
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & oracle_bit) {
            continue;
        }
        std::uint64_t x = 0;
        for (std::size_t k = 0; k < width; ++k) {
            x = (x << 1) | static_cast<std::uint64_t>((i & input_bits[k]) != 0);
        }
        if ((*gate.predicate)(x)) {
            std::swap(amps[i], amps[i | oracle_bit]);
        }
    }
}

} // namespace

void apply(LorentzState &state, const Gate &gate) {
    const WireLayout &layout = state.layout();
    validate(gate, layout);
    if (gate.kind == GateKind::OracleFlip) {
        apply_oracle(state, gate);
        return;
    }
    const SmallMatrix m = target_matrix(gate.kind, gate.chi);
    const std::uint64_t target = layout.mask(gate.wires.back());
    std::uint64_t controls = 0;
    for (std::size_t k = 0; k + 1 < gate.wires.size(); ++k) {
        controls |= layout.mask(gate.wires[k]);
    }
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & target) || (i & controls) != controls) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | target];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | target] = m10 * a0 + m11 * a1;
    }
}

bool is_lorentzian(const SmallMatrix &matrix, const std::vector<WireKind> &wire_kinds, double tolerance) {
    const std::size_t n = wire_kinds.size();
    if (n >= 20 || matrix.dim != (std::size_t{1} << n)) {
        return false;
    }
    SmallMatrix metric(matrix.dim);
    for (std::size_t i = 0; i < matrix.dim; ++i) {
        int sign = 1;
        for (std::size_t w = 0; w < n; ++w) {
            if (wire_kinds[w] == WireKind::Hybit && ((i >> (n - 1 - w)) & 1U)) {
                sign = -sign;
            }
        }
        metric(i, i) = static_cast<double>(sign);
    }
    const SmallMatrix congruent = matrix.adjoint() * metric * matrix;
    const double scale = std::max(1.0, matrix.max_abs() * matrix.max_abs());
    return max_abs_diff(congruent, metric) <= tolerance * scale;
}

bool is_lorentzian(const Gate &gate, const WireLayout &layout, double tolerance) {
    validate(gate, layout);
    if (gate.kind == GateKind::OracleFlip) {
        // A basis permutation restricted to qubit wires, whose metric is the identity.
        return true;
    }
    std::vector<WireKind> kinds;
    for (std::size_t w : gate.wires) {
        kinds.push_back(layout[w].kind);
    }
    return is_lorentzian(matrix_of(gate.kind, gate.chi), kinds, tolerance);
}

std::vector<Gate> cv_decomposition(std::size_t control, std::size_t target) {
    std::vector<Gate> gates;
    for (int rep = 0; rep < 2; ++rep) {
        gates.push_back(Gate::controlled(GateKind::ControlledSigmaZ, {control}, target));
        gates.push_back(Gate::single(GateKind::Tau, target));
    }
    return gates;
}

std::vector<Gate> ccv_decomposition(std::size_t control_a, std::size_t control_b, std::size_t target) {
    std::vector<Gate> gates;
    for (int rep = 0; rep < 2; ++rep) {
        gates.push_back(Gate::controlled(GateKind::ControlledSigmaZ, {control_a}, target));
        gates.push_back(Gate::single(GateKind::Tau, target));
        gates.push_back(Gate::controlled(GateKind::ControlledSigmaZ, {control_b}, target));
        gates.push_back(Gate::single(GateKind::Tau, target));
    }
    return gates;
}

} // namespace lqc
