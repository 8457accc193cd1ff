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

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqc/predicate.hpp"
#include "lqc/state.hpp"

namespace lqc {

/// cosh(chi) = 3: the rotation realized by two tau and two controlled-sigma_z gates.
inline const double kChiCv = 2.0 * std::log(1.0 + std::sqrt(2.0));
/// cosh(chi) = 17: the rotation realized by four tau and four controlled-sigma_z gates.
inline const double kChiCcv = 4.0 * std::log(1.0 + std::sqrt(2.0));

enum class GateKind {
    HadamardQ,
    TGate,
    Tau,
    SigmaX,
    SigmaZ,
    ControlledSigmaZ,
    ControlledH,
    V,
    CV,
    CCV,
    OracleFlip,
};

[[nodiscard]] std::string_view gate_kind_name(GateKind kind);
[[nodiscard]] std::optional<GateKind> gate_kind_from_name(std::string_view name);
[[nodiscard]] std::size_t control_count(GateKind kind);
[[nodiscard]] bool takes_chi(GateKind kind);

/// Square complex matrix, row-major.
struct SmallMatrix {
    std::size_t dim = 0;
    std::vector<Complex> data;

    SmallMatrix() = default;
    explicit SmallMatrix(std::size_t d) : dim(d), data(d * d) {}
    SmallMatrix(std::size_t d, std::initializer_list<Complex> values);

    static SmallMatrix identity(std::size_t d);

    Complex &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    [[nodiscard]] SmallMatrix adjoint() const;
    [[nodiscard]] double max_abs() const;
    friend SmallMatrix operator*(const SmallMatrix &a, const SmallMatrix &b);
};

/// Largest entrywise |a - b|; infinity on a dimension mismatch.
[[nodiscard]] double max_abs_diff(const SmallMatrix &a, const SmallMatrix &b);

/// One primitive operation. Wires list controls first, then the target; an
/// OracleFlip lists its input wires (first = most significant) then the oracle.
struct Gate {
    GateKind kind = GateKind::HadamardQ;
    std::vector<std::size_t> wires;
    double chi = 0.0;
    PredicatePtr predicate;

    static Gate single(GateKind kind, std::size_t target, double chi = 0.0);
    static Gate controlled(GateKind kind, std::vector<std::size_t> controls, std::size_t target, double chi = 0.0);
    static Gate oracle(PredicatePtr predicate, std::vector<std::size_t> inputs, std::size_t oracle_wire);
};

/// The 2x2 block acted on the target when every control is |1>.
[[nodiscard]] SmallMatrix target_matrix(GateKind kind, double chi = 0.0);
/// Full matrix on the gate's wires (controls first as most significant bits).
[[nodiscard]] SmallMatrix matrix_of(GateKind kind, double chi = 0.0);

/// Throws InvalidArgument when the gate does not fit the layout.
void validate(const Gate &gate, const WireLayout &layout);

void apply(LorentzState &state, const Gate &gate);

/// G^H Sigma G == Sigma for the metric induced by the given wire kinds.
[[nodiscard]] bool is_lorentzian(const SmallMatrix &matrix, const std::vector<WireKind> &wire_kinds,
                                 double tolerance = 1e-12);
[[nodiscard]] bool is_lorentzian(const Gate &gate, const WireLayout &layout, double tolerance = 1e-12);

/// Two controlled-sigma_z and two tau gates realizing CV at chi = kChiCv.
[[nodiscard]] std::vector<Gate> cv_decomposition(std::size_t control, std::size_t target);
/// Four controlled-sigma_z and four tau gates realizing CCV at chi = kChiCcv.
[[nodiscard]] std::vector<Gate> ccv_decomposition(std::size_t control_a, std::size_t control_b, std::size_t target);

} // namespace lqc
