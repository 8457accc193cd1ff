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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lqc {

using Complex = std::complex<double>;

enum class WireKind { Qubit, Hybit };
enum class WireRole { Work, Oracle, Auxiliary, Plain };

struct Wire {
    std::string label;
    WireKind kind = WireKind::Qubit;
    WireRole role = WireRole::Plain;
};

/// Largest supported wire count; the dense amplitude vector has 2^N entries.
inline constexpr std::size_t kMaxWires = 30;

/// Ordered wire declaration. Wire 0 is the most significant bit of a basis
/// index, so printed kets read left to right in index order.
class WireLayout {
  public:
    WireLayout() = default;
    explicit WireLayout(std::vector<Wire> wires);

    [[nodiscard]] std::size_t size() const noexcept { return wires_.size(); }
    [[nodiscard]] const Wire &operator[](std::size_t i) const { return wires_.at(i); }
    [[nodiscard]] const std::vector<Wire> &wires() const noexcept { return wires_; }

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubit_wires_.size(); }
    [[nodiscard]] std::size_t hybit_count() const noexcept { return wires_.size() - qubit_wires_.size(); }
    [[nodiscard]] std::uint64_t dimension() const noexcept { return std::uint64_t{1} << wires_.size(); }

    [[nodiscard]] bool is_qubit(std::size_t wire) const { return (*this)[wire].kind == WireKind::Qubit; }
    [[nodiscard]] bool is_hybit(std::size_t wire) const { return (*this)[wire].kind == WireKind::Hybit; }

    [[nodiscard]] std::uint64_t mask(std::size_t wire) const noexcept {
        return std::uint64_t{1} << (wires_.size() - 1 - wire);
    }
    /// Bits of a basis index that belong to hybit wires.
    [[nodiscard]] std::uint64_t hybit_mask() const noexcept { return hybit_mask_; }
    [[nodiscard]] const std::vector<std::size_t> &qubit_wires() const noexcept { return qubit_wires_; }

    /// +1 or -1: the diagonal entry of the metric at a basis index.
    [[nodiscard]] int signature(std::uint64_t index) const noexcept;
    /// True when every hybit of the basis state is in |0).
    [[nodiscard]] bool is_observable(std::uint64_t index) const noexcept { return (index & hybit_mask_) == 0; }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;

    /// Qubit-only bitstring of a basis index, in wire order.
    [[nodiscard]] std::string qubit_bits(std::uint64_t index) const;
    /// Basis index of a qubit bitstring with every hybit in |0).
    [[nodiscard]] std::uint64_t index_of_qubit_bits(std::string_view bits) const;
    /// Basis index of a full bitstring (one character per wire).
    [[nodiscard]] std::uint64_t index_of_bits(std::string_view bits) const;

    friend bool operator==(const WireLayout &a, const WireLayout &b);

  private:
    std::vector<Wire> wires_;
    std::vector<std::size_t> qubit_wires_;
    std::uint64_t hybit_mask_ = 0;
};

bool operator==(const Wire &a, const Wire &b);

struct ObservableDistribution {
    /// Qubit bitstring -> probability, renormalized over the observable subspace.
    std::map<std::string, double> entries;
    /// Sum of |a|^2 over observable basis states, in stored (scaled) units.
    double observable_weight = 0.0;
    /// Natural log of the factor the stored amplitudes were divided by.
    double log_scale = 0.0;
};

/// Dense amplitude vector over a typed wire layout. The true amplitude is the
/// stored amplitude times exp(log_scale).
class LorentzState {
  public:
    /// Magnitude above which automatic rescaling kicks in.
    static constexpr double kRescaleThreshold = 1e100;

    LorentzState() = default;
    LorentzState(WireLayout layout, std::vector<Complex> amplitudes, double log_scale = 0.0);

    static LorentzState basis(const WireLayout &layout, std::string_view bits);
    static LorentzState basis(const WireLayout &layout, std::uint64_t index);

    [[nodiscard]] const WireLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::uint64_t index) const { return amplitudes_.at(index); }
    [[nodiscard]] double log_scale() const noexcept { return log_scale_; }

    /// (psi|Sigma|psi) in true units: sum_j s_j |a_j|^2 * exp(2 log_scale).
    [[nodiscard]] double indefinite_norm() const;
    /// The same quantity in stored units (no exp(2 log_scale) factor).
    [[nodiscard]] double indefinite_norm_scaled() const;
    [[nodiscard]] double observable_weight() const;
    [[nodiscard]] double max_magnitude() const;

    /// Throws ErrorCode::Unobservable when the observable weight is zero.
    [[nodiscard]] ObservableDistribution observable_distribution() const;

    /// Divides by the max amplitude magnitude and folds it into log_scale.
    LorentzState &rescale();
    LorentzState &rescale_if_needed();

  private:
    WireLayout layout_;
    std::vector<Complex> amplitudes_;
    double log_scale_ = 0.0;
};

} // namespace lqc
