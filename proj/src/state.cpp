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

#include "lqc/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "lqc/error.hpp"

namespace lqc {

WireLayout::WireLayout(std::vector<Wire> wires) : wires_(std::move(wires)) {
    if (wires_.size() > kMaxWires) {
        fail(ErrorCode::SizeLimit, "layout has " + std::to_string(wires_.size()) + " wires; at most " +
                                       std::to_string(kMaxWires) + " are supported");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        if (!seen.insert(wires_[i].label).second) {
            fail(ErrorCode::InvalidArgument, "duplicate wire label '" + wires_[i].label + "'");
        }
        if (wires_[i].kind == WireKind::Qubit) {
            qubit_wires_.push_back(i);
        } else {
            hybit_mask_ |= mask(i);
        }
    }
}

bool operator==(const Wire &a, const Wire &b) {
    return a.label == b.label && a.kind == b.kind && a.role == b.role;
}

bool operator==(const WireLayout &a, const WireLayout &b) { return a.wires_ == b.wires_; }

int WireLayout::signature(std::uint64_t index) const noexcept {
    return (std::popcount(index & hybit_mask_) & 1) ? -1 : 1;
}

std::optional<std::size_t> WireLayout::find(std::string_view label) const {
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        if (wires_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

std::string WireLayout::qubit_bits(std::uint64_t index) const {
    std::string bits;
    bits.reserve(qubit_wires_.size());
    for (std::size_t w : qubit_wires_) {
        bits.push_back((index & mask(w)) ? '1' : '0');
    }
    return bits;
}

std::uint64_t WireLayout::index_of_qubit_bits(std::string_view bits) const {
    if (bits.size() != qubit_wires_.size()) {
        fail(ErrorCode::InvalidArgument, "qubit bitstring '" + std::string(bits) + "' has length " +
                                             std::to_string(bits.size()) + ", layout has " +
                                             std::to_string(qubit_wires_.size()) + " qubits");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            fail(ErrorCode::InvalidArgument, "bitstring '" + std::string(bits) + "' contains a non-binary digit");
        }
        if (bits[i] == '1') {
            index |= mask(qubit_wires_[i]);
        }
    }
    return index;
}

std::uint64_t WireLayout::index_of_bits(std::string_view bits) const {
    if (bits.size() != wires_.size()) {
        fail(ErrorCode::InvalidArgument, "bitstring '" + std::string(bits) + "' has length " +
                                             std::to_string(bits.size()) + ", layout has " +
                                             std::to_string(wires_.size()) + " wires");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            fail(ErrorCode::InvalidArgument, "bitstring '" + std::string(bits) + "' contains a non-binary digit");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

LorentzState::LorentzState(WireLayout layout, std::vector<Complex> amplitudes, double log_scale)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)), log_scale_(log_scale) {
    if (amplitudes_.size() != layout_.dimension()) {
        fail(ErrorCode::InvalidArgument, "amplitude vector has " + std::to_string(amplitudes_.size()) +
                                             " entries, layout dimension is " +
                                             std::to_string(layout_.dimension()));
    }
}

LorentzState LorentzState::basis(const WireLayout &layout, std::string_view bits) {
    return basis(layout, layout.index_of_bits(bits));
}

LorentzState LorentzState::basis(const WireLayout &layout, std::uint64_t index) {
    require(index < layout.dimension(), "basis index out of range");
    std::vector<Complex> amps(layout.dimension());
    amps[index] = 1.0;
    return LorentzState(layout, std::move(amps));
}

double LorentzState::indefinite_norm_scaled() const {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        sum += layout_.signature(i) * std::norm(amplitudes_[i]);
    }
    return sum;
}

double LorentzState::indefinite_norm() const { return indefinite_norm_scaled() * std::exp(2.0 * log_scale_); }

double LorentzState::observable_weight() const {
    const std::uint64_t hmask = layout_.hybit_mask();
    double sum = 0.0;
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & hmask) == 0) {
            sum += std::norm(amplitudes_[i]);
        }
    }
    return sum;
}

double LorentzState::max_magnitude() const {
    double m = 0.0;
    for (const Complex &a : amplitudes_) {
        m = std::max(m, std::abs(a));
    }
    return m;
}

ObservableDistribution LorentzState::observable_distribution() const {
    ObservableDistribution dist;
    dist.log_scale = log_scale_;
    dist.observable_weight = observable_weight();
    if (!(dist.observable_weight > 0.0)) {
        fail(ErrorCode::Unobservable, "state fully unobservable: every component has a hybit in |1)");
    }
    const std::uint64_t hmask = layout_.hybit_mask();
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & hmask) == 0) {
            dist.entries[layout_.qubit_bits(i)] += std::norm(amplitudes_[i]) / dist.observable_weight;
        }
    }
    return dist;
}

LorentzState &LorentzState::rescale() {
    const double m = max_magnitude();
    if (m == 0.0 || m == 1.0) {
        return *this;
    }
    const double inv = 1.0 / m;
    for (Complex &a : amplitudes_) {
        a *= inv;
    }
    log_scale_ += std::log(m);
    return *this;
}

LorentzState &LorentzState::rescale_if_needed() {
    const double m = max_magnitude();
    if (m > kRescaleThreshold || (m > 0.0 && m < 1.0 / kRescaleThreshold)) {
        rescale();
    }
    return *this;
}

} // namespace lqc
