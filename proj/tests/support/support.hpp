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
#include <vector>

#include "lqc/circuit.hpp"
#include "lqc/oracles.hpp"

namespace lqc::testing {

/// Dense 2^N x 2^N matrix of one gate, built from textbook 2x2 blocks.
using Dense = std::vector<std::vector<Complex>>;

[[nodiscard]] Dense dense_gate(const Gate &gate, const WireLayout &layout);
[[nodiscard]] std::vector<Complex> dense_apply(const Dense &m, const std::vector<Complex> &v);
/// Applies every gate of the circuit by dense matrix-vector products.
[[nodiscard]] std::vector<Complex> dense_run(const Circuit &c, std::vector<Complex> v);

/// Sum_j s_j |v_j|^2 with an independently computed signature.
[[nodiscard]] double dense_indefinite_norm(const WireLayout &layout, const std::vector<Complex> &v);

/// True amplitudes (stored times exp(log_scale)).
[[nodiscard]] std::vector<Complex> true_amplitudes(const LorentzState &s);

/// One representative of every isomorphism class of simple graphs on n vertices.
[[nodiscard]] const std::vector<Graph> &nonisomorphic_graphs(std::size_t n);

/// Seeded random CNF formulas with 2..max_vars variables.
[[nodiscard]] std::vector<CnfFormula> cnf_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vars = 6);

/// Independent set count by size via recursive branching on vertices.
[[nodiscard]] std::vector<std::uint64_t> count_is_by_size(const Graph &g);

/// Random normalized-ish complex vector of the given dimension.
[[nodiscard]] std::vector<Complex> random_vector(std::uint64_t seed, std::uint64_t dim);

} // namespace lqc::testing
