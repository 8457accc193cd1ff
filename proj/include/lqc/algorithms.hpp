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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqc/circuit.hpp"
#include "lqc/gates.hpp"
#include "lqc/oracles.hpp"
#include "lqc/state.hpp"

namespace lqc {

/// ceil(n ln 2 / chi) + 2.
[[nodiscard]] std::size_t default_repetitions(std::size_t n, double chi);

/// log(cosh(x)) without overflow.
[[nodiscard]] double log_cosh(double x);

/// r rounds of one CCV per work wire, each controlled by (oracle, work_i) and
/// targeting the hybit.
[[nodiscard]] std::vector<Gate> q_operation(const std::vector<std::size_t> &work_wires, std::size_t oracle_wire,
                                            std::size_t hybit_wire, std::size_t r, double chi = kChiCcv);

// ---------------------------------------------------------------------------
// Maximum independent set

struct IsCensus {
    std::size_t n = 0;
    std::uint64_t n_is = 0;
    std::uint64_t n_mis = 0;
    std::size_t max_size = 0;
    /// by_size[m] = number of independent sets with m vertices.
    std::vector<std::uint64_t> by_size;
    /// Bitmasks of every maximum independent set, ascending.
    std::vector<std::uint64_t> mis_sets;
};

[[nodiscard]] IsCensus is_census(const Graph &g);

/// Wires: x1..xn (work), o (oracle), h (hybit).
[[nodiscard]] Circuit mis_circuit(const Graph &g, std::size_t r, double chi = kChiCcv);

/// Probability that the observable work register is a maximum independent set.
[[nodiscard]] double mis_closed_form_probability(const IsCensus &census, std::size_t r, double chi = kChiCcv);

struct MisReport {
    Graph graph;
    std::size_t r = 0;
    double chi = 0.0;
    std::string most_probable;
    double most_probable_probability = 0.0;
    bool most_probable_is_mis = false;
    double probability_simulated = 0.0;
    double probability_closed_form = 0.0;
    IsCensus census;
    /// Work-register marginal, ordered by decreasing probability then bitstring.
    std::vector<std::pair<std::string, double>> ranking;
};

[[nodiscard]] MisReport run_mis(const Graph &g, std::optional<std::size_t> r = std::nullopt, double chi = kChiCcv);

struct MisDecision {
    std::string subset;
    bool subset_is_independent = false;
    /// Observable probability that the check qubit reads 1.
    double ratio = 0.0;
    /// "accept" above 2/3, "reject" below 1/3, otherwise "inconclusive".
    std::string verdict;
};

/// Asks whether the MIS circuit output has the size of an independent set S,
/// using a check qubit flipped when S is independent and the work register
/// is an independent set with |S| vertices.
[[nodiscard]] MisDecision mis_decide(const Graph &g, std::string_view subset, std::optional<std::size_t> r = std::nullopt,
                                     double chi = kChiCcv);

// ---------------------------------------------------------------------------
// Majority satisfiability

enum class MajsatMode { Exact, MonteCarlo };

struct MajsatConfig {
    double delta_p = 0.35355339059327373; // sqrt(2)/4
    double c = 2.0;
    std::optional<std::size_t> r;
    std::optional<std::size_t> r_prime;
    double chi = kChiCv;
    std::uint64_t seed = 0;
    MajsatMode mode = MajsatMode::Exact;
};

[[nodiscard]] std::string_view majsat_mode_name(MajsatMode mode);

/// Smallest integer N with N >= 2 log(eps) / log(1 - 4 delta^2).
[[nodiscard]] std::size_t npp_bound(double delta_p, double epsilon);

/// The 2n+1 ratios 2^i, i = -n..n.
[[nodiscard]] std::vector<double> eta_grid(std::size_t n);

/// Probability of -1 when the auxiliary qubit is measured along x.
[[nodiscard]] double majsat_exact_pminus(std::uint64_t s, std::size_t n, double eta);

/// Closed-form eta interval on which P- - 1/2 >= delta_p. Requires s > 2^(n-1).
[[nodiscard]] std::pair<double, double> eta_window(double delta_p, std::uint64_t s, std::size_t n);

/// Normalized (s|0> + eta (2^n - 2s)/sqrt(2) |1>).
[[nodiscard]] std::array<double, 2> majsat_aux_target(std::uint64_t s, std::size_t n, double eta);

struct MajsatInstance {
    Circuit circuit;
    LorentzState initial;
    std::size_t n = 0;
    std::size_t oracle_wire = 0;
    std::size_t hybit_wire = 0;
    std::size_t aux_wire = 0;
};

/// Wires: x1..xn (work), o (oracle), h (hybit), a (auxiliary).
[[nodiscard]] MajsatInstance majsat_circuit(const PredicatePtr &f, double eta, std::size_t r, std::size_t r_prime,
                                            double chi = kChiCv);
[[nodiscard]] MajsatInstance majsat_circuit(const CnfFormula &f, double eta, std::size_t r, std::size_t r_prime,
                                            double chi = kChiCv);

struct MajsatObservation {
    /// Auxiliary -1 probability over the full measurement sequence.
    double p_minus = 0.0;
    /// Observable probability of work = 1..1 and oracle = 1.
    double branch_probability = 0.0;
    /// Auxiliary state on that branch, normalized.
    std::array<Complex, 2> aux_state{};
    double aux_p_minus = 0.0;
};

[[nodiscard]] MajsatObservation observe_majsat(const MajsatInstance &instance, const LorentzState &final_state);

/// Exact probability of the work = 1..1, oracle = 1 branch, from the Walsh
/// spectrum of f.
[[nodiscard]] double majsat_branch_probability(const Predicate &f, double eta, std::size_t r, std::size_t r_prime,
                                               double chi = kChiCv);

/// Two-factor approximation of the same branch probability that depends on f
/// only through s. Approaches the exact value as r and r' grow.
[[nodiscard]] double majsat_branch_probability_approx(std::uint64_t s, std::size_t n, double eta, std::size_t r,
                                                      std::size_t r_prime, double chi = kChiCv);

/// P(Binomial(trials, p) > trials / 2).
[[nodiscard]] double majority_probability(std::size_t trials, double p);

struct EtaResult {
    int exponent = 0;
    double eta = 0.0;
    double p_minus = 0.0;
    double branch_probability = 0.0;
    /// Exact mode: probability one set succeeds, and that all n sets do.
    double p_set = 0.0;
    double p_all = 0.0;
    /// Monte Carlo mode: number of successful sets out of n.
    std::size_t successes = 0;
    bool all_success = false;
};

struct MajsatVerdict {
    std::size_t n = 0;
    std::optional<std::uint64_t> s_true;
    MajsatMode mode = MajsatMode::Exact;
    double delta_p = 0.0;
    double c = 0.0;
    double epsilon = 0.0;
    std::size_t n_pp = 0;
    std::size_t r = 0;
    std::size_t r_prime = 0;
    double chi = 0.0;
    std::uint64_t seed = 0;
    std::vector<EtaResult> per_eta;
    bool accepted = false;
};

[[nodiscard]] MajsatVerdict majsat_decide(const PredicatePtr &f, const MajsatConfig &cfg);
[[nodiscard]] MajsatVerdict majsat_decide(const CnfFormula &f, const MajsatConfig &cfg);

// ---------------------------------------------------------------------------
// Counting independent sets of size k

struct SharpKisResult {
    std::size_t k = 0;
    std::uint64_t count = 0;
    std::uint64_t z_min = 0;
    /// (z, accepted) for each MAJSAT query, in query order.
    std::vector<std::pair<std::uint64_t, bool>> queries;
};

[[nodiscard]] SharpKisResult sharp_k_is(const Graph &g, std::size_t k, const MajsatConfig &cfg = {});

struct MaxKisReport {
    std::vector<SharpKisResult> per_k;
    std::vector<std::uint64_t> counts;
    std::size_t max_k = 0;
};

[[nodiscard]] MaxKisReport max_k_is(const Graph &g, const MajsatConfig &cfg = {});

// ---------------------------------------------------------------------------
// Postselection

/// Wires: o (oracle), x1..xn (work), h (hybit).
[[nodiscard]] WireLayout postselect_layout(std::size_t n);

/// sum_x c_x |0_o>|x>|0) from 2^n work coefficients.
[[nodiscard]] LorentzState postselect_input(std::size_t n, const std::vector<Complex> &coefficients);

struct PostselectResult {
    std::size_t r = 0;
    /// Observable probability that the oracle qubit reads 1.
    double success_probability = 0.0;
    /// State on the oracle = 1, hybit = 0 branch.
    LorentzState post_state;
    /// |<target|post>|^2 with the normalized 'yes' projection of the input.
    double fidelity = 0.0;
    /// The same overlap for the state after the hybit measurement alone.
    double unconditioned_fidelity = 0.0;
};

[[nodiscard]] PostselectResult postselect(const LorentzState &state, const PredicatePtr &p,
                                          std::optional<std::size_t> r = std::nullopt);

struct SuperPostselectTerm {
    std::string bits;
    std::size_t ones = 0;
    /// Natural log of the magnitude of the final observable coefficient.
    double log_magnitude = 0.0;
    double probability = 0.0;
};

struct SuperPostselectResult {
    std::size_t r = 0;
    double chi = 0.0;
    std::vector<SuperPostselectTerm> terms;
    std::vector<std::string> selected;
    /// Largest coefficient over the largest one not in the selected group.
    double log_ratio = 0.0;
    LorentzState final_state;
};

/// Wires: x1..xw (work), o (oracle), h (hybit); starts from the equal
/// superposition of the terms with the oracle qubit set.
[[nodiscard]] SuperPostselectResult super_postselect_demo(const std::vector<std::string> &terms,
                                                          std::optional<std::size_t> r = std::nullopt,
                                                          double chi = kChiCcv);

} // namespace lqc
