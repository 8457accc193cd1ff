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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "lqc/algorithms.hpp"
#include "lqc/circuit.hpp"
#include "lqc/error.hpp"
#include "lqc/gates.hpp"
#include "lqc/oracles.hpp"
#include "lqc/pathsum.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace lqc;

namespace {

const Complex I(0.0, 1.0);

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

using Check = std::function<void(Outcome &)>;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Textbook hyperbolic rotation on a hybit.
std::array<std::array<Complex, 2>, 2> textbook_v(double chi) {
    return {{{std::cosh(chi), -I * std::sinh(chi)}, {I * std::sinh(chi), std::cosh(chi)}}};
}

// Criterion 1: composites built from controlled-sigma_z and tau.
void gate_algebra(Outcome &o) {
    const double r2 = std::sqrt(2.0);
    const std::array<std::array<Complex, 2>, 2> tau{{{r2, I}, {I, -r2}}};
    const SmallMatrix lib_tau = target_matrix(GateKind::Tau);
    double worst = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            worst = std::max(worst, std::abs(lib_tau(a, b) - tau[a][b]));
            Complex sq = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                sq += tau[a][k] * tau[k][b];
            }
            worst = std::max(worst, std::abs(sq - (a == b ? 1.0 : 0.0)));
        }
    }
    const SmallMatrix lib_sq = lib_tau * lib_tau;
    worst = std::max(worst, max_abs_diff(lib_sq, SmallMatrix::identity(2)));
    o.detail << "tau^2 = I err " << worst;

    // Branch check: V on the all-ones control branch, identity elsewhere.
    auto branch_error = [](const std::vector<Gate> &gates, std::size_t controls, double chi) {
        std::vector<Wire> wires;
        for (std::size_t c = 0; c < controls; ++c) {
            wires.push_back({"c" + std::to_string(c), WireKind::Qubit, WireRole::Plain});
        }
        wires.push_back({"h", WireKind::Hybit, WireRole::Plain});
        const WireLayout l(wires);
        Circuit circ{l};
        circ.add(gates);
        const auto v = textbook_v(chi);
        double err = 0.0;
        for (std::uint64_t ctrl = 0; ctrl < (std::uint64_t{1} << controls); ++ctrl) {
            const bool on = ctrl + 1 == (std::uint64_t{1} << controls);
            for (std::uint64_t t = 0; t < 2; ++t) {
                const auto out = testing::true_amplitudes(execute(circ, LorentzState::basis(l, (ctrl << 1) | t)));
                for (std::uint64_t i = 0; i < out.size(); ++i) {
                    Complex want = 0.0;
                    if ((i >> 1) == ctrl) {
                        want = on ? v[i & 1][t] : ((i & 1) == t ? 1.0 : 0.0);
                    }
                    err = std::max(err, std::abs(out[i] - want));
                }
            }
        }
        return err;
    };
    const double cv_err = branch_error(cv_decomposition(0, 1), 1, 2.0 * std::log(1.0 + r2));
    const double ccv_err = branch_error(ccv_decomposition(0, 1, 2), 2, 4.0 * std::log(1.0 + r2));
    const double c1 = std::cosh(2.0 * std::log(1.0 + r2)), c2 = std::cosh(4.0 * std::log(1.0 + r2));
    o.detail << "; cosh values " << c1 << ", " << c2 << "; CV branches err " << cv_err << "; CCV branches err "
             << ccv_err;
    o.pass = worst < 1e-12 && cv_err < 1e-12 && ccv_err < 1e-12 && std::abs(c1 - 3.0) < 1e-12 &&
             std::abs(c2 - 17.0) < 1e-12;
}

// Criterion 2: random (gate, state) pairs keep the indefinite norm.
void metric_preservation(Outcome &o) {
    const GateKind kinds[] = {GateKind::HadamardQ, GateKind::TGate, GateKind::Tau, GateKind::SigmaX,
                              GateKind::SigmaZ, GateKind::ControlledSigmaZ, GateKind::ControlledH, GateKind::V,
                              GateKind::CV, GateKind::CCV, GateKind::OracleFlip};
    const std::size_t pairs = 1000;
    double worst_all = 0.0;
    for (GateKind kind : kinds) {
        double worst = 0.0;
        for (std::size_t trial = 0; trial < pairs; ++trial) {
            CounterRng rng(static_cast<std::uint64_t>(kind) * 1000003 + trial, 0x6d657472);
            const std::size_t n = 3 + rng.below(3);
            std::vector<WireKind> wk(n);
            for (auto &k : wk) {
                k = rng.below(2) ? WireKind::Hybit : WireKind::Qubit;
            }
            std::vector<std::size_t> order(n);
            for (std::size_t i = 0; i < n; ++i) {
                order[i] = i;
            }
            for (std::size_t i = n - 1; i > 0; --i) {
                std::swap(order[i], order[rng.below(i + 1)]);
            }
            const double chi = 0.05 + 2.95 * rng.uniform();
            Gate g;
            const std::size_t t = order[0];
            switch (kind) {
            case GateKind::HadamardQ:
            case GateKind::SigmaX:
                wk[t] = WireKind::Qubit;
                g = Gate::single(kind, t);
                break;
            case GateKind::TGate:
            case GateKind::SigmaZ:
                g = Gate::single(kind, t);
                break;
            case GateKind::Tau:
                wk[t] = WireKind::Hybit;
                g = Gate::single(kind, t);
                break;
            case GateKind::V:
                wk[t] = WireKind::Hybit;
                g = Gate::single(kind, t, chi);
                break;
            case GateKind::ControlledSigmaZ:
                g = Gate::controlled(kind, {order[1]}, t);
                break;
            case GateKind::ControlledH:
                wk[t] = wk[order[1]] = WireKind::Qubit;
                g = Gate::controlled(kind, {order[1]}, t);
                break;
            case GateKind::CV:
                wk[t] = WireKind::Hybit;
                wk[order[1]] = WireKind::Qubit;
                g = Gate::controlled(kind, {order[1]}, t, chi);
                break;
            case GateKind::CCV:
                wk[t] = WireKind::Hybit;
                wk[order[1]] = wk[order[2]] = WireKind::Qubit;
                g = Gate::controlled(kind, {order[1], order[2]}, t, chi);
                break;
            case GateKind::OracleFlip: {
                wk[order[0]] = wk[order[1]] = wk[order[2]] = WireKind::Qubit;
                const std::uint64_t table = rng.next();
                g = Gate::oracle(make_predicate(2, [table](std::uint64_t x) { return (table >> x) & 1U; }, "table"),
                                 {order[1], order[2]}, order[0]);
                break;
            }
            }
            std::vector<Wire> wires;
            for (std::size_t i = 0; i < n; ++i) {
                wires.push_back({"w" + std::to_string(i), wk[i], WireRole::Plain});
            }
            const WireLayout l(wires);
            const auto v = testing::random_vector(rng.next(), l.dimension());
            LorentzState s(l, v);
            apply(s, g);
            const double before = testing::dense_indefinite_norm(l, v);
            const double after = testing::dense_indefinite_norm(l, testing::true_amplitudes(s));
            worst = std::max(worst, rel_err(after, before));
        }
        o.detail << gate_kind_name(kind) << " " << worst << "; ";
        worst_all = std::max(worst_all, worst);
    }
    o.detail << "worst relative drift " << worst_all << " over " << pairs << " pairs per kind";
    o.pass = worst_all <= 1e-9;
}

// Observable MIS probability as a direct sum over the census.
double direct_mis_probability(const std::vector<std::uint64_t> &by_size, std::size_t n, std::size_t r, double chi) {
    double z = std::ldexp(1.0, static_cast<int>(n));
    std::size_t top = 0;
    for (std::size_t m = 0; m < by_size.size(); ++m) {
        const double c = std::cosh(static_cast<double>(m * r) * chi);
        z += static_cast<double>(by_size[m]) * (c * c - 1.0);
        top = by_size[m] > 0 ? m : top;
    }
    const double c = std::cosh(static_cast<double>(top * r) * chi);
    return static_cast<double>(by_size[top]) * c * c / z;
}

// Criterion 3.
void mis_reproduction(Outcome &o) {
    std::size_t graphs = 0, runs = 0, argmax_ok = 0, prob_ok = 0;
    double worst_sim = 0.0, worst_closed = 0.0, min_p = 1.0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Graph &g : testing::nonisomorphic_graphs(n)) {
            ++graphs;
            const auto by_size = testing::count_is_by_size(g);
            for (std::size_t r = 0; r <= 6; ++r) {
                const MisReport rep = run_mis(g, r);
                const double want = direct_mis_probability(by_size, n, r, kChiCcv);
                worst_sim = std::max(worst_sim, rel_err(rep.probability_simulated, want));
                worst_closed = std::max(worst_closed, rel_err(rep.probability_closed_form, want));
                ++runs;
            }
            const MisReport def = run_mis(g);
            const std::uint64_t best = from_bits(def.most_probable);
            std::size_t top = by_size.size() - 1;
            while (by_size[top] == 0) {
                --top;
            }
            const bool is_max =
                is_independent_set(g, best) && static_cast<std::size_t>(std::popcount(best)) == top;
            argmax_ok += is_max ? 1 : 0;
            prob_ok += def.probability_simulated > 0.99 ? 1 : 0;
            min_p = std::min(min_p, def.probability_simulated);
        }
    }
    o.detail << graphs << " graphs, " << runs << " runs; worst rel err sim " << worst_sim << ", closed form "
             << worst_closed << "; default r: P > 0.99 on " << prob_ok << "/" << graphs << " (min " << min_p
             << "), argmax is a maximum set on " << argmax_ok << "/" << graphs;
    o.pass = graphs == 208 && worst_sim <= 1e-9 && worst_closed <= 1e-9 && prob_ok == graphs && argmax_ok == graphs;
}

// Branch probability from a qubit-only dense run with the hyperbolic factors
// applied analytically: the hybit carries V(m r chi + o r' chi) from |0).
double analytic_branch_probability(const PredicatePtr &f, double eta, std::size_t r, std::size_t rp, double chi) {
    const std::size_t n = f->width();
    std::vector<Wire> wires;
    for (std::size_t i = 0; i < n; ++i) {
        wires.push_back({"x" + std::to_string(i + 1), WireKind::Qubit, WireRole::Work});
    }
    wires.push_back({"o", WireKind::Qubit, WireRole::Oracle});
    wires.push_back({"a", WireKind::Qubit, WireRole::Auxiliary});
    const WireLayout l(wires);
    Circuit c{l};
    std::vector<std::size_t> work(n);
    for (std::size_t i = 0; i < n; ++i) {
        work[i] = i;
        c.add(Gate::single(GateKind::HadamardQ, i));
    }
    c.add(Gate::oracle(f, work, n));
    for (std::size_t i = 0; i < n; ++i) {
        c.add(Gate::single(GateKind::HadamardQ, i));
        c.add(Gate::single(GateKind::SigmaX, i));
    }
    c.add(Gate::controlled(GateKind::ControlledH, {n + 1}, n));
    std::vector<Complex> v(l.dimension());
    const double alpha = 1.0 / std::sqrt(1.0 + eta * eta);
    v[0] = alpha;
    v[1] = alpha * eta;
    const auto out = testing::dense_run(c, v);
    // Log-domain sum of |amp|^2 cosh^2(...) over all basis states.
    std::vector<double> logs;
    std::vector<double> num;
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        const double w = std::norm(out[i]);
        if (w == 0.0) {
            continue;
        }
        const std::uint64_t x = i >> 2;
        const std::uint64_t ob = (i >> 1) & 1U;
        const double arg = static_cast<double>(std::popcount(x) * r) * chi + static_cast<double>(ob * rp) * chi;
        const double lc = arg + std::log1p(std::exp(-2.0 * arg)) - std::numbers::ln2;
        const double lw = std::log(w) + 2.0 * lc;
        logs.push_back(lw);
        if (x + 1 == (std::uint64_t{1} << n) && ob == 1) {
            num.push_back(lw);
        }
    }
    auto lse = [](const std::vector<double> &xs) {
        double m = -INFINITY;
        for (double x : xs) {
            m = std::max(m, x);
        }
        double s = 0.0;
        for (double x : xs) {
            s += std::exp(x - m);
        }
        return m + std::log(s);
    };
    return num.empty() ? 0.0 : std::exp(lse(num) - lse(logs));
}

// Criterion 4.
void majsat_states(Outcome &o) {
    const auto corpus = testing::cnf_corpus(2026, 60, 6);
    double worst_aux = 0.0, worst_pm = 0.0, worst_branch = 0.0, worst_formula = 0.0;
    std::size_t cases = 0;
    for (const CnfFormula &f : corpus) {
        const PredicatePtr p = cnf_predicate(f);
        const std::size_t n = f.n_vars;
        std::uint64_t s = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            s += f.evaluate(x) ? 1 : 0;
        }
        const std::size_t r = default_repetitions(n, kChiCv);
        const double N = std::ldexp(1.0, static_cast<int>(n));
        for (double eta : eta_grid(n)) {
            const MajsatInstance inst = majsat_circuit(f, eta, r, r);
            const MajsatObservation obs = observe_majsat(inst, execute(inst.circuit, inst.initial));
            const double a = static_cast<double>(s), b = eta * (N - 2.0 * a) / std::numbers::sqrt2;
            const double nrm = std::hypot(a, b);
            worst_aux = std::max({worst_aux, std::abs(obs.aux_state[0] - a / nrm), std::abs(obs.aux_state[1] - b / nrm)});
            const double pm = 0.5 * (a - b) * (a - b) / (a * a + b * b);
            worst_pm = std::max({worst_pm, std::abs(obs.aux_p_minus - pm),
                                 std::abs(majsat_exact_pminus(s, n, eta) - pm)});
            const double want = analytic_branch_probability(p, eta, r, r, kChiCv);
            worst_branch = std::max(worst_branch, rel_err(obs.branch_probability, want));
            worst_formula = std::max(worst_formula, rel_err(majsat_branch_probability(*p, eta, r, r), want));
            ++cases;
        }
    }
    o.detail << corpus.size() << " formulas, " << cases << " (formula, eta) cases; aux state err " << worst_aux
             << "; P- err " << worst_pm << "; branch rel err simulated " << worst_branch << ", closed form "
             << worst_formula;
    o.pass = worst_aux <= 1e-6 && worst_pm <= 1e-9 && worst_branch <= 1e-9 && worst_formula <= 1e-9;
}

// Criterion 5.
void eta_window_check(Outcome &o) {
    const double dp = std::numbers::sqrt2 / 4.0;
    std::size_t inside = 0, violations = 0, empty = 0, pairs = 0;
    double min_margin = INFINITY;
    for (std::size_t n = 1; n <= 10; ++n) {
        const double N = std::ldexp(1.0, static_cast<int>(n));
        for (std::uint64_t s = (std::uint64_t{1} << (n - 1)) + 1; s <= (std::uint64_t{1} << n); ++s) {
            ++pairs;
            const auto [lo, hi] = eta_window(dp, s, n);
            std::size_t here = 0;
            for (double eta : eta_grid(n)) {
                if (eta < lo || eta > hi) {
                    continue;
                }
                ++here;
                const double a = static_cast<double>(s), b = eta * (N - 2.0 * a) / std::numbers::sqrt2;
                const double pm = 0.5 * (a - b) * (a - b) / (a * a + b * b);
                min_margin = std::min(min_margin, pm - (0.5 + dp));
                violations += pm < 0.5 + dp ? 1 : 0;
            }
            inside += here;
            empty += here == 0 ? 1 : 0;
        }
    }
    o.detail << pairs << " (n, s) pairs; " << inside << " grid points inside windows; " << violations
             << " below 1/2 + delta_p; min margin " << min_margin << "; pairs with no grid point " << empty;
    o.pass = violations == 0 && inside > 0;
}

// Criterion 6.
void majsat_decisions(Outcome &o) {
    const auto corpus = testing::cnf_corpus(6006, 100, 6);
    std::size_t exact_ok = 0, mc_ok = 0, majorities = 0;
    // Expected Monte Carlo errors from the exact per-set success probabilities.
    double expected_misses = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const CnfFormula &f = corpus[i];
        std::uint64_t s = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n_vars); ++x) {
            s += f.evaluate(x) ? 1 : 0;
        }
        const bool truth = 2 * s > (std::uint64_t{1} << f.n_vars);
        majorities += truth ? 1 : 0;
        MajsatConfig cfg;
        const MajsatVerdict exact = majsat_decide(f, cfg);
        exact_ok += exact.accepted == truth ? 1 : 0;
        double none = 1.0;
        for (const EtaResult &e : exact.per_eta) {
            none *= 1.0 - e.p_all;
        }
        expected_misses += truth ? none : 1.0 - none;
        cfg.mode = MajsatMode::MonteCarlo;
        cfg.seed = 1000 + i;
        const bool mc = majsat_decide(f, cfg).accepted;
        mc_ok += mc == truth ? 1 : 0;
        if (mc != truth) {
            o.detail << "[MC miss: formula " << i << ", n " << f.n_vars << ", s " << s << "] ";
        }
    }
    o.detail << majorities << "/100 majority instances; exact correct " << exact_ok << "/100; Monte Carlo correct "
             << mc_ok << "/100 (expected misses at these settings " << expected_misses << ")";
    o.pass = exact_ok == 100 && mc_ok >= 99;
}

// Criterion 7.
void kis_counts(Outcome &o) {
    std::size_t graphs = 0, checks = 0, wrong = 0, anchors_bad = 0, maxk_bad = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Graph &g : testing::nonisomorphic_graphs(n)) {
            ++graphs;
            const auto want = testing::count_is_by_size(g);
            const MaxKisReport rep = max_k_is(g);
            std::size_t best = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                const std::uint64_t w = k < want.size() ? want[k] : 0;
                ++checks;
                wrong += rep.counts[k] == w ? 0 : 1;
                if (w > (best < want.size() ? want[best] : 0)) {
                    best = k;
                }
            }
            anchors_bad += (rep.counts[0] == 1 && rep.counts[1] == n) ? 0 : 1;
            maxk_bad += rep.max_k == best ? 0 : 1;
        }
    }
    o.detail << graphs << " graphs, " << checks << " (graph, k) counts; mismatches " << wrong << "; anchor failures "
             << anchors_bad << "; MAX-k-IS mismatches " << maxk_bad;
    o.pass = graphs == 208 && wrong == 0 && anchors_bad == 0 && maxk_bad == 0;
}

// Criterion 8.
void postselection(Outcome &o) {
    double worst = 1.0, worst_uncond = 1.0;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int level = 0; level <= static_cast<int>(n); ++level) {
            for (std::size_t variant = 0; variant < 3; ++variant) {
                CounterRng rng(n * 100 + static_cast<std::size_t>(level) * 10 + variant, 0x706f7374);
                std::vector<bool> yes(dim, false);
                const std::size_t count = variant == 0 ? 1 : 1 + rng.below(std::max<std::size_t>(dim / 2, 1));
                for (std::size_t k = 0; k < count; ++k) {
                    yes[rng.below(dim)] = true;
                }
                const double scale = std::ldexp(1.0, -level);
                std::vector<Complex> coeffs(dim);
                for (std::size_t x = 0; x < dim; ++x) {
                    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
                    const double mag = 0.5 + rng.uniform();
                    coeffs[x] = (yes[x] ? scale : 1.0) * mag * phase;
                }
                const PredicatePtr p =
                    make_predicate(n, [yes](std::uint64_t x) { return static_cast<bool>(yes[x]); }, "yes");
                const PostselectResult res = postselect(postselect_input(n, coeffs), p);
                // Target: the yes projection of the input with the oracle qubit set.
                Complex ip = 0.0;
                double nt = 0.0, np = 0.0;
                const WireLayout &l = res.post_state.layout();
                for (std::uint64_t i = 0; i < l.dimension(); ++i) {
                    const std::uint64_t x = (i >> 1) & (dim - 1);
                    const bool on_branch = (i & l.mask(0)) && !(i & l.mask(n + 1));
                    const Complex t = on_branch && yes[x] ? coeffs[x] : Complex(0.0);
                    const Complex a = res.post_state.amplitude(i);
                    ip += std::conj(t) * a;
                    nt += std::norm(t);
                    np += std::norm(a);
                }
                worst = std::min(worst, std::norm(ip) / (nt * np));
                worst_uncond = std::min(worst_uncond, res.unconditioned_fidelity);
                ++cases;
            }
        }
    }
    o.detail << cases << " states, n = 1..8, yes/no ratio down to 2^-n; worst fidelity on the oracle = 1 branch "
             << worst << " (1 - F = " << 1.0 - worst << "); worst fidelity after the hybit projection alone "
             << worst_uncond;
    o.pass = worst >= 1.0 - 1e-6;
}

// Criterion 9.
void super_postselection(Outcome &o) {
    const SuperPostselectResult a = super_postselect_demo({"1000", "0110"}, 4, 4.0 * std::log(1.0 + std::sqrt(2.0)));
    const double ratio = std::abs(a.final_state.amplitude(a.final_state.layout().index_of_bits("011010"))) /
                         std::abs(a.final_state.amplitude(a.final_state.layout().index_of_bits("100010")));
    const SuperPostselectResult b = super_postselect_demo({"1110", "0110"}, 4);
    o.detail << "{1000, 0110}: selected " << (a.selected.empty() ? "-" : a.selected.front()) << ", ratio " << ratio
             << " (reported " << std::exp(a.log_ratio) << "); {1110, 0110}: selected "
             << (b.selected.empty() ? "-" : b.selected.front());
    o.pass = a.selected == std::vector<std::string>{"0110"} && ratio > 1e6 && std::exp(a.log_ratio) > 1e6 &&
             b.selected == std::vector<std::string>{"1110"};
}

// Criterion 10.
void path_sums(Outcome &o) {
    double worst_amp = 0.0, worst_yes = 0.0, worst_total = 0.0;
    std::size_t circuits = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CounterRng rng(seed, 0x61636370);
        const std::size_t wires = 2 + rng.below(kPathSumMaxWires - 1);
        const std::size_t gates = 1 + rng.below(kPathSumMaxGates);
        const Circuit c = random_circuit(seed, wires, gates);
        const WireLayout &l = c.layout();
        const std::uint64_t x = rng.below(l.dimension()) & ~l.hybit_mask();
        const auto sim = testing::dense_run(c, testing::true_amplitudes(LorentzState::basis(l, x)));
        const auto paths = enumerate_paths(c, x);
        const std::size_t yes_wire = default_yes_wire(l);
        double yes = 0.0, total = 0.0;
        for (std::uint64_t y = 0; y < l.dimension(); ++y) {
            const auto it = paths.find(y);
            const double ps = it == paths.end() ? 0.0 : squared_amplitude(it->second);
            const double want = std::norm(sim[y]);
            worst_amp = std::max(worst_amp, std::abs(ps - want) / std::max(1.0, want));
            if (l.is_observable(y)) {
                total += want;
                yes += (y & l.mask(yes_wire)) ? want : 0.0;
            }
        }
        const AcceptAmplitude acc = accept_amplitude(c, x);
        worst_yes = std::max(worst_yes, std::abs(acc.yes - yes) / std::max(1.0, yes));
        worst_total = std::max(worst_total, std::abs(acc.total - total) / std::max(1.0, total));
        ++circuits;
    }

    // Single-solution instances: uniform superposition, then each work qubit
    // drives a hyperbolic rotation; X after the rotation relabels the winner.
    std::size_t instances = 0, recovered = 0;
    for (std::size_t q = 2; q <= 4; ++q) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << q); ++y) {
            const std::size_t zeros = q - static_cast<std::size_t>(std::popcount(y));
            if (2 * q + zeros > kPathSumMaxGates) {
                continue;
            }
            std::vector<Wire> w;
            for (std::size_t i = 0; i < q; ++i) {
                w.push_back({"x" + std::to_string(i), WireKind::Qubit, WireRole::Work});
            }
            w.push_back({"h", WireKind::Hybit, WireRole::Plain});
            Circuit c{WireLayout(w)};
            std::vector<std::size_t> search;
            for (std::size_t i = 0; i < q; ++i) {
                search.push_back(i);
                c.add(Gate::single(GateKind::HadamardQ, i));
                c.add(Gate::controlled(GateKind::CV, {i}, q, kChiCcv));
                if (!((y >> (q - 1 - i)) & 1U)) {
                    c.add(Gate::single(GateKind::SigmaX, i));
                }
            }
            ++instances;
            const BranchingResult b = branching_search(path_sum_weight(c, 0, search), q);
            recovered += b.output == to_bits(y, q) ? 1 : 0;
        }
    }
    o.detail << circuits << " circuits; worst |A|^2 err " << worst_amp << ", c_yes^2 err " << worst_yes
             << ", total err " << worst_total << "; branching recovered " << recovered << "/" << instances
             << " single-solution instances";
    o.pass = circuits == 50 && worst_amp <= 1e-9 && worst_yes <= 1e-9 && worst_total <= 1e-9 &&
             recovered == instances && instances > 0;
}

std::string read_bytes(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string quote(const std::string &s) { return "'" + s + "'"; }

// Criterion 11.
void reproducibility(Outcome &o, const std::string &cli, const std::string &data) {
    if (cli.empty()) {
        o.pass = false;
        o.detail << "no CLI path given";
        return;
    }
    const fs::path dir = fs::temp_directory_path() / ("lqc_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::string> invocations = {
        "run " + quote(data + "/oracle_demo.json") + " --seed 7 --shots 5000",
        "run " + quote(data + "/cv_composite.json") + " --seed 8 --shots 300 --format csv",
        "mis " + quote(data + "/path3.dimacs") + " --seed 1 --subset 101",
        "majsat " + quote(data + "/single_x1.cnf") + " --seed 11 --mode montecarlo",
        "maxkis " + quote(data + "/path3.dimacs") + " --seed 2",
        "pathsum --seed 31",
        "postselect --seed 4 --n 4",
        "superpostselect --seed 5 --r 4",
    };
    std::size_t same = 0;
    for (std::size_t i = 0; i < invocations.size(); ++i) {
        std::string bytes[2];
        bool ok = true;
        for (int k = 0; k < 2; ++k) {
            const fs::path out = dir / ("r" + std::to_string(i) + "_" + std::to_string(k));
            const std::string cmd = quote(cli) + " " + invocations[i] + " --out " + quote(out.string());
            ok = ok && std::system(cmd.c_str()) == 0;
            bytes[k] = read_bytes(out);
        }
        if (ok && !bytes[0].empty() && bytes[0] == bytes[1]) {
            ++same;
        } else {
            o.detail << "[differs or failed: " << invocations[i] << "] ";
        }
    }
    fs::remove_all(dir);
    o.detail << same << "/" << invocations.size() << " invocations byte-identical across two runs";
    o.pass = same == invocations.size();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"lqcsim acceptance checks"};
    std::string cli, data;
    std::vector<int> only;
    app.add_option("--cli", cli, "Path to the lqc executable");
    app.add_option("--data", data, "Directory with the test data files");
    app.add_option("--only", only, "Run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, Check>> checks = {
        {"gate algebra", gate_algebra},
        {"metric preservation", metric_preservation},
        {"MIS probability", mis_reproduction},
        {"MAJSAT auxiliary state and branch probability", majsat_states},
        {"eta window", eta_window_check},
        {"MAJSAT decision", majsat_decisions},
        {"#k-IS and MAX-k-IS", kis_counts},
        {"postselection", postselection},
        {"super-postselection", super_postselection},
        {"path-sum oracle", path_sums},
        {"reproducibility", [&](Outcome &o) { reproducibility(o, cli, data); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
            continue;
        }
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            checks[i].second(o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << checks[i].first << " (" << std::fixed
                  << std::setprecision(2) << secs << " s): " << std::defaultfloat << std::setprecision(6)
                  << o.detail.str() << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
