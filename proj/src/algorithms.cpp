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

#include "lqc/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "lqc/error.hpp"

namespace lqc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double> &logs) {
    double hi = kNegInf;
    for (double v : logs) {
        hi = std::max(hi, v);
    }
    if (hi == kNegInf) {
        return kNegInf;
    }
    double acc = 0.0;
    for (double v : logs) {
        acc += std::exp(v - hi);
    }
    return hi + std::log(acc);
}

double safe_log(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

std::vector<Wire> work_wires(std::size_t n) {
    std::vector<Wire> wires;
    for (std::size_t i = 1; i <= n; ++i) {
        wires.push_back({"x" + std::to_string(i), WireKind::Qubit, WireRole::Work});
    }
    return wires;
}

std::vector<std::size_t> iota_wires(std::size_t first, std::size_t count) {
    std::vector<std::size_t> w(count);
    for (std::size_t i = 0; i < count; ++i) {
        w[i] = first + i;
    }
    return w;
}

void check_enumerable(std::size_t width, const char *what) {
    if (width > kMaxEnumerationWidth) {
        fail(ErrorCode::SizeLimit, std::string(what) + ": width " + std::to_string(width) + " exceeds the limit of " +
                                       std::to_string(kMaxEnumerationWidth));
    }
}

void check_wires(std::size_t total, const char *what) {
    if (total > kMaxWires) {
        fail(ErrorCode::SizeLimit, std::string(what) + " needs " + std::to_string(total) + " wires; the limit is " +
                                       std::to_string(kMaxWires));
    }
}

} // namespace

std::size_t default_repetitions(std::size_t n, double chi) {
    require(chi > 0.0, "chi must be positive");
    const double raw = static_cast<double>(n) * std::numbers::ln2 / chi;
    return static_cast<std::size_t>(std::ceil(raw - 1e-12)) + 2;
}

double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

std::vector<Gate> q_operation(const std::vector<std::size_t> &work, std::size_t oracle_wire, std::size_t hybit_wire,
                              std::size_t r, double chi) {
    std::vector<Gate> gates;
    gates.reserve(r * work.size());
    for (std::size_t rep = 0; rep < r; ++rep) {
        for (std::size_t w : work) {
            gates.push_back(Gate::controlled(GateKind::CCV, {oracle_wire, w}, hybit_wire, chi));
        }
    }
    return gates;
}

IsCensus is_census(const Graph &g) {
    check_enumerable(g.vertex_count(), "independent set census");
    IsCensus c;
    c.n = g.vertex_count();
    c.by_size.assign(c.n + 1, 0);
    const std::uint64_t end = std::uint64_t{1} << c.n;
    for (std::uint64_t x = 0; x < end; ++x) {
        if (!is_independent_set(g, x)) {
            continue;
        }
        const auto m = static_cast<std::size_t>(std::popcount(x));
        ++c.n_is;
        ++c.by_size[m];
        if (m > c.max_size) {
            c.max_size = m;
            c.mis_sets.clear();
        }
        if (m == c.max_size) {
            c.mis_sets.push_back(x);
        }
    }
    c.n_mis = c.mis_sets.size();
    return c;
}

Circuit mis_circuit(const Graph &g, std::size_t r, double chi) {
    const std::size_t n = g.vertex_count();
    require(n >= 1, "graph has no vertices");
    check_wires(n + 2, "MIS circuit");
    std::vector<Wire> wires = work_wires(n);
    wires.push_back({"o", WireKind::Qubit, WireRole::Oracle});
    wires.push_back({"h", WireKind::Hybit, WireRole::Plain});
    Circuit c{WireLayout(std::move(wires))};
    const auto work = iota_wires(0, n);
    for (std::size_t w : work) {
        c.add(Gate::single(GateKind::HadamardQ, w));
    }
    c.add(oracle_gate(independent_set_predicate(g), work, n));
    c.add(q_operation(work, n, n + 1, r, chi));
    c.measure({n, n + 1});
    c.measure(work);
    return c;
}

double mis_closed_form_probability(const IsCensus &census, std::size_t r, double chi) {
    const double N = std::ldexp(1.0, static_cast<int>(census.n));
    const double rc = static_cast<double>(r) * chi;
    std::vector<double> den;
    den.push_back(safe_log(N - static_cast<double>(census.n_is)));
    for (std::size_t m = 0; m < census.by_size.size(); ++m) {
        if (census.by_size[m] > 0) {
            den.push_back(std::log(static_cast<double>(census.by_size[m])) +
                          2.0 * log_cosh(static_cast<double>(m) * rc));
        }
    }
    const double num = std::log(static_cast<double>(census.n_mis)) +
                       2.0 * log_cosh(static_cast<double>(census.max_size) * rc);
    return std::exp(num - log_sum_exp(den));
}

MisReport run_mis(const Graph &g, std::optional<std::size_t> r, double chi) {
    const std::size_t n = g.vertex_count();
    MisReport rep;
    rep.graph = g;
    rep.chi = chi;
    rep.r = r.value_or(default_repetitions(n, chi));
    rep.census = is_census(g);
    const Circuit c = mis_circuit(g, rep.r, chi);
    const LorentzState out = execute(c, LorentzState::basis(c.layout(), std::uint64_t{0}));
    const ObservableDistribution dist = out.observable_distribution();

    std::map<std::string, double> marginal;
    for (const auto &[bits, p] : dist.entries) {
        marginal[bits.substr(0, n)] += p;
    }
    std::set<std::string> mis;
    for (std::uint64_t m : rep.census.mis_sets) {
        mis.insert(to_bits(m, n));
    }
    for (const auto &[bits, p] : marginal) {
        if (mis.count(bits)) {
            rep.probability_simulated += p;
        }
        rep.ranking.emplace_back(bits, p);
    }
    std::stable_sort(rep.ranking.begin(), rep.ranking.end(),
                     [](const auto &a, const auto &b) { return a.second > b.second; });

    double best = 0.0;
    for (const auto &[bits, p] : marginal) {
        best = std::max(best, p);
    }
    // Equal-weight maxima differ only by rounding; report the first in bitstring order.
    for (const auto &[bits, p] : marginal) {
        if (p >= best * (1.0 - 1e-9)) {
            rep.most_probable = bits;
            rep.most_probable_probability = p;
            break;
        }
    }
    rep.most_probable_is_mis = mis.count(rep.most_probable) > 0;
    rep.probability_closed_form = mis_closed_form_probability(rep.census, rep.r, chi);
    return rep;
}

MisDecision mis_decide(const Graph &g, std::string_view subset, std::optional<std::size_t> r, double chi) {
    const std::size_t n = g.vertex_count();
    MisDecision d;
    d.subset = std::string(subset);
    d.subset_is_independent = is_independent_set(g, subset);
    check_wires(n + 3, "MIS decision circuit");
    const bool s_ok = d.subset_is_independent;
    const auto size = static_cast<int>(std::popcount(from_bits(subset)));
    auto check = make_predicate(
        n,
        [g, s_ok, size](std::uint64_t x) { return s_ok && std::popcount(x) == size && is_independent_set(g, x); },
        "output matches the size of " + d.subset);

    const Circuit base = mis_circuit(g, r.value_or(default_repetitions(n, chi)), chi);
    std::vector<Wire> wires = base.layout().wires();
    wires.push_back({"y", WireKind::Qubit, WireRole::Auxiliary});
    Circuit c{WireLayout(std::move(wires))};
    c.add(base.gates());
    c.add(oracle_gate(check, iota_wires(0, n), n + 2));
    const LorentzState out = execute(c, LorentzState::basis(c.layout(), std::uint64_t{0}));
    for (const auto &[bits, p] : out.observable_distribution().entries) {
        if (bits.back() == '1') {
            d.ratio += p;
        }
    }
    d.verdict = d.ratio > 2.0 / 3.0 ? "accept" : d.ratio < 1.0 / 3.0 ? "reject" : "inconclusive";
    return d;
}

std::string_view majsat_mode_name(MajsatMode mode) {
    return mode == MajsatMode::Exact ? "exact" : "montecarlo";
}

std::size_t npp_bound(double delta_p, double epsilon) {
    require(delta_p > 0.0 && delta_p < 0.5, "delta_p must lie in (0, 1/2)");
    require(epsilon > 0.0 && epsilon <= 1.0, "epsilon must lie in (0, 1]");
    const double raw = 2.0 * std::log(epsilon) / std::log1p(-4.0 * delta_p * delta_p);
    const double bound = std::ceil(raw - 1e-9 * std::max(1.0, raw));
    return bound <= 0.0 ? 0 : static_cast<std::size_t>(bound);
}

std::vector<double> eta_grid(std::size_t n) {
    std::vector<double> etas;
    for (int i = -static_cast<int>(n); i <= static_cast<int>(n); ++i) {
        etas.push_back(std::ldexp(1.0, i));
    }
    return etas;
}

double majsat_exact_pminus(std::uint64_t s, std::size_t n, double eta) {
    require(n <= 62 && s <= (std::uint64_t{1} << n), "s must lie in [0, 2^n]");
    require(eta > 0.0, "eta must be positive");
    const double sd = static_cast<double>(s);
    const double d = std::ldexp(1.0, static_cast<int>(n)) - 2.0 * sd;
    return 0.5 - std::numbers::sqrt2 * eta * sd * d / (2.0 * sd * sd + eta * eta * d * d);
}

std::pair<double, double> eta_window(double delta_p, std::uint64_t s, std::size_t n) {
    require(delta_p > 0.0 && delta_p < 0.5, "delta_p must lie in (0, 1/2)");
    require(n <= 62 && s <= (std::uint64_t{1} << n), "s must lie in [0, 2^n]");
    if (2 * s <= (std::uint64_t{1} << n)) {
        fail(ErrorCode::InvalidArgument, "window undefined: s must exceed 2^(n-1)");
    }
    const double root = std::sqrt(1.0 - 4.0 * delta_p * delta_p);
    const double sd = static_cast<double>(s);
    const double scale = sd / (std::numbers::sqrt2 * delta_p * (2.0 * sd - std::ldexp(1.0, static_cast<int>(n))));
    return {(1.0 - root) * scale, (1.0 + root) * scale};
}

std::array<double, 2> majsat_aux_target(std::uint64_t s, std::size_t n, double eta) {
    const double a = static_cast<double>(s);
    const double b = eta * (std::ldexp(1.0, static_cast<int>(n)) - 2.0 * a) / std::numbers::sqrt2;
    const double norm = std::hypot(a, b);
    return {a / norm, b / norm};
}

MajsatInstance majsat_circuit(const PredicatePtr &f, double eta, std::size_t r, std::size_t r_prime, double chi) {
    require(f != nullptr, "majsat: missing formula");
    require(eta > 0.0, "eta must be positive");
    const std::size_t n = f->width();
    require(n >= 1, "majsat: formula has no variables");
    check_wires(n + 3, "MAJSAT circuit");
    MajsatInstance inst;
    inst.n = n;
    inst.oracle_wire = n;
    inst.hybit_wire = n + 1;
    inst.aux_wire = n + 2;
    std::vector<Wire> wires = work_wires(n);
    wires.push_back({"o", WireKind::Qubit, WireRole::Oracle});
    wires.push_back({"h", WireKind::Hybit, WireRole::Plain});
    wires.push_back({"a", WireKind::Qubit, WireRole::Auxiliary});
    WireLayout layout(std::move(wires));

    std::vector<Complex> amps(layout.dimension());
    const double alpha = 1.0 / std::sqrt(1.0 + eta * eta);
    amps[0] = alpha;
    amps[layout.mask(inst.aux_wire)] = alpha * eta;
    inst.initial = LorentzState(layout, std::move(amps));

    Circuit c{layout};
    const auto work = iota_wires(0, n);
    for (std::size_t w : work) {
        c.add(Gate::single(GateKind::HadamardQ, w));
    }
    c.add(oracle_gate(f, work, inst.oracle_wire));
    for (std::size_t w : work) {
        c.add(Gate::single(GateKind::HadamardQ, w));
        c.add(Gate::single(GateKind::SigmaX, w));
    }
    for (std::size_t rep = 0; rep < r; ++rep) {
        for (std::size_t w : work) {
            c.add(Gate::controlled(GateKind::CV, {w}, inst.hybit_wire, chi));
        }
    }
    c.add(Gate::controlled(GateKind::ControlledH, {inst.aux_wire}, inst.oracle_wire));
    for (std::size_t rep = 0; rep < r_prime; ++rep) {
        c.add(Gate::controlled(GateKind::CV, {inst.oracle_wire}, inst.hybit_wire, chi));
    }
    c.measure({inst.oracle_wire, inst.hybit_wire});
    c.measure({inst.aux_wire}, MeasurementBasis::XBasis);
    inst.circuit = std::move(c);
    return inst;
}

MajsatInstance majsat_circuit(const CnfFormula &f, double eta, std::size_t r, std::size_t r_prime, double chi) {
    return majsat_circuit(cnf_predicate(f), eta, r, r_prime, chi);
}

MajsatObservation observe_majsat(const MajsatInstance &inst, const LorentzState &final_state) {
    MajsatObservation obs;
    for (const auto &[key, p] : exact_outcome_probabilities(inst.circuit, final_state)) {
        if (key.back() == '-') {
            obs.p_minus += p;
        }
    }
    const WireLayout &layout = final_state.layout();
    std::uint64_t base = layout.mask(inst.oracle_wire);
    for (std::size_t w = 0; w < inst.n; ++w) {
        base |= layout.mask(w);
    }
    const Complex a0 = final_state.amplitude(base);
    const Complex a1 = final_state.amplitude(base | layout.mask(inst.aux_wire));
    const double w = std::norm(a0) + std::norm(a1);
    obs.branch_probability = w / final_state.observable_weight();
    if (w > 0.0) {
        const double nrm = std::sqrt(w);
        obs.aux_state = {a0 / nrm, a1 / nrm};
        obs.aux_p_minus = 0.5 * std::norm(obs.aux_state[0] - obs.aux_state[1]);
    }
    return obs;
}

double majsat_branch_probability(const Predicate &f, double eta, std::size_t r, std::size_t r_prime, double chi) {
    const std::size_t n = f.width();
    check_enumerable(n, "branch probability");
    const std::uint64_t N = std::uint64_t{1} << n;
    // Walsh spectrum of the satisfying indicator; the complement follows from
    // the spectrum of the constant function.
    std::vector<double> spec(N);
    for (std::uint64_t x = 0; x < N; ++x) {
        spec[x] = f(x) ? 1.0 : 0.0;
    }
    for (std::uint64_t len = 1; len < N; len <<= 1) {
        for (std::uint64_t i = 0; i < N; i += 2 * len) {
            for (std::uint64_t j = i; j < i + len; ++j) {
                const double u = spec[j], v = spec[j + len];
                spec[j] = u + v;
                spec[j + len] = u - v;
            }
        }
    }
    const double alpha2 = 1.0 / (1.0 + eta * eta);
    const double beta2 = 1.0 - alpha2;
    const double rc = static_cast<double>(r) * chi;
    const double rpc = static_cast<double>(r_prime) * chi;
    std::vector<double> logs;
    logs.reserve(2 * N);
    double numerator = kNegInf;
    for (std::uint64_t u = 0; u < N; ++u) {
        const double b = spec[u] / static_cast<double>(N);
        const double a = (u == 0 ? 1.0 : 0.0) - b;
        const double m = static_cast<double>(n) - std::popcount(u);
        const double w0 = alpha2 * a * a + 0.5 * beta2 * (a + b) * (a + b);
        const double w1 = alpha2 * b * b + 0.5 * beta2 * (a - b) * (a - b);
        logs.push_back(safe_log(w0) + 2.0 * log_cosh(m * rc));
        logs.push_back(safe_log(w1) + 2.0 * log_cosh(m * rc + rpc));
        if (u == 0) {
            numerator = logs.back();
        }
    }
    return std::exp(numerator - log_sum_exp(logs));
}

double majsat_branch_probability_approx(std::uint64_t s, std::size_t n, double eta, std::size_t r,
                                        std::size_t r_prime, double chi) {
    const double N = std::ldexp(1.0, static_cast<int>(n));
    const double sd = static_cast<double>(s);
    const double alpha2 = 1.0 / (1.0 + eta * eta);
    const double beta2 = 1.0 - alpha2;
    const double lc_work = 2.0 * log_cosh(static_cast<double>(n * r) * chi);
    const double first = std::exp(lc_work - log_sum_exp({std::log(N - 1.0), lc_work}));
    const double lc = 2.0 * log_cosh(static_cast<double>(r_prime) * chi);
    const double yes = alpha2 * sd * sd + 0.5 * beta2 * (N - 2.0 * sd) * (N - 2.0 * sd);
    const double no = alpha2 * (N - sd) * (N - sd) + 0.5 * beta2 * N * N;
    const double second = std::exp(lc + safe_log(yes) - log_sum_exp({lc + safe_log(yes), safe_log(no)}));
    return first * second;
}

double majority_probability(std::size_t trials, double p) {
    require(p >= 0.0 && p <= 1.0, "probability out of range");
    if (p == 0.0) {
        return 0.0;
    }
    if (p == 1.0) {
        return trials > 0 ? 1.0 : 0.0;
    }
    const double t = static_cast<double>(trials);
    std::vector<double> logs;
    for (std::size_t k = trials / 2 + 1; k <= trials; ++k) {
        const double kd = static_cast<double>(k);
        logs.push_back(std::lgamma(t + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(t - kd + 1.0) + kd * std::log(p) +
                       (t - kd) * std::log1p(-p));
    }
    return logs.empty() ? 0.0 : std::min(1.0, std::exp(log_sum_exp(logs)));
}

MajsatVerdict majsat_decide(const PredicatePtr &f, const MajsatConfig &cfg) {
    require(f != nullptr, "majsat: missing formula");
    require(cfg.c > 1.0, "c must exceed 1");
    require(cfg.chi > 0.0, "chi must be positive");
    const std::size_t n = f->width();
    MajsatVerdict v;
    v.n = n;
    v.mode = cfg.mode;
    v.delta_p = cfg.delta_p;
    v.c = cfg.c;
    v.epsilon = std::pow(cfg.c, -static_cast<double>(n));
    v.n_pp = npp_bound(cfg.delta_p, v.epsilon);
    v.chi = cfg.chi;
    v.r = cfg.r.value_or(default_repetitions(n, cfg.chi));
    v.r_prime = cfg.r_prime.value_or(default_repetitions(n, cfg.chi));
    v.seed = cfg.seed;
    if (n <= kMaxEnumerationWidth) {
        v.s_true = count_satisfying(*f);
    }
    const auto etas = eta_grid(n);
    for (std::size_t idx = 0; idx < etas.size(); ++idx) {
        EtaResult e;
        e.exponent = static_cast<int>(idx) - static_cast<int>(n);
        e.eta = etas[idx];
        const MajsatInstance inst = majsat_circuit(f, e.eta, v.r, v.r_prime, cfg.chi);
        const LorentzState out = execute(inst.circuit, inst.initial);
        const MajsatObservation obs = observe_majsat(inst, out);
        e.p_minus = obs.p_minus;
        e.branch_probability = obs.branch_probability;
        e.p_set = majority_probability(v.n_pp, e.p_minus);
        e.p_all = std::pow(e.p_set, static_cast<double>(n));
        if (cfg.mode == MajsatMode::Exact) {
            e.all_success = e.p_all > 0.5;
        } else {
            const auto shots = sample_shots(inst.circuit, inst.initial, n * v.n_pp, derive_seed(cfg.seed, idx));
            for (std::size_t set = 0; set < n; ++set) {
                std::size_t minus = 0;
                for (std::size_t t = 0; t < v.n_pp; ++t) {
                    minus += shots[set * v.n_pp + t].back() == '-' ? 1 : 0;
                }
                e.successes += 2 * minus > v.n_pp ? 1 : 0;
            }
            e.all_success = e.successes == n;
        }
        v.accepted = v.accepted || e.all_success;
        v.per_eta.push_back(e);
    }
    return v;
}

MajsatVerdict majsat_decide(const CnfFormula &f, const MajsatConfig &cfg) {
    return majsat_decide(cnf_predicate(f), cfg);
}

SharpKisResult sharp_k_is(const Graph &g, std::size_t k, const MajsatConfig &cfg) {
    const std::size_t n = g.vertex_count();
    require(n >= 1, "graph has no vertices");
    require(k <= n, "k exceeds the vertex count");
    check_wires(n + 4, "#k-IS circuit");
    SharpKisResult res;
    res.k = k;
    const PredicatePtr fk = k_is_predicate(g, k);
    auto query = [&](std::uint64_t z) {
        const bool acc = majsat_decide(build_F(fk, gz_predicate(z, n)), cfg).accepted;
        res.queries.emplace_back(z, acc);
        return acc;
    };
    const std::uint64_t top = std::uint64_t{1} << n;
    std::uint64_t prefix = 0;
    for (std::size_t b = n; b-- > 0;) {
        const std::uint64_t z = prefix | (std::uint64_t{1} << b);
        if (!query(z)) {
            prefix = z;
        }
    }
    if (prefix + 1 < top) {
        res.count = top - prefix;
    } else {
        // Every z below 2^n rejected: the count is 1 or 0.
        res.count = query(top) ? 1 : 0;
    }
    res.z_min = top - res.count;
    return res;
}

MaxKisReport max_k_is(const Graph &g, const MajsatConfig &cfg) {
    MaxKisReport rep;
    for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
        rep.per_k.push_back(sharp_k_is(g, k, cfg));
        rep.counts.push_back(rep.per_k.back().count);
        if (rep.counts.back() > rep.counts[rep.max_k]) {
            rep.max_k = k;
        }
    }
    return rep;
}

WireLayout postselect_layout(std::size_t n) {
    std::vector<Wire> wires{{"o", WireKind::Qubit, WireRole::Oracle}};
    for (auto &w : work_wires(n)) {
        wires.push_back(std::move(w));
    }
    wires.push_back({"h", WireKind::Hybit, WireRole::Plain});
    return WireLayout(std::move(wires));
}

LorentzState postselect_input(std::size_t n, const std::vector<Complex> &coefficients) {
    check_wires(n + 2, "postselection");
    require(coefficients.size() == (std::size_t{1} << n), "expected 2^n work coefficients");
    WireLayout layout = postselect_layout(n);
    std::vector<Complex> amps(layout.dimension());
    for (std::size_t x = 0; x < coefficients.size(); ++x) {
        amps[x << 1] = coefficients[x];
    }
    return LorentzState(std::move(layout), std::move(amps));
}

namespace {

double overlap(std::span<const Complex> a, std::span<const Complex> b) {
    Complex ip = 0.0;
    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ip += std::conj(a[i]) * b[i];
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    return na > 0.0 && nb > 0.0 ? std::norm(ip) / (na * nb) : 0.0;
}

} // namespace

PostselectResult postselect(const LorentzState &state, const PredicatePtr &p, std::optional<std::size_t> r) {
    require(p != nullptr, "postselect: missing predicate");
    const WireLayout &layout = state.layout();
    require(layout.size() >= 3 && layout.is_qubit(0) && layout.is_hybit(layout.size() - 1) &&
                layout.hybit_count() == 1,
            "postselect: layout must be oracle qubit, work qubits, hybit");
    const std::size_t n = layout.size() - 2;
    require(p->width() == n, "postselect: predicate width " + std::to_string(p->width()) + " does not match " +
                                 std::to_string(n) + " work qubits");
    PostselectResult res;
    res.r = r.value_or(default_repetitions(n, kChiCv));
    Circuit c{layout};
    c.add(oracle_gate(p, iota_wires(1, n), 0));
    for (std::size_t rep = 0; rep < res.r; ++rep) {
        c.add(Gate::controlled(GateKind::CV, {0}, n + 1, kChiCv));
    }
    const LorentzState out = execute(c, state);

    const std::uint64_t o = layout.mask(0), h = layout.mask(n + 1);
    std::vector<Complex> target(layout.dimension()), yes(layout.dimension()), observed(layout.dimension());
    double yes_weight = 0.0;
    for (std::uint64_t i = 0; i < layout.dimension(); ++i) {
        if (i & h) {
            continue;
        }
        observed[i] = out.amplitude(i);
        if (i & o) {
            yes[i] = out.amplitude(i);
            yes_weight += std::norm(yes[i]);
        } else if ((*p)((i >> 1) & ((std::uint64_t{1} << n) - 1))) {
            target[i | o] = state.amplitude(i);
        }
    }
    if (yes_weight == 0.0) {
        fail(ErrorCode::AlgorithmFailure, "postselection failed: empty branch");
    }
    res.success_probability = yes_weight / out.observable_weight();
    res.post_state = LorentzState(layout, yes, out.log_scale());
    res.post_state.rescale();
    res.fidelity = overlap(target, res.post_state.amplitudes());
    res.unconditioned_fidelity = overlap(target, observed);
    return res;
}

SuperPostselectResult super_postselect_demo(const std::vector<std::string> &terms, std::optional<std::size_t> r,
                                            double chi) {
    require(!terms.empty(), "at least one term is required");
    const std::size_t w = terms.front().size();
    require(w >= 1, "terms must be non-empty bitstrings");
    check_wires(w + 2, "super-postselection");
    std::set<std::string> seen;
    for (const std::string &t : terms) {
        require(t.size() == w, "terms must share one width");
        (void)from_bits(t);
        require(seen.insert(t).second, "duplicate term " + t);
    }
    SuperPostselectResult res;
    res.chi = chi;
    res.r = r.value_or(default_repetitions(w, chi));
    std::vector<Wire> wires = work_wires(w);
    wires.push_back({"o", WireKind::Qubit, WireRole::Oracle});
    wires.push_back({"h", WireKind::Hybit, WireRole::Plain});
    WireLayout layout(std::move(wires));
    std::vector<Complex> amps(layout.dimension());
    const double amp = 1.0 / std::sqrt(static_cast<double>(terms.size()));
    for (const std::string &t : terms) {
        amps[layout.index_of_bits(t + "10")] = amp;
    }
    Circuit c{layout};
    c.add(q_operation(iota_wires(0, w), w, w + 1, res.r, chi));
    res.final_state = execute(c, LorentzState(layout, std::move(amps)));
    const ObservableDistribution dist = res.final_state.observable_distribution();

    std::size_t best_ones = 0;
    for (const std::string &t : terms) {
        SuperPostselectTerm term;
        term.bits = t;
        term.ones = static_cast<std::size_t>(std::count(t.begin(), t.end(), '1'));
        term.log_magnitude =
            std::log(std::abs(res.final_state.amplitude(layout.index_of_bits(t + "10")))) + res.final_state.log_scale();
        const auto it = dist.entries.find(t + "1");
        term.probability = it == dist.entries.end() ? 0.0 : it->second;
        best_ones = std::max(best_ones, term.ones);
        res.terms.push_back(term);
    }
    double lead = kNegInf, runner = kNegInf;
    for (const auto &term : res.terms) {
        if (term.ones == best_ones) {
            res.selected.push_back(term.bits);
            lead = std::max(lead, term.log_magnitude);
        } else {
            runner = std::max(runner, term.log_magnitude);
        }
    }
    res.log_ratio = runner == kNegInf ? 0.0 : lead - runner;
    return res;
}

} // namespace lqc
