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

#include "lqc/commands.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "lqc/algorithms.hpp"
#include "lqc/error.hpp"
#include "lqc/oracles.hpp"
#include "lqc/pathsum.hpp"

namespace lqc {

namespace {

const char *const kRepetitionRule = "ceil(n ln 2 / chi) + 2";

class Options {
  public:
    Options(const Json &j, std::string_view command, std::initializer_list<const char *> allowed) : j_(j) {
        if (j_.is_null()) {
            j_ = Json::object();
        }
        require(j_.is_object(), "options must be a JSON object");
        for (const auto &[k, v] : j_.items()) {
            bool ok = false;
            for (const char *a : allowed) {
                ok = ok || k == a;
            }
            require(ok, "option '" + k + "' is not accepted by " + std::string(command));
        }
    }

    [[nodiscard]] bool has(const char *key) const { return j_.contains(key) && !j_[key].is_null(); }

    [[nodiscard]] std::uint64_t u64(const char *key, std::uint64_t fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const Json &v = j_[key];
        require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
                std::string("option '") + key + "' must be a non-negative integer");
        return v.get<std::uint64_t>();
    }

    [[nodiscard]] std::optional<std::size_t> count(const char *key) const {
        if (!has(key)) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(u64(key, 0));
    }

    [[nodiscard]] double real(const char *key, double fallback) const {
        if (!has(key)) {
            return fallback;
        }
        require(j_[key].is_number() && std::isfinite(j_[key].get<double>()),
                std::string("option '") + key + "' must be a finite number");
        return j_[key].get<double>();
    }

    [[nodiscard]] std::string text(const char *key, const std::string &fallback) const {
        if (!has(key)) {
            return fallback;
        }
        require(j_[key].is_string(), std::string("option '") + key + "' must be a string");
        return j_[key].get<std::string>();
    }

    [[nodiscard]] std::vector<std::string> strings(const char *key, std::vector<std::string> fallback) const {
        if (!has(key)) {
            return fallback;
        }
        require(j_[key].is_array(), std::string("option '") + key + "' must be an array of strings");
        std::vector<std::string> out;
        for (const Json &v : j_[key]) {
            require(v.is_string(), std::string("option '") + key + "' must be an array of strings");
            out.push_back(v.get<std::string>());
        }
        return out;
    }

  private:
    Json j_;
};

Json graph_json(const Graph &g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u + 1, v + 1});
    }
    return {{"n", g.vertex_count()}, {"edges", edges}, {"indexing", "1-based"}};
}

Json census_json(const IsCensus &c) {
    Json mis = Json::array();
    for (std::uint64_t m : c.mis_sets) {
        mis.push_back(to_bits(m, c.n));
    }
    return {{"n_is", c.n_is}, {"n_mis", c.n_mis}, {"max_size", c.max_size}, {"by_size", c.by_size}, {"mis", mis}};
}

double relative_difference(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

MajsatConfig majsat_config(const Options &o) {
    MajsatConfig cfg;
    cfg.delta_p = o.real("delta_p", cfg.delta_p);
    cfg.c = o.real("c", cfg.c);
    cfg.r = o.count("r");
    cfg.r_prime = o.count("r_prime");
    cfg.chi = o.real("chi", cfg.chi);
    cfg.seed = o.u64("seed", 0);
    const std::string mode = o.text("mode", "exact");
    if (mode == "exact") {
        cfg.mode = MajsatMode::Exact;
    } else if (mode == "montecarlo") {
        cfg.mode = MajsatMode::MonteCarlo;
    } else {
        fail(ErrorCode::InvalidArgument, "mode must be 'exact' or 'montecarlo', got '" + mode + "'");
    }
    require(cfg.delta_p > 0.0 && cfg.delta_p < 0.5, "delta_p must lie in (0, 1/2)");
    require(cfg.c > 1.0, "c must exceed 1");
    require(cfg.chi > 0.0, "chi must be positive");
    return cfg;
}

Json majsat_config_json(const MajsatConfig &cfg, std::size_t n) {
    Json j = {{"mode", majsat_mode_name(cfg.mode)},
              {"seed", cfg.seed},
              {"delta_p", cfg.delta_p},
              {"c", cfg.c},
              {"chi", cfg.chi},
              {"chi_default", kChiCv},
              {"r", cfg.r.value_or(default_repetitions(n, cfg.chi))},
              {"r_prime", cfg.r_prime.value_or(default_repetitions(n, cfg.chi))},
              {"r_rule", kRepetitionRule}};
    j["r_source"] = cfg.r ? "option" : "default";
    j["r_prime_source"] = cfg.r_prime ? "option" : "default";
    return j;
}

Json cmd_run(std::string_view input, const Options &o) {
    const CircuitDocument doc = parse_circuit_text(input);
    const std::uint64_t seed = o.u64("seed", 0);
    const std::uint64_t shots = o.u64("shots", 0);
    const LorentzState out = execute(doc.circuit, doc.initial);
    const ObservableDistribution dist = out.observable_distribution();
    Json rep = {{"command", "run"},
                {"config", {{"seed", seed}, {"shots", shots}}},
                {"wires", layout_to_json(doc.circuit.layout())},
                {"gate_count", doc.circuit.gates().size()},
                {"distribution", distribution_to_json(dist)},
                {"observable_weight_scaled", dist.observable_weight},
                {"log_scale", out.log_scale()},
                {"indefinite_norm_scaled", out.indefinite_norm_scaled()}};
    if (!doc.circuit.directives().empty()) {
        Json probs = Json::object();
        for (const auto &[k, p] : exact_outcome_probabilities(doc.circuit, out)) {
            probs[k] = p;
        }
        rep["outcome_probabilities"] = probs;
    }
    if (shots > 0) {
        require(!doc.circuit.directives().empty(), "shots need at least one measurement directive");
        Json hist = Json::object();
        for (const auto &[k, c] : sample(doc.circuit, doc.initial, shots, seed)) {
            hist[k] = c;
        }
        rep["histogram"] = hist;
    }
    return rep;
}

Json cmd_mis(std::string_view input, const Options &o) {
    const Graph g = parse_dimacs_graph(input);
    const double chi = o.real("chi", kChiCcv);
    require(chi > 0.0, "chi must be positive");
    const auto r = o.count("r");
    const MisReport m = run_mis(g, r, chi);
    Json top = Json::array();
    const std::size_t shown = std::min<std::size_t>(m.ranking.size(), std::max<std::size_t>(m.census.n_mis, 4));
    for (std::size_t i = 0; i < shown; ++i) {
        top.push_back({{"bits", m.ranking[i].first}, {"probability", m.ranking[i].second}});
    }
    Json rep = {{"command", "mis"},
                {"config",
                 {{"r", m.r},
                  {"r_source", r ? "option" : "default"},
                  {"r_rule", kRepetitionRule},
                  {"chi", chi},
                  {"chi_default", kChiCcv}}},
                {"graph", graph_json(g)},
                {"census", census_json(m.census)},
                {"most_probable", m.most_probable},
                {"most_probable_probability", m.most_probable_probability},
                {"most_probable_is_mis", m.most_probable_is_mis},
                {"probability_simulated", m.probability_simulated},
                {"probability_closed_form", m.probability_closed_form},
                {"relative_difference", relative_difference(m.probability_simulated, m.probability_closed_form)},
                {"top", top}};
    if (o.has("subset")) {
        const MisDecision d = mis_decide(g, o.text("subset", ""), r, chi);
        rep["config"]["subset"] = d.subset;
        rep["decision"] = {{"subset", d.subset},
                           {"subset_is_independent", d.subset_is_independent},
                           {"ratio", d.ratio},
                           {"verdict", d.verdict}};
    }
    return rep;
}

Json cmd_majsat(std::string_view input, const Options &o) {
    const CnfFormula f = parse_dimacs_cnf(input);
    const MajsatConfig cfg = majsat_config(o);
    const PredicatePtr p = cnf_predicate(f);
    const MajsatVerdict v = majsat_decide(p, cfg);
    const std::size_t n = f.n_vars;
    Json rep = {{"command", "majsat"},
                {"config", majsat_config_json(cfg, n)},
                {"formula", {{"n_vars", n}, {"clauses", f.clauses.size()}}},
                {"epsilon", v.epsilon},
                {"n_pp", v.n_pp},
                {"eta_grid_size", v.per_eta.size()},
                {"accepted", v.accepted}};
    std::optional<std::pair<double, double>> window;
    if (v.s_true) {
        const std::uint64_t s = *v.s_true;
        rep["s"] = s;
        rep["majority"] = 2 * s > (std::uint64_t{1} << n);
        if (2 * s > (std::uint64_t{1} << n)) {
            window = eta_window(cfg.delta_p, s, n);
            rep["eta_window"] = {window->first, window->second};
        }
    }
    Json etas = Json::array();
    for (const EtaResult &e : v.per_eta) {
        Json j = {{"exponent", e.exponent},          {"eta", e.eta},        {"p_minus", e.p_minus},
                  {"branch_probability", e.branch_probability}, {"p_set", e.p_set}, {"p_all", e.p_all},
                  {"all_success", e.all_success}};
        if (cfg.mode == MajsatMode::MonteCarlo) {
            j["successes"] = e.successes;
        }
        if (v.s_true) {
            j["p_minus_closed_form"] = majsat_exact_pminus(*v.s_true, n, e.eta);
            j["branch_probability_closed_form"] = majsat_branch_probability(*p, e.eta, v.r, v.r_prime, cfg.chi);
            j["branch_probability_approx"] =
                majsat_branch_probability_approx(*v.s_true, n, e.eta, v.r, v.r_prime, cfg.chi);
        }
        if (window) {
            j["in_window"] = e.eta >= window->first && e.eta <= window->second;
        }
        etas.push_back(j);
    }
    rep["per_eta"] = etas;
    return rep;
}

Json cmd_maxkis(std::string_view input, const Options &o) {
    const Graph g = parse_dimacs_graph(input);
    const MajsatConfig cfg = majsat_config(o);
    const MaxKisReport m = max_k_is(g, cfg);
    const IsCensus c = is_census(g);
    Json per_k = Json::array();
    for (const SharpKisResult &r : m.per_k) {
        Json q = Json::array();
        for (auto [z, acc] : r.queries) {
            q.push_back({{"z", z}, {"accepted", acc}});
        }
        per_k.push_back({{"k", r.k}, {"count", r.count}, {"z_min", r.z_min}, {"queries", q}});
    }
    return {{"command", "maxkis"},
            {"config", majsat_config_json(cfg, g.vertex_count() + 1)},
            {"graph", graph_json(g)},
            {"counts", m.counts},
            {"max_k", m.max_k},
            {"brute_force_counts", c.by_size},
            {"matches_brute_force", m.counts == c.by_size},
            {"per_k", per_k}};
}

Json cmd_pathsum(std::string_view input, const Options &o) {
    const std::uint64_t seed = o.u64("seed", 0);
    Circuit circuit;
    LorentzState initial;
    std::string source = "file";
    if (input.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        CounterRng rng(seed, 1);
        const std::size_t wires = 2 + rng.below(kPathSumMaxWires - 1);
        const std::size_t gates = 1 + rng.below(kPathSumMaxGates);
        circuit = random_circuit(seed, wires, gates);
        initial = LorentzState::basis(circuit.layout(), std::uint64_t{0});
        source = "random";
    } else {
        CircuitDocument doc = parse_circuit_text(input);
        circuit = std::move(doc.circuit);
        initial = std::move(doc.initial);
    }
    const WireLayout &layout = circuit.layout();
    std::uint64_t x = 0;
    for (std::uint64_t i = 0; i < layout.dimension(); ++i) {
        if (initial.amplitude(i) != Complex(0.0)) {
            x = i;
            break;
        }
    }
    const LorentzState out = execute(circuit, initial);
    const double scale = std::exp(2.0 * out.log_scale());
    const auto paths = enumerate_paths(circuit, x);
    Json amps = Json::object();
    double max_diff = 0.0;
    for (std::uint64_t y = 0; y < layout.dimension(); ++y) {
        if (!layout.is_observable(y)) {
            continue;
        }
        const auto it = paths.find(y);
        const double ps = it == paths.end() ? 0.0 : squared_amplitude(it->second);
        const double sim = std::norm(out.amplitude(y)) * scale;
        max_diff = std::max(max_diff, std::abs(ps - sim));
        if (ps != 0.0 || sim != 0.0) {
            amps[layout.qubit_bits(y)] = {{"path_sum", ps}, {"simulated", sim}};
        }
    }
    Json rep = {{"command", "pathsum"},
                {"config", {{"seed", seed}, {"source", source}, {"max_gates", kPathSumMaxGates},
                            {"max_wires", kPathSumMaxWires}}},
                {"wires", layout_to_json(layout)},
                {"gate_count", circuit.gates().size()},
                {"input", layout.qubit_bits(x)},
                {"squared_amplitudes", amps},
                {"max_abs_diff", max_diff}};

    std::optional<std::size_t> yes;
    if (o.has("yes")) {
        const std::string label = o.text("yes", "");
        yes = layout.find(label);
        require(yes.has_value(), "unknown yes wire '" + label + "'");
    }
    const AcceptAmplitude acc = accept_amplitude(circuit, x, yes);
    double sim_yes = 0.0;
    const auto qw = layout.qubit_wires();
    const std::size_t pos = static_cast<std::size_t>(std::find(qw.begin(), qw.end(), acc.yes_wire) - qw.begin());
    for (const auto &[bits, p] : out.observable_distribution().entries) {
        sim_yes += bits[pos] == '1' ? p : 0.0;
    }
    rep["accept"] = {{"yes_wire", layout[acc.yes_wire].label},
                     {"c_yes_squared", acc.yes},
                     {"total", acc.total},
                     {"ratio", acc.ratio},
                     {"simulated_ratio", sim_yes},
                     {"total_simulated", out.observable_weight() * scale}};
    try {
        const BranchingResult b = branching_search(path_sum_weight(circuit, x, qw), qw.size());
        rep["branching"] = {{"output", b.output}, {"threshold", b.threshold}};
    } catch (const Error &e) {
        if (e.code() != ErrorCode::AlgorithmFailure) {
            throw;
        }
        rep["branching"] = {{"error", e.what()}};
    }
    return rep;
}

Json cmd_postselect(const Options &o) {
    const std::size_t n = o.count("n").value_or(4);
    require(n >= 1 && n + 2 <= kMaxWires, "n must lie in 1.." + std::to_string(kMaxWires - 2));
    const std::vector<std::string> yes_bits = o.strings("yes", {std::string(n, '1')});
    std::set<std::uint64_t> yes;
    for (const std::string &b : yes_bits) {
        require(b.size() == n, "yes term '" + b + "' must have " + std::to_string(n) + " bits");
        yes.insert(from_bits(b));
    }
    const double suppress = o.real("suppress", std::ldexp(1.0, -static_cast<int>(n)));
    require(suppress > 0.0, "suppress must be positive");
    std::vector<Complex> coeffs(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < coeffs.size(); ++x) {
        coeffs[x] = yes.count(x) ? suppress : 1.0;
    }
    const auto p = make_predicate(
        n, [yes](std::uint64_t x) { return yes.count(x) > 0; }, "designated yes terms");
    const PostselectResult res = postselect(postselect_input(n, coeffs), p, o.count("r"));
    Json yes_json = Json::array();
    for (std::uint64_t y : yes) {
        yes_json.push_back(to_bits(y, n));
    }
    return {{"command", "postselect"},
            {"config",
             {{"n", n},
              {"yes", yes_json},
              {"suppress", suppress},
              {"r", res.r},
              {"r_source", o.has("r") ? "option" : "default"},
              {"r_rule", kRepetitionRule},
              {"chi", kChiCv}}},
            {"success_probability", res.success_probability},
            {"fidelity", res.fidelity},
            {"unconditioned_fidelity", res.unconditioned_fidelity},
            {"post_state", distribution_to_json(res.post_state.observable_distribution())}};
}

Json cmd_superpostselect(const Options &o) {
    const std::vector<std::string> terms = o.strings("terms", {"1000", "0110"});
    const double chi = o.real("chi", kChiCcv);
    require(chi > 0.0, "chi must be positive");
    const SuperPostselectResult res = super_postselect_demo(terms, o.count("r"), chi);
    Json tj = Json::array();
    for (const auto &t : res.terms) {
        tj.push_back({{"bits", t.bits}, {"ones", t.ones}, {"log_magnitude", t.log_magnitude},
                      {"probability", t.probability}});
    }
    return {{"command", "superpostselect"},
            {"config",
             {{"terms", terms},
              {"r", res.r},
              {"r_source", o.has("r") ? "option" : "default"},
              {"r_rule", kRepetitionRule},
              {"chi", chi},
              {"chi_default", kChiCcv}}},
            {"terms", tj},
            {"selected", res.selected},
            {"tie", res.selected.size() > 1},
            {"log10_ratio", res.log_ratio / std::numbers::ln10},
            {"ratio", std::exp(res.log_ratio)}};
}

void require_no_input(std::string_view name, std::string_view input) {
    require(input.find_first_not_of(" \t\r\n") == std::string_view::npos,
            std::string(name) + " takes no input file");
}

const std::vector<std::string> &command_names_impl() {
    static const std::vector<std::string> names{"run",    "mis",      "majsat",    "maxkis",
                                                "pathsum", "postselect", "superpostselect"};
    return names;
}

Json dispatch(std::string_view name, std::string_view input, const Json &options) {
    if (name == "run") {
        return cmd_run(input, Options(options, name, {"seed", "shots"}));
    }
    if (name == "mis") {
        return cmd_mis(input, Options(options, name, {"r", "chi", "subset", "seed"}));
    }
    if (name == "majsat") {
        return cmd_majsat(input, Options(options, name, {"seed", "mode", "r", "r_prime", "chi", "delta_p", "c"}));
    }
    if (name == "maxkis") {
        return cmd_maxkis(input, Options(options, name, {"seed", "mode", "r", "r_prime", "chi", "delta_p", "c"}));
    }
    if (name == "pathsum") {
        return cmd_pathsum(input, Options(options, name, {"seed", "yes"}));
    }
    if (name == "postselect") {
        require_no_input(name, input);
        return cmd_postselect(Options(options, name, {"n", "yes", "suppress", "r", "seed"}));
    }
    if (name == "superpostselect") {
        require_no_input(name, input);
        return cmd_superpostselect(Options(options, name, {"terms", "r", "chi", "seed"}));
    }
    fail(ErrorCode::InvalidArgument, "unknown command '" + std::string(name) + "'");
}

} // namespace

const std::vector<std::string> &command_names() { return command_names_impl(); }

Json run_command(std::string_view name, std::string_view input, const Json &options) {
    Json rep = dispatch(name, input, options);
    if (!rep["config"].contains("seed")) {
        rep["config"]["seed"] = options.is_object() && options.contains("seed") ? options["seed"] : Json(0);
    }
    return rep;
}

std::string render_report(const Json &report, std::string_view format) {
    if (format == "json") {
        return report.dump(2) + "\n";
    }
    require(format == "csv", "format must be 'json' or 'csv'");
    const char *table = report.contains("histogram") ? "histogram" : "distribution";
    require(report.contains(table), "csv output needs a histogram or distribution table");
    std::ostringstream out;
    out << "outcome," << (std::string_view(table) == "histogram" ? "count" : "probability") << "\n";
    for (const auto &[k, v] : report[table].items()) {
        out << k << "," << v.dump() << "\n";
    }
    return out.str();
}

} // namespace lqc
