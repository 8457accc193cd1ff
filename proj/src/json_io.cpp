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

#include "lqc/json_io.hpp"

#include <set>

#include "lqc/error.hpp"
#include "lqc/oracles.hpp"

namespace lqc {

namespace {

[[noreturn]] void field_fail(const std::string &field, const std::string &msg) {
    fail(ErrorCode::Parse, "field '" + field + "': " + msg);
}

const Json &member(const Json &obj, const char *key, const std::string &path) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        field_fail(path.empty() ? key : path + "." + key, "missing required field");
    }
    return *it;
}

void only_keys(const Json &obj, const std::string &path, std::initializer_list<const char *> allowed) {
    for (const auto &[k, v] : obj.items()) {
        bool ok = false;
        for (const char *a : allowed) {
            ok = ok || k == a;
        }
        if (!ok) {
            field_fail(path.empty() ? k : path + "." + k, "unknown field");
        }
    }
}

std::string as_string(const Json &v, const std::string &path) {
    if (!v.is_string()) {
        field_fail(path, "expected a string");
    }
    return v.get<std::string>();
}

std::size_t resolve_wire(const Json &v, const WireLayout &layout, const std::string &path) {
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
        const auto w = v.get<std::size_t>();
        if (w >= layout.size()) {
            field_fail(path, "wire index " + std::to_string(w) + " outside 0.." + std::to_string(layout.size() - 1));
        }
        return w;
    }
    if (v.is_string()) {
        const auto w = layout.find(v.get<std::string>());
        if (!w) {
            field_fail(path, "unknown wire label '" + v.get<std::string>() + "'");
        }
        return *w;
    }
    field_fail(path, "expected a wire index or label");
}

std::vector<std::size_t> wire_list(const Json &v, const WireLayout &layout, const std::string &path) {
    if (!v.is_array()) {
        field_fail(path, "expected an array of wires");
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(resolve_wire(v[i], layout, path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

PredicatePtr parse_oracle(const Json &o, std::size_t width, const std::string &path) {
    if (!o.is_object()) {
        field_fail(path, "expected an oracle object");
    }
    const std::string type = as_string(member(o, "type", path), path + ".type");
    if (type == "constant") {
        only_keys(o, path, {"type", "value"});
        const Json &v = member(o, "value", path);
        if (!v.is_boolean()) {
            field_fail(path + ".value", "expected true or false");
        }
        return constant_predicate(width, v.get<bool>());
    }
    if (type == "table") {
        only_keys(o, path, {"type", "ones"});
        const Json &ones = member(o, "ones", path);
        if (!ones.is_array()) {
            field_fail(path + ".ones", "expected an array of bitstrings");
        }
        std::set<std::uint64_t> set;
        for (std::size_t i = 0; i < ones.size(); ++i) {
            const std::string p = path + ".ones[" + std::to_string(i) + "]";
            const std::string bits = as_string(ones[i], p);
            if (bits.size() != width || bits.find_first_not_of("01") != std::string::npos) {
                field_fail(p, "expected a " + std::to_string(width) + "-bit string");
            }
            set.insert(from_bits(bits));
        }
        return make_predicate(
            width, [set](std::uint64_t x) { return set.count(x) > 0; }, "truth table");
    }
    if (type == "cnf") {
        only_keys(o, path, {"type", "clauses"});
        const Json &cl = member(o, "clauses", path);
        try {
            return cnf_predicate(CnfFormula(width, cl.get<std::vector<std::vector<int>>>()));
        } catch (const Json::exception &) {
            field_fail(path + ".clauses", "expected an array of integer arrays");
        } catch (const Error &e) {
            field_fail(path + ".clauses", e.what());
        }
    }
    if (type == "independent_set") {
        only_keys(o, path, {"type", "edges"});
        const Json &ed = member(o, "edges", path);
        try {
            return independent_set_predicate(Graph(width, ed.get<std::vector<std::pair<std::size_t, std::size_t>>>()));
        } catch (const Json::exception &) {
            field_fail(path + ".edges", "expected an array of [u, v] pairs");
        } catch (const Error &e) {
            field_fail(path + ".edges", e.what());
        }
    }
    if (type == "less_than") {
        only_keys(o, path, {"type", "z"});
        const Json &z = member(o, "z", path);
        if (!z.is_number_unsigned() && !(z.is_number_integer() && z.get<long long>() >= 0)) {
            field_fail(path + ".z", "expected a non-negative integer");
        }
        try {
            return gz_predicate(z.get<std::uint64_t>(), width);
        } catch (const Error &e) {
            field_fail(path + ".z", e.what());
        }
    }
    field_fail(path + ".type", "unknown oracle type '" + type + "' (constant, table, cnf, independent_set, less_than)");
}

} // namespace

std::string_view wire_kind_name(WireKind kind) { return kind == WireKind::Qubit ? "qubit" : "hybit"; }

std::string_view wire_role_name(WireRole role) {
    switch (role) {
    case WireRole::Work:
        return "work";
    case WireRole::Oracle:
        return "oracle";
    case WireRole::Auxiliary:
        return "auxiliary";
    case WireRole::Plain:
        break;
    }
    return "plain";
}

Json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        const auto pos = msg.find("syntax error");
        fail(ErrorCode::Parse, std::string(what) + ": line " + std::to_string(line) + ", column " +
                                   std::to_string(col) + ": " + (pos == std::string::npos ? msg : msg.substr(pos)));
    }
}

CircuitDocument parse_circuit(const Json &doc) {
    if (!doc.is_object()) {
        field_fail("$", "expected a JSON object");
    }
    only_keys(doc, "", {"wires", "gates", "measurements", "initial"});
    const Json &wires = member(doc, "wires", "");
    if (!wires.is_array() || wires.empty()) {
        field_fail("wires", "expected a non-empty array");
    }
    std::vector<Wire> decl;
    for (std::size_t i = 0; i < wires.size(); ++i) {
        const std::string path = "wires[" + std::to_string(i) + "]";
        const Json &w = wires[i];
        if (!w.is_object()) {
            field_fail(path, "expected an object");
        }
        only_keys(w, path, {"label", "kind", "role"});
        Wire wire;
        wire.label = as_string(member(w, "label", path), path + ".label");
        const std::string kind = as_string(member(w, "kind", path), path + ".kind");
        if (kind == "qubit") {
            wire.kind = WireKind::Qubit;
        } else if (kind == "hybit") {
            wire.kind = WireKind::Hybit;
        } else {
            field_fail(path + ".kind", "expected \"qubit\" or \"hybit\", got \"" + kind + "\"");
        }
        const std::string role = w.contains("role") ? as_string(w["role"], path + ".role") : "plain";
        if (role == "work") {
            wire.role = WireRole::Work;
        } else if (role == "oracle") {
            wire.role = WireRole::Oracle;
        } else if (role == "auxiliary") {
            wire.role = WireRole::Auxiliary;
        } else if (role == "plain") {
            wire.role = WireRole::Plain;
        } else {
            field_fail(path + ".role", "expected work, oracle, auxiliary or plain, got \"" + role + "\"");
        }
        decl.push_back(wire);
    }
    WireLayout layout;
    try {
        layout = WireLayout(decl);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::SizeLimit) {
            throw;
        }
        field_fail("wires", e.what());
    }

    CircuitDocument out{Circuit(layout), LorentzState::basis(layout, std::uint64_t{0})};
    if (doc.contains("initial")) {
        const std::string bits = as_string(doc["initial"], "initial");
        if (bits.size() != layout.size() || bits.find_first_not_of("01") != std::string::npos) {
            field_fail("initial", "expected a " + std::to_string(layout.size()) + "-bit string");
        }
        out.initial = LorentzState::basis(layout, bits);
    }

    const Json empty = Json::array();
    const Json &gates = doc.contains("gates") ? doc["gates"] : empty;
    if (!gates.is_array()) {
        field_fail("gates", "expected an array");
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const std::string path = "gates[" + std::to_string(i) + "]";
        const Json &g = gates[i];
        if (!g.is_object()) {
            field_fail(path, "expected an object");
        }
        only_keys(g, path, {"kind", "wires", "chi", "oracle"});
        const std::string name = as_string(member(g, "kind", path), path + ".kind");
        const auto kind = gate_kind_from_name(name);
        if (!kind) {
            field_fail(path + ".kind", "unknown gate kind '" + name + "'");
        }
        std::vector<std::size_t> ws = wire_list(member(g, "wires", path), layout, path + ".wires");
        Gate gate;
        if (*kind == GateKind::OracleFlip) {
            if (ws.size() < 2) {
                field_fail(path + ".wires", "an oracle needs input wires and an oracle wire");
            }
            gate = Gate::oracle(parse_oracle(member(g, "oracle", path), ws.size() - 1, path + ".oracle"),
                                {ws.begin(), ws.end() - 1}, ws.back());
        } else {
            if (g.contains("oracle")) {
                field_fail(path + ".oracle", "only oracle gates take a predicate");
            }
            double chi = 0.0;
            if (takes_chi(*kind)) {
                const Json &c = member(g, "chi", path);
                if (!c.is_number()) {
                    field_fail(path + ".chi", "expected a number");
                }
                chi = c.get<double>();
            } else if (g.contains("chi")) {
                field_fail(path + ".chi", name + " gates take no chi");
            }
            gate.kind = *kind;
            gate.wires = std::move(ws);
            gate.chi = chi;
        }
        try {
            out.circuit.add(gate);
        } catch (const Error &e) {
            field_fail(path, e.what());
        }
    }

    const Json &meas = doc.contains("measurements") ? doc["measurements"] : empty;
    if (!meas.is_array()) {
        field_fail("measurements", "expected an array");
    }
    for (std::size_t i = 0; i < meas.size(); ++i) {
        const std::string path = "measurements[" + std::to_string(i) + "]";
        const Json &m = meas[i];
        if (!m.is_object()) {
            field_fail(path, "expected an object");
        }
        only_keys(m, path, {"wires", "basis"});
        auto ws = wire_list(member(m, "wires", path), layout, path + ".wires");
        const std::string basis = m.contains("basis") ? as_string(m["basis"], path + ".basis") : "computational";
        MeasurementBasis b = MeasurementBasis::Computational;
        if (basis == "x") {
            b = MeasurementBasis::XBasis;
        } else if (basis != "computational") {
            field_fail(path + ".basis", "expected \"computational\" or \"x\", got \"" + basis + "\"");
        }
        try {
            out.circuit.measure(std::move(ws), b);
        } catch (const Error &e) {
            field_fail(path, e.what());
        }
    }
    return out;
}

CircuitDocument parse_circuit_text(std::string_view text) { return parse_circuit(parse_json_text(text, "circuit")); }

Json layout_to_json(const WireLayout &layout) {
    Json arr = Json::array();
    for (const Wire &w : layout.wires()) {
        arr.push_back({{"label", w.label}, {"kind", wire_kind_name(w.kind)}, {"role", wire_role_name(w.role)}});
    }
    return arr;
}

Json state_to_json(const LorentzState &state) {
    const WireLayout &layout = state.layout();
    Json amps = Json::object();
    const auto a = state.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        if (a[i] != Complex(0.0)) {
            std::string bits(layout.size(), '0');
            for (std::size_t w = 0; w < layout.size(); ++w) {
                if (i & layout.mask(w)) {
                    bits[w] = '1';
                }
            }
            amps[bits] = {a[i].real(), a[i].imag()};
        }
    }
    return {{"wires", layout_to_json(layout)},
            {"log_scale", state.log_scale()},
            {"amplitudes", amps},
            {"indefinite_norm_scaled", state.indefinite_norm_scaled()}};
}

Json distribution_to_json(const ObservableDistribution &dist) {
    Json out = Json::object();
    for (const auto &[bits, p] : dist.entries) {
        out[bits] = p;
    }
    return out;
}

} // namespace lqc
