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

#include "lqc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "lqc/error.hpp"

namespace lqc {

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges) : n_(n) {
    require(n <= 62, "graphs are limited to 62 vertices");
    for (auto [u, v] : edges) {
        require(u < n && v < n, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint >= n");
        require(u != v, "self-loop on vertex " + std::to_string(u));
        const std::pair<std::size_t, std::size_t> e{std::min(u, v), std::max(u, v)};
        require(edges_.insert(e).second,
                "duplicate edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    }
}

Graph Graph::path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

Graph Graph::complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph Graph::edgeless(std::size_t n) { return Graph(n, {}); }

CnfFormula::CnfFormula(std::size_t n, std::vector<std::vector<int>> cls) : n_vars(n), clauses(std::move(cls)) {
    require(n <= 62, "formulas are limited to 62 variables");
    for (const auto &c : clauses) {
        require(!c.empty(), "empty clause");
        for (int lit : c) {
            require(lit != 0 && static_cast<std::size_t>(lit < 0 ? -lit : lit) <= n,
                    "literal " + std::to_string(lit) + " out of range for " + std::to_string(n) + " variables");
        }
    }
}

bool CnfFormula::evaluate(std::uint64_t x) const {
    for (const auto &clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            const std::size_t v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            const bool bit = (x >> (n_vars - v)) & 1U;
            if (bit == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            return false;
        }
    }
    return true;
}

BoolExpr BoolExpr::constant(bool v) {
    BoolExpr e;
    e.op = Op::Constant;
    e.value = v;
    return e;
}

BoolExpr BoolExpr::literal(std::size_t var, bool negated) {
    BoolExpr e;
    e.op = Op::Literal;
    e.var = var;
    e.negated = negated;
    return e;
}

BoolExpr BoolExpr::all_of(std::vector<BoolExpr> terms) {
    if (terms.size() == 1) {
        return std::move(terms.front());
    }
    BoolExpr e;
    e.op = Op::And;
    e.children = std::move(terms);
    return e;
}

BoolExpr BoolExpr::any_of(std::vector<BoolExpr> terms) {
    if (terms.size() == 1) {
        return std::move(terms.front());
    }
    BoolExpr e;
    e.op = Op::Or;
    e.children = std::move(terms);
    return e;
}

bool BoolExpr::evaluate(std::uint64_t x, std::size_t width) const {
    switch (op) {
    case Op::Constant:
        return value;
    case Op::Literal:
        return (((x >> (width - var)) & 1U) != 0) != negated;
    case Op::And:
        for (const BoolExpr &c : children) {
            if (!c.evaluate(x, width)) {
                return false;
            }
        }
        return true;
    case Op::Or:
        for (const BoolExpr &c : children) {
            if (c.evaluate(x, width)) {
                return true;
            }
        }
        return false;
    }
    return false;
}

std::size_t BoolExpr::literal_count() const {
    if (op == Op::Literal) {
        return 1;
    }
    std::size_t n = 0;
    for (const BoolExpr &c : children) {
        n += c.literal_count();
    }
    return n;
}

std::string BoolExpr::to_string() const {
    switch (op) {
    case Op::Constant:
        return value ? "true" : "false";
    case Op::Literal:
        return (negated ? "!x" : "x") + std::to_string(var);
    case Op::And:
    case Op::Or: {
        std::string out;
        const char *sep = op == Op::And ? " & " : " | ";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) {
                out += sep;
            }
            const bool wrap = op == Op::Or && children[i].op == Op::And;
            out += wrap ? "(" + children[i].to_string() + ")" : children[i].to_string();
        }
        return out;
    }
    }
    return {};
}

std::string to_bits(std::uint64_t x, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((x >> (width - 1 - i)) & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

std::uint64_t from_bits(std::string_view bits) {
    require(bits.size() <= 62, "bitstring too long");
    std::uint64_t x = 0;
    for (char c : bits) {
        require(c == '0' || c == '1', "bitstring '" + std::string(bits) + "' contains a non-binary digit");
        x = (x << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return x;
}

bool is_independent_set(const Graph &g, std::uint64_t x) {
    for (auto [u, v] : g.edges()) {
        if ((x & g.vertex_bit(u)) && (x & g.vertex_bit(v))) {
            return false;
        }
    }
    return true;
}

bool is_independent_set(const Graph &g, std::string_view bits) {
    require(bits.size() == g.vertex_count(), "subset '" + std::string(bits) + "' has width " +
                                                 std::to_string(bits.size()) + ", graph has " +
                                                 std::to_string(g.vertex_count()) + " vertices");
    return is_independent_set(g, from_bits(bits));
}

PredicatePtr independent_set_predicate(const Graph &g) {
    return make_predicate(
        g.vertex_count(), [g](std::uint64_t x) { return is_independent_set(g, x); }, "independent set");
}

PredicatePtr k_is_predicate(const Graph &g, std::size_t k) {
    require(k <= g.vertex_count(), "k exceeds the vertex count");
    return make_predicate(
        g.vertex_count(),
        [g, k](std::uint64_t x) { return static_cast<std::size_t>(std::popcount(x)) == k && is_independent_set(g, x); },
        "independent set of exactly " + std::to_string(k) + " vertices");
}

PredicatePtr cnf_predicate(const CnfFormula &f) {
    return make_predicate(
        f.n_vars, [f](std::uint64_t x) { return f.evaluate(x); },
        "cnf with " + std::to_string(f.clauses.size()) + " clauses");
}

PredicatePtr constant_predicate(std::size_t width, bool value) {
    return make_predicate(
        width, [value](std::uint64_t) { return value; }, value ? "constant true" : "constant false");
}

bool g_z(std::uint64_t z, std::uint64_t x, std::size_t n) {
    require(n <= 62 && z <= (std::uint64_t{1} << n), "comparator threshold must satisfy 0 <= z <= 2^n");
    return x < z;
}

BoolExpr build_gz_expression(std::uint64_t z, std::size_t n) {
    require(n >= 1 && n <= 62 && z <= (std::uint64_t{1} << n), "comparator threshold must satisfy 0 <= z <= 2^n");
    if (z == 0) {
        return BoolExpr::constant(false);
    }
    if (z == (std::uint64_t{1} << n)) {
        return BoolExpr::constant(true);
    }
    // x < z iff at the first differing position j, z_j = 1 and x_j = 0. Earlier
    // ones of z need no literal: their terms already cover x_i = 0 there.
    std::vector<BoolExpr> terms;
    std::vector<std::size_t> zeros_so_far;
    for (std::size_t j = 1; j <= n; ++j) {
        const bool zj = (z >> (n - j)) & 1U;
        if (zj) {
            std::vector<BoolExpr> lits;
            for (std::size_t i : zeros_so_far) {
                lits.push_back(BoolExpr::literal(i, true));
            }
            lits.push_back(BoolExpr::literal(j, true));
            terms.push_back(BoolExpr::all_of(std::move(lits)));
        } else {
            zeros_so_far.push_back(j);
        }
    }
    return BoolExpr::any_of(std::move(terms));
}

PredicatePtr gz_predicate(std::uint64_t z, std::size_t n) {
    BoolExpr expr = build_gz_expression(z, n);
    return make_predicate(
        n, [expr = std::move(expr), n](std::uint64_t x) { return expr.evaluate(x, n); },
        "x < " + std::to_string(z));
}

PredicatePtr build_F(const PredicatePtr &f, const PredicatePtr &g) {
    require(f && g, "build_F needs two predicates");
    require(f->width() == g->width(), "build_F: predicate widths differ (" + std::to_string(f->width()) + " vs " +
                                          std::to_string(g->width()) + ")");
    const std::size_t n = f->width();
    const std::uint64_t switch_bit = std::uint64_t{1} << n;
    return make_predicate(
        n + 1,
        [f, g, switch_bit](std::uint64_t x) {
            const std::uint64_t rest = x & (switch_bit - 1);
            return (x & switch_bit) ? (*f)(rest) : (*g)(rest);
        },
        "switch(" + f->description() + ", " + g->description() + ")");
}

Gate oracle_gate(const PredicatePtr &p, std::vector<std::size_t> work_wires, std::size_t oracle_wire) {
    return Gate::oracle(p, std::move(work_wires), oracle_wire);
}

std::uint64_t count_satisfying(const Predicate &p) {
    if (p.width() > kMaxEnumerationWidth) {
        fail(ErrorCode::SizeLimit, "count_satisfying: width " + std::to_string(p.width()) + " exceeds " +
                                       std::to_string(kMaxEnumerationWidth));
    }
    std::uint64_t count = 0;
    const std::uint64_t end = std::uint64_t{1} << p.width();
    for (std::uint64_t x = 0; x < end; ++x) {
        count += p(x) ? 1 : 0;
    }
    return count;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string &msg) {
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

long long to_int(const std::string &tok, std::size_t line) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_fail(line, "expected an integer, got '" + tok + "'");
    }
    return v;
}

} // namespace

Graph parse_dimacs_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty() || t[0] == "c") {
            continue;
        }
        if (t[0] == "p") {
            if (have_header) {
                parse_fail(lineno, "duplicate problem line");
            }
            if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
                parse_fail(lineno, "malformed header; expected 'p edge <n> <m>'");
            }
            n = to_int(t[2], lineno);
            m = to_int(t[3], lineno);
            if (n < 1 || n > 62 || m < 0) {
                parse_fail(lineno, "header counts out of range (1 <= n <= 62, m >= 0)");
            }
            have_header = true;
            continue;
        }
        if (t[0] == "e") {
            if (!have_header) {
                parse_fail(lineno, "edge line before the 'p edge' header");
            }
            if (t.size() != 3) {
                parse_fail(lineno, "malformed edge; expected 'e <u> <v>'");
            }
            const long long u = to_int(t[1], lineno), v = to_int(t[2], lineno);
            if (u < 1 || v < 1 || u > n || v > n) {
                parse_fail(lineno, "edge endpoint out of range 1.." + std::to_string(n));
            }
            if (u == v) {
                parse_fail(lineno, "self-loop on vertex " + std::to_string(u));
            }
            const auto a = static_cast<std::size_t>(u - 1), b = static_cast<std::size_t>(v - 1);
            const std::pair<std::size_t, std::size_t> e{std::min(a, b), std::max(a, b)};
            if (!seen.insert(e).second) {
                parse_fail(lineno, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            }
            edges.push_back(e);
            continue;
        }
        parse_fail(lineno, "unrecognized line type '" + t[0] + "'");
    }
    if (!have_header) {
        parse_fail(lineno, "missing 'p edge <n> <m>' header");
    }
    if (static_cast<long long>(edges.size()) != m) {
        parse_fail(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty() || t[0] == "c") {
            continue;
        }
        if (t[0] == "%") {
            break;
        }
        if (t[0] == "p") {
            if (have_header) {
                parse_fail(lineno, "duplicate problem line");
            }
            if (t.size() != 4 || t[1] != "cnf") {
                parse_fail(lineno, "malformed header; expected 'p cnf <vars> <clauses>'");
            }
            n = to_int(t[2], lineno);
            m = to_int(t[3], lineno);
            if (n < 1 || n > 62 || m < 0) {
                parse_fail(lineno, "header counts out of range (1 <= vars <= 62, clauses >= 0)");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            parse_fail(lineno, "clause before the 'p cnf' header");
        }
        for (const std::string &tok : t) {
            const long long lit = to_int(tok, lineno);
            if (lit == 0) {
                if (current.empty()) {
                    parse_fail(lineno, "empty clause");
                }
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (lit < -n || lit > n) {
                parse_fail(lineno, "literal " + tok + " out of range for " + std::to_string(n) + " variables");
            }
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!have_header) {
        parse_fail(lineno, "missing 'p cnf <vars> <clauses>' header");
    }
    if (!current.empty()) {
        parse_fail(lineno, "last clause is not terminated by 0");
    }
    if (static_cast<long long>(clauses.size()) != m) {
        parse_fail(lineno, "header declares " + std::to_string(m) + " clauses, found " +
                               std::to_string(clauses.size()));
    }
    return CnfFormula(static_cast<std::size_t>(n), std::move(clauses));
}

} // namespace lqc
