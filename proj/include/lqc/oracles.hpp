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
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lqc/gates.hpp"
#include "lqc/predicate.hpp"

namespace lqc {

/// Exhaustive enumeration limit for count_satisfying and the censuses.
inline constexpr std::size_t kMaxEnumerationWidth = 24;

/// Undirected simple graph on vertices 0..n-1.
class Graph {
  public:
    Graph() = default;
    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::set<std::pair<std::size_t, std::size_t>> &edges() const noexcept { return edges_; }

    /// Subset bitmask: vertex i is bit (n-1-i), matching the bitstring x_1..x_n.
    [[nodiscard]] std::uint64_t vertex_bit(std::size_t v) const noexcept { return std::uint64_t{1} << (n_ - 1 - v); }

    static Graph path(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph edgeless(std::size_t n);

  private:
    std::size_t n_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Formula in conjunctive normal form over variables 1..n (DIMACS signs).
struct CnfFormula {
    std::size_t n_vars = 0;
    std::vector<std::vector<int>> clauses;

    CnfFormula() = default;
    CnfFormula(std::size_t n, std::vector<std::vector<int>> cls);

    [[nodiscard]] bool evaluate(std::uint64_t x) const;
};

/// Expression tree over x_1..x_n built from constants, literals, AND and OR.
struct BoolExpr {
    enum class Op { Constant, Literal, And, Or };

    Op op = Op::Constant;
    bool value = false;     // Constant
    std::size_t var = 0;    // Literal, 1-based
    bool negated = false;   // Literal
    std::vector<BoolExpr> children;

    static BoolExpr constant(bool v);
    static BoolExpr literal(std::size_t var, bool negated);
    static BoolExpr all_of(std::vector<BoolExpr> terms);
    static BoolExpr any_of(std::vector<BoolExpr> terms);

    [[nodiscard]] bool evaluate(std::uint64_t x, std::size_t width) const;
    [[nodiscard]] std::size_t literal_count() const;
    /// Human form, e.g. "!x1 | (!x2 & !x3)".
    [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] std::string to_bits(std::uint64_t x, std::size_t width);
[[nodiscard]] std::uint64_t from_bits(std::string_view bits);

[[nodiscard]] bool is_independent_set(const Graph &g, std::uint64_t x);
[[nodiscard]] bool is_independent_set(const Graph &g, std::string_view bits);

[[nodiscard]] PredicatePtr independent_set_predicate(const Graph &g);
/// Independent sets with exactly k vertices.
[[nodiscard]] PredicatePtr k_is_predicate(const Graph &g, std::size_t k);
[[nodiscard]] PredicatePtr cnf_predicate(const CnfFormula &f);
[[nodiscard]] PredicatePtr constant_predicate(std::size_t width, bool value);

/// True iff x, read as a binary number, is below z; 0 <= z <= 2^n.
[[nodiscard]] bool g_z(std::uint64_t z, std::uint64_t x, std::size_t n);
/// Disjunction with one term per set bit of z: that bit negated together
/// with every earlier zero bit of z negated.
[[nodiscard]] BoolExpr build_gz_expression(std::uint64_t z, std::size_t n);
[[nodiscard]] PredicatePtr gz_predicate(std::uint64_t z, std::size_t n);

/// F(x_0, x) = (x_0 & f(x)) | (!x_0 & g(x)); x_0 is the most significant input bit.
[[nodiscard]] PredicatePtr build_F(const PredicatePtr &f, const PredicatePtr &g);

[[nodiscard]] Gate oracle_gate(const PredicatePtr &p, std::vector<std::size_t> work_wires, std::size_t oracle_wire);

[[nodiscard]] std::uint64_t count_satisfying(const Predicate &p);

/// "p edge n m" / "e u v" with 1-based vertices.
[[nodiscard]] Graph parse_dimacs_graph(std::string_view text);
/// "p cnf n m" followed by zero-terminated clauses.
[[nodiscard]] CnfFormula parse_dimacs_cnf(std::string_view text);

} // namespace lqc
