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

#include "support.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "lqc/rng.hpp"

namespace lqc::testing {

namespace {

using Block = std::array<std::array<Complex, 2>, 2>;

Block textbook_block(const Gate &g) {
    const double s2 = std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    switch (g.kind) {
    case GateKind::HadamardQ:
    case GateKind::ControlledH:
        return {{{1.0 / s2, 1.0 / s2}, {1.0 / s2, -1.0 / s2}}};
    case GateKind::TGate:
        return {{{1.0, 0.0}, {0.0, std::exp(-i * std::acos(-1.0) / 4.0)}}};
    case GateKind::Tau:
        return {{{s2, i}, {i, -s2}}};
    case GateKind::SigmaX:
        return {{{0.0, 1.0}, {1.0, 0.0}}};
    case GateKind::SigmaZ:
    case GateKind::ControlledSigmaZ:
        return {{{1.0, 0.0}, {0.0, -1.0}}};
    default: {
        const double ch = (std::exp(g.chi) + std::exp(-g.chi)) / 2.0;
        const double sh = (std::exp(g.chi) - std::exp(-g.chi)) / 2.0;
        return {{{ch, -i * sh}, {i * sh, ch}}};
    }
    }
}

int bit_of(std::uint64_t index, std::size_t wire, std::size_t n) { return static_cast<int>((index >> (n - 1 - wire)) & 1U); }

} // namespace

Dense dense_gate(const Gate &gate, const WireLayout &layout) {
    const std::size_t n = layout.size();
    const std::uint64_t dim = std::uint64_t{1} << n;
    Dense m(dim, std::vector<Complex>(dim));
    if (gate.kind == GateKind::OracleFlip) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            std::uint64_t x = 0;
            for (std::size_t k = 0; k + 1 < gate.wires.size(); ++k) {
                x = 2 * x + static_cast<std::uint64_t>(bit_of(col, gate.wires[k], n));
            }
            const std::uint64_t row =
                (*gate.predicate)(x) ? col ^ (std::uint64_t{1} << (n - 1 - gate.wires.back())) : col;
            m[row][col] = 1.0;
        }
        return m;
    }
    const Block b = textbook_block(gate);
    const std::size_t t = gate.wires.back();
    for (std::uint64_t col = 0; col < dim; ++col) {
        bool active = true;
        for (std::size_t k = 0; k + 1 < gate.wires.size(); ++k) {
            active = active && bit_of(col, gate.wires[k], n) == 1;
        }
        if (!active) {
            m[col][col] = 1.0;
            continue;
        }
        const int tc = bit_of(col, t, n);
        for (int tr = 0; tr < 2; ++tr) {
            const std::uint64_t row = tr == tc ? col : col ^ (std::uint64_t{1} << (n - 1 - t));
            m[row][col] += b[static_cast<std::size_t>(tr)][static_cast<std::size_t>(tc)];
        }
    }
    return m;
}

std::vector<Complex> dense_apply(const Dense &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(v.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

std::vector<Complex> dense_run(const Circuit &c, std::vector<Complex> v) {
    for (const Gate &g : c.gates()) {
        v = dense_apply(dense_gate(g, c.layout()), v);
    }
    return v;
}

double dense_indefinite_norm(const WireLayout &layout, const std::vector<Complex> &v) {
    double acc = 0.0;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        int sign = 1;
        for (std::size_t w = 0; w < layout.size(); ++w) {
            if (layout[w].kind == WireKind::Hybit && bit_of(i, w, layout.size()) == 1) {
                sign = -sign;
            }
        }
        acc += sign * std::norm(v[i]);
    }
    return acc;
}

std::vector<Complex> true_amplitudes(const LorentzState &s) {
    const double f = std::exp(s.log_scale());
    std::vector<Complex> out;
    for (const Complex &a : s.amplitudes()) {
        out.push_back(a * f);
    }
    return out;
}

const std::vector<Graph> &nonisomorphic_graphs(std::size_t n) {
    static std::map<std::size_t, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            pair_index[{u, v}] = pairs.size();
            pairs.emplace_back(u, v);
        }
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // Edge index image under each permutation.
    std::vector<std::vector<std::size_t>> image(perms.size(), std::vector<std::size_t>(pairs.size()));
    for (std::size_t k = 0; k < perms.size(); ++k) {
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            auto a = perms[k][pairs[e].first], b = perms[k][pairs[e].second];
            image[k][e] = pair_index[{std::min(a, b), std::max(a, b)}];
        }
    }
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool canonical = true;
        for (std::size_t k = 0; k < perms.size() && canonical; ++k) {
            std::uint64_t m2 = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (mask >> e & 1U) {
                    m2 |= std::uint64_t{1} << image[k][e];
                }
            }
            canonical = m2 >= mask;
        }
        if (canonical) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (mask >> e & 1U) {
                    edges.push_back(pairs[e]);
                }
            }
            out.emplace_back(n, edges);
        }
    }
    return cache[n] = std::move(out);
}

std::vector<CnfFormula> cnf_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vars) {
    std::vector<CnfFormula> out;
    for (std::size_t i = 0; i < count; ++i) {
        CounterRng rng(seed, i);
        const std::size_t n = 2 + rng.below(max_vars - 1);
        const std::size_t m = 1 + rng.below(n);
        std::vector<std::vector<int>> clauses;
        for (std::size_t c = 0; c < m; ++c) {
            const std::size_t width = 1 + rng.below(std::min<std::size_t>(3, n));
            std::vector<int> vars(n);
            std::iota(vars.begin(), vars.end(), 1);
            std::vector<int> clause;
            for (std::size_t k = 0; k < width; ++k) {
                const std::size_t j = k + rng.below(n - k);
                std::swap(vars[k], vars[j]);
                clause.push_back(rng.below(2) ? vars[k] : -vars[k]);
            }
            clauses.push_back(clause);
        }
        out.emplace_back(n, clauses);
    }
    return out;
}

namespace {

void branch(const Graph &g, std::size_t v, std::vector<bool> &blocked, std::size_t size,
            std::vector<std::uint64_t> &counts) {
    if (v == g.vertex_count()) {
        ++counts[size];
        return;
    }
    branch(g, v + 1, blocked, size, counts);
    if (!blocked[v]) {
        std::vector<bool> saved = blocked;
        for (auto [a, b] : g.edges()) {
            if (a == v) {
                blocked[b] = true;
            }
            if (b == v) {
                blocked[a] = true;
            }
        }
        branch(g, v + 1, blocked, size + 1, counts);
        blocked = saved;
    }
}

} // namespace

std::vector<std::uint64_t> count_is_by_size(const Graph &g) {
    std::vector<std::uint64_t> counts(g.vertex_count() + 1, 0);
    std::vector<bool> blocked(g.vertex_count(), false);
    branch(g, 0, blocked, 0, counts);
    return counts;
}

std::vector<Complex> random_vector(std::uint64_t seed, std::uint64_t dim) {
    CounterRng rng(seed, 0x5eed);
    std::vector<Complex> v(dim);
    for (auto &a : v) {
        a = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    }
    return v;
}

} // namespace lqc::testing
