#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph container, so agreement is evidence rather than
// tautology.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "condcolor/cnf.hpp"
#include "condcolor/coloring.hpp"
#include "condcolor/graph.hpp"

namespace oracle {

using condcolor::Color;
using condcolor::Graph;
using condcolor::Vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

/// C1 and C2 straight from the definition.
inline bool valid(const Graph& g, const std::vector<Color>& c, int r) {
    const auto adj = adjacency_matrix(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        std::set<Color> seen;
        std::size_t d = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (!adj[v][u]) continue;
            if (c[u] == c[v]) return false;
            seen.insert(c[u]);
            ++d;
        }
        if (seen.size() < std::min<std::size_t>(d, static_cast<std::size_t>(r))) return false;
    }
    return true;
}

inline bool proper(const Graph& g, const std::vector<Color>& c) {
    for (const auto& e : g.edges()) {
        if (c[e.u] == c[e.v]) return false;
    }
    return true;
}

/// Recursive enumeration of all k^n colorings; stops at the first accepted one.
template <class Accept>
bool exists_coloring(std::size_t n, int k, Accept accept) {
    std::vector<Color> c(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) return accept(c);
        for (int col = 0; col < k; ++col) {
            c[i] = static_cast<Color>(col);
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline bool kr_colorable(const Graph& g, int k, int r) {
    return exists_coloring(g.vertex_count(), k, [&](const std::vector<Color>& c) { return valid(g, c, r); });
}

inline int chi_r(const Graph& g, int r) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k) {
        if (kr_colorable(g, k, r)) return k;
    }
}

inline int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k) {
        if (exists_coloring(g.vertex_count(), k, [&](const std::vector<Color>& c) { return proper(g, c); })) return k;
    }
}

inline bool has_triangle(const Graph& g) {
    const auto adj = adjacency_matrix(g);
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) return true;
    return false;
}

inline bool connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

inline bool satisfiable(const condcolor::CnfFormula& f) {
    const std::size_t n = f.var_count;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool any = false;
            for (int lit : clause) {
                const bool value = bits >> (std::abs(lit) - 1) & 1;
                if (lit > 0 ? value : !value) any = true;
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// graph families and generators

inline Graph path(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edge_list(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, e);
}

/// Hub 0 joined to the cycle 1..n.
inline Graph wheel(std::size_t rim) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < rim; ++i) {
        e.emplace_back(0, i + 1);
        e.emplace_back(i + 1, static_cast<Vertex>((i + 1) % rim + 1));
    }
    return Graph::from_edge_list(rim + 1, e);
}

inline Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edge_list(10, e);
}

/// Every labelled graph on n vertices (2^(n choose 2) of them).
template <class Visit>
void for_each_graph(std::size_t n, Visit visit) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if (mask >> b & 1) e.push_back(slots[b]);
        }
        visit(Graph::from_edge_list(n, e));
    }
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (connected(g)) return g;
    }
}

/// A random graph containing the cycle 0,1,...,n-1 (shuffled ids), with the cycle as witness.
inline std::pair<Graph, condcolor::HamiltonianWitness> random_hamiltonian(std::mt19937_64& rng, std::size_t n,
                                                                          double chord_p) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(chord_p);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(order[i], order[(i + 1) % n]);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return {Graph::from_edge_list(n, e), condcolor::HamiltonianWitness{order}};
}

inline condcolor::CnfFormula random_3cnf(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    // every clause over three distinct variables, every variable positive somewhere
    for (;;) {
        condcolor::CnfFormula f;
        f.var_count = n;
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<int> vars(n);
            std::iota(vars.begin(), vars.end(), 1);
            std::shuffle(vars.begin(), vars.end(), rng);
            condcolor::Clause clause;
            for (int i = 0; i < 3; ++i) clause.push_back(rng() % 2 ? vars[i] : -vars[i]);
            f.clauses.push_back(clause);
        }
        if (condcolor::is_normalized(f)) return f;
    }
}

}  // namespace oracle
