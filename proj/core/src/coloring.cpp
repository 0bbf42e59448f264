#include "condcolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "condcolor/errors.hpp"
#include "kr_search.hpp"

namespace condcolor {

void ColoringParams::validate() const {
    if (k < 1) throw InputError("k must be positive, got " + std::to_string(k));
    if (r < 1) throw InputError("r must be positive, got " + std::to_string(r));
}

Verdict verify_coloring(const Graph& g, const ConditionalColoring& c) {
    c.params.validate();
    if (c.colors.size() != g.vertex_count()) {
        throw InputError("coloring covers " + std::to_string(c.colors.size()) + " vertices, graph has " +
                         std::to_string(g.vertex_count()));
    }
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        if (c.colors[v] >= static_cast<Color>(c.params.k)) {
            throw InputError("vertex " + std::to_string(v) + " has color " + std::to_string(c.colors[v]) +
                             " outside [0," + std::to_string(c.params.k) + ")");
        }
    }

    Verdict verdict;
    for (const Edge& e : g.edges()) {
        if (c.colors[e.u] == c.colors[e.v]) {
            verdict.violations.push_back({Violation::Kind::c1, e.u, e.v,
                                          "both endpoints colored " + std::to_string(c.colors[e.u])});
        }
    }
    std::vector<Color> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (Vertex u : g.neighbors(v)) seen.push_back(c.colors[u]);
        std::sort(seen.begin(), seen.end());
        const auto distinct = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
        const auto need = required_neighbor_colors(g, v, c.params.r);
        if (distinct < need) {
            verdict.violations.push_back({Violation::Kind::c2, v, v,
                                          "neighbourhood shows " + std::to_string(distinct) + " colors, needs " +
                                              std::to_string(need)});
        }
    }
    return verdict;
}

bool is_proper_coloring(const Graph& g, std::span<const Color> colors) {
    if (colors.size() != g.vertex_count()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return colors[e.u] == colors[e.v]; });
}

std::size_t colors_used(std::span<const Color> colors) {
    return std::set<Color>(colors.begin(), colors.end()).size();
}

namespace {

std::vector<std::uint32_t> needs_for(const Graph& g, int r) {
    std::vector<std::uint32_t> need(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        need[v] = static_cast<std::uint32_t>(required_neighbor_colors(g, v, r));
    }
    return need;
}

// A coloring never needs more colors than vertices.
int effective_colors(const Graph& g, int k) {
    const auto n = static_cast<int>(std::max<std::size_t>(g.vertex_count(), 1));
    const int eff = std::min(k, n);
    if (eff > detail::kMaxSearchColors) {
        throw InputError("exact search supports at most " + std::to_string(detail::kMaxSearchColors) +
                         " colors, asked for " + std::to_string(eff));
    }
    return eff;
}

}  // namespace

std::optional<ConditionalColoring> solve_kr(const Graph& g, ColoringParams p, const SolverOptions& options,
                                            SolverStats* stats) {
    p.validate();
    const int k = effective_colors(g, p.k);
    detail::KrSearch search(g, k, needs_for(g, p.r),
                            std::vector<detail::Mask>(g.vertex_count(), detail::full_mask(k)), options);
    auto colors = search.solve();
    if (stats) *stats = search.stats();
    if (!colors) return std::nullopt;
    ConditionalColoring c{std::move(*colors), p};
    if (!verify_coloring(g, c).ok()) throw std::logic_error("solve_kr produced an invalid coloring");
    return c;
}

std::uint64_t for_each_coloring(const Graph& g, ColoringParams p,
                                const std::function<bool(std::span<const Color>)>& visit) {
    p.validate();
    if (p.k > detail::kMaxSearchColors) throw InputError("enumeration supports at most 64 colors");
    detail::KrSearch search(g, p.k, needs_for(g, p.r),
                            std::vector<detail::Mask>(g.vertex_count(), detail::full_mask(p.k)),
                            SolverOptions{.decompose = false, .jobs = 1});
    return search.enumerate(visit);
}

ChiResult chi_r(const Graph& g, int r, const SolverOptions& options) {
    ColoringParams{1, r}.validate();
    if (g.vertex_count() == 0) return {0, ConditionalColoring{{}, ColoringParams{1, r}}};
    // v and its neighbourhood already force min{d(v), r} + 1 colors
    int k = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        k = std::max(k, static_cast<int>(required_neighbor_colors(g, v, r)) + 1);
    }
    for (;; ++k) {
        if (auto c = solve_kr(g, {k, r}, options)) {
            // at the minimum every one of the k colors must be in use
            if (colors_used(c->colors) != static_cast<std::size_t>(k)) {
                throw std::logic_error("chi_r witness is not surjective at the minimum");
            }
            return {k, std::move(*c)};
        }
    }
}

namespace {

// Deliberately naive full check, kept apart from verify_coloring and the
// search engine so the oracle shares no code with what it checks.
bool naive_valid(const Graph& g, const std::vector<Color>& c, int r, bool check_c2) {
    for (const Edge& e : g.edges()) {
        if (c[e.u] == c[e.v]) return false;
    }
    if (!check_c2) return true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::set<Color> seen;
        for (Vertex u : g.neighbors(v)) seen.insert(c[u]);
        const std::size_t need = std::min<std::size_t>(g.degree(v), static_cast<std::size_t>(r));
        if (seen.size() < need) return false;
    }
    return true;
}

int enumerate_minimum(const Graph& g, int r, bool check_c2, std::size_t bound) {
    const std::size_t n = g.vertex_count();
    if (n > bound) {
        throw OracleBoundError("brute force oracle refuses " + std::to_string(n) + " vertices (bound " +
                               std::to_string(bound) + ")");
    }
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<Color> c(n, 0);
        while (true) {
            if (naive_valid(g, c, r, check_c2)) return k;
            std::size_t i = 0;
            while (i < n && c[i] + 1 == static_cast<Color>(k)) c[i++] = 0;
            if (i == n) break;
            ++c[i];
        }
    }
}

}  // namespace

int brute_force_chi_r(const Graph& g, int r, std::size_t bound) {
    ColoringParams{1, r}.validate();
    return enumerate_minimum(g, r, true, bound);
}

int brute_force_chromatic_number(const Graph& g, std::size_t bound) {
    return enumerate_minimum(g, 1, false, bound);
}

int chi2_low_degree(std::size_t n, LowDegreeShape shape) {
    if (shape == LowDegreeShape::path && n < 1) throw InputError("a path needs at least one vertex");
    if (shape == LowDegreeShape::cycle && n < 3) throw InputError("a cycle needs at least three vertices");
    if (n == 1) return 1;
    if (n == 2) return 2;

    // Interior vertices have degree 2, so C2 asks for distinct colors at
    // distance two; path ends have degree 1 and are satisfied by C1 alone.
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        const auto K = static_cast<std::size_t>(k);
        if (shape == LowDegreeShape::path) {
            // reach[a*K+b]: some valid prefix ends with colors (a, b)
            std::vector<char> reach(K * K, 0);
            for (std::size_t a = 0; a < K; ++a)
                for (std::size_t b = 0; b < K; ++b) reach[a * K + b] = a != b;
            for (std::size_t i = 2; i < n; ++i) {
                std::vector<char> next(K * K, 0);
                for (std::size_t a = 0; a < K; ++a)
                    for (std::size_t b = 0; b < K; ++b) {
                        if (!reach[a * K + b]) continue;
                        for (std::size_t c = 0; c < K; ++c)
                            if (c != b && c != a) next[b * K + c] = 1;
                    }
                reach = std::move(next);
            }
            if (std::any_of(reach.begin(), reach.end(), [](char x) { return x != 0; })) return k;
        } else {
            for (std::size_t c0 = 0; c0 < K; ++c0)
                for (std::size_t c1 = 0; c1 < K; ++c1) {
                    if (c0 == c1) continue;
                    std::vector<char> reach(K * K, 0);
                    reach[c0 * K + c1] = 1;
                    for (std::size_t i = 2; i < n; ++i) {
                        std::vector<char> next(K * K, 0);
                        for (std::size_t a = 0; a < K; ++a)
                            for (std::size_t b = 0; b < K; ++b) {
                                if (!reach[a * K + b]) continue;
                                for (std::size_t c = 0; c < K; ++c)
                                    if (c != b && c != a) next[b * K + c] = 1;
                            }
                        reach = std::move(next);
                    }
                    // close the cycle: (a, b) are the colors of v_{n-2}, v_{n-1}
                    for (std::size_t a = 0; a < K; ++a)
                        for (std::size_t b = 0; b < K; ++b) {
                            if (!reach[a * K + b]) continue;
                            if (b != c0 && a != c0 && b != c1) return k;
                        }
                }
        }
    }
    throw std::logic_error("chi2_low_degree: no coloring with n colors");
}

namespace {

bool c2_ok_at(const Graph& g, const std::vector<Color>& c, Vertex v) {
    const auto need = required_neighbor_colors(g, v, 2);
    if (need < 2) return true;
    const auto nbrs = g.neighbors(v);
    const Color first = c[nbrs.front()];
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return c[u] != first; });
}

}  // namespace

ConditionalColoring delta_plus_one_coloring(const Graph& g) {
    const auto delta = g.max_degree();
    if (delta < 3) {
        throw InputError("the Delta+1 bound needs maximum degree >= 3, graph has " + std::to_string(delta));
    }
    const int k = static_cast<int>(delta) + 1;
    const std::size_t n = g.vertex_count();

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Greedy proper coloring: each vertex has at most Delta neighbours, so a
    // free color always exists among Delta+1.
    std::vector<Color> c(n, 0);
    std::vector<char> done(n, 0);
    for (Vertex v : order) {
        std::vector<char> taken(static_cast<std::size_t>(k), 0);
        for (Vertex u : g.neighbors(v))
            if (done[u]) taken[c[u]] = 1;
        Color pick = 0;
        while (taken[pick]) ++pick;
        c[v] = pick;
        done[v] = 1;
    }

    // Repair monochromatic neighbourhoods by recoloring one neighbour.
    const std::size_t max_rounds = 20 * n + 20;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        Vertex bad = static_cast<Vertex>(n);
        for (Vertex v = 0; v < n; ++v) {
            if (!c2_ok_at(g, c, v)) {
                bad = v;
                break;
            }
        }
        if (bad == n) {
            ConditionalColoring out{c, {k, 2}};
            if (verify_coloring(g, out).ok()) return out;
            break;
        }
        bool fixed = false;
        for (Vertex u : g.neighbors(bad)) {
            const Color old = c[u];
            for (Color alt = 0; alt < static_cast<Color>(k) && !fixed; ++alt) {
                if (alt == old) continue;
                bool clash = false;
                for (Vertex w : g.neighbors(u)) clash = clash || c[w] == alt;
                if (clash) continue;
                c[u] = alt;
                bool keeps = c2_ok_at(g, c, bad) && c2_ok_at(g, c, u);
                for (Vertex w : g.neighbors(u)) keeps = keeps && (w == bad || c2_ok_at(g, c, w));
                if (keeps) fixed = true;
                else c[u] = old;
            }
            if (fixed) break;
        }
        if (!fixed) break;
    }

    auto exact = solve_kr(g, {k, 2});
    if (!exact) throw std::logic_error("no (Delta+1, 2)-coloring found; the cited upper bound would be violated");
    return *exact;
}

}  // namespace condcolor
