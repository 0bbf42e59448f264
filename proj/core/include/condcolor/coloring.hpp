#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "condcolor/graph.hpp"

namespace condcolor {

using Color = std::uint32_t;

/// k available colors, order r. Both must be positive.
struct ColoringParams {
    int k = 1;
    int r = 1;

    void validate() const;
    friend bool operator==(const ColoringParams&, const ColoringParams&) = default;
};

/// Total color assignment; colors[v] < params.k.
struct ConditionalColoring {
    std::vector<Color> colors;
    ColoringParams params;

    friend bool operator==(const ConditionalColoring&, const ConditionalColoring&) = default;
};

struct Violation {
    enum class Kind { c1, c2 };
    Kind kind = Kind::c1;
    Vertex u = 0;  // the offending vertex (C2) or edge endpoint (C1)
    Vertex v = 0;  // other edge endpoint; equal to u for C2
    std::string detail;
};

struct Verdict {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// min{d(v), r}: the number of distinct neighbour colors v must see.
inline std::size_t required_neighbor_colors(const Graph& g, Vertex v, int r) {
    const auto d = g.degree(v);
    return d < static_cast<std::size_t>(r) ? d : static_cast<std::size_t>(r);
}

/// Checks (C1) c(u) != c(v) on every edge and (C2) |c(N(v))| >= min{d(v), r}
/// at every vertex, listing every failure. Throws InputError if the
/// coloring is not total over g or uses a color >= k.
Verdict verify_coloring(const Graph& g, const ConditionalColoring& c);

/// Classical proper coloring check (C1 only).
bool is_proper_coloring(const Graph& g, std::span<const Color> colors);

/// Number of distinct colors in use.
std::size_t colors_used(std::span<const Color> colors);

struct SolverOptions {
    /// Split the search whenever the uncolored vertices fall apart into
    /// independent pieces.
    bool decompose = true;
    /// Root-level workers; any value > 1 splits the first branching
    /// deterministically across threads.
    unsigned jobs = 1;
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t failures = 0;
};

/// Exact decision "is chi_r(G) <= k?". Returns a coloring that passes
/// verify_coloring, or nullopt iff none exists. The witness is not required
/// to use all k colors.
std::optional<ConditionalColoring> solve_kr(const Graph& g, ColoringParams p,
                                            const SolverOptions& options = {},
                                            SolverStats* stats = nullptr);

/// Calls visit for every valid (k, r)-coloring of g (no symmetry reduction).
/// visit returns false to stop early. Returns the number visited.
std::uint64_t for_each_coloring(const Graph& g, ColoringParams p,
                                const std::function<bool(std::span<const Color>)>& visit);

struct ChiResult {
    int value = 0;
    ConditionalColoring witness;
};

/// Smallest k admitting a conditional (k, r)-coloring, with a witness using
/// exactly that many colors. The empty graph reports 0.
ChiResult chi_r(const Graph& g, int r, const SolverOptions& options = {});

inline constexpr std::size_t kDefaultOracleBound = 10;

/// Enumerates all k^n assignments for k = 1, 2, ... . Throws
/// OracleBoundError when g has more than `bound` vertices.
int brute_force_chi_r(const Graph& g, int r, std::size_t bound = kDefaultOracleBound);

/// Classical chromatic number by plain enumeration; same bound semantics.
int brute_force_chromatic_number(const Graph& g, std::size_t bound = kDefaultOracleBound);

enum class LowDegreeShape { path, cycle };

/// chi_2 of P_n or C_n by dynamic programming over consecutive color pairs.
/// Requires n >= 1 for paths and n >= 3 for cycles.
int chi2_low_degree(std::size_t n, LowDegreeShape shape);

/// A valid (Delta+1, 2)-coloring for Delta >= 3: greedy with local repair,
/// falling back to solve_kr. Throws InputError when Delta < 3.
ConditionalColoring delta_plus_one_coloring(const Graph& g);

/// JSON witness: {"k":..,"r":..,"colors":{"0":c0,"1":c1,...}}.
std::string write_coloring_json(const ConditionalColoring& c);
ConditionalColoring parse_coloring_json(const std::string& text);

}  // namespace condcolor
