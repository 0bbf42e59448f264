#pragma once

// Exact backtracking engine for conditional colorings. Domains are color
// bitmasks; propagation enforces C1 by forward checking and C2 by counting
// how many new colors the uncolored neighbourhood can still contribute;
// a vertex that must see a distinct color on every neighbour makes its
// closed neighbourhood an all-different group, filtered by Hall sets.
// Branching is dom/wdeg: vertices whose constraints failed recently are
// preferred, which keeps unsatisfiable cores from being re-explored under
// every unrelated choice above them.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "condcolor/coloring.hpp"
#include "condcolor/graph.hpp"

namespace condcolor::detail {

using Mask = std::uint64_t;

inline constexpr int kMaxSearchColors = 64;
/// Largest closed neighbourhood given all-different (Hall) filtering.
inline constexpr std::size_t kMaxHallGroup = 10;

inline Mask full_mask(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }
inline int mask_size(Mask m) { return std::popcount(m); }
inline Color mask_color(Mask m) { return static_cast<Color>(std::countr_zero(m)); }

class KrSearch {
public:
    /// need[v] is the C2 requirement at v (min{d(v), r} for ordinary use).
    /// Color symmetry is only exploited when every initial domain is full.
    KrSearch(const Graph& g, int k, std::vector<std::uint32_t> need,
             std::vector<Mask> initial_domains, SolverOptions options);

    std::optional<std::vector<Color>> solve();
    std::uint64_t enumerate(const std::function<bool(std::span<const Color>)>& visit);

    const SolverStats& stats() const noexcept { return stats_; }

private:
    struct State {
        std::vector<Mask> dom;
        std::vector<std::uint8_t> fixed;
    };

    bool propagate(State& s, std::span<const Vertex> seeds);
    bool check_c2(State& s, Vertex w);
    bool hall_filter(State& s, Vertex w);
    bool search(State& s, std::vector<Vertex> scope);
    bool enumerate_from(State& s, const std::function<bool(std::span<const Color>)>& visit,
                        std::uint64_t& count, bool& stop);
    Vertex pick_branch_vertex(const State& s, std::span<const Vertex> unfixed) const;
    Mask branch_values(const State& s, Vertex v) const;
    std::vector<std::vector<Vertex>> components(const State& s, std::span<const Vertex> unfixed);
    std::vector<Color> colors_of(const State& s) const;
    std::optional<std::vector<Color>> solve_parallel(State root);
    void push(Vertex v);

    const Graph& g_;
    int k_;
    std::vector<std::uint32_t> need_;
    std::vector<Mask> initial_;
    SolverOptions options_;
    bool symmetric_ = false;
    SolverStats stats_;

    // propagation scratch
    std::vector<Vertex> queue_;
    std::vector<std::uint8_t> queued_;
    // conflict weights (dom/wdeg branching)
    std::vector<std::uint32_t> weight_;
    // component scratch
    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_now_ = 0;
};

}  // namespace condcolor::detail
