#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace condcolor {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class RoleKind {
    plain,
    backbone_a,
    backbone_b,
    literal_pos,
    literal_neg,
    path_filler,
    gadget_internal,
    gadget_output,
    triangle_attach,
    clique_attach,
    extra_u,
};

/// Name of a construction vertex. Indices are 1-based, following the usual
/// a_1, b_1, x_{i_j} numbering of the constructions that emit them.
///
///   backbone_a / backbone_b   index = position on the path
///   literal_pos / literal_neg index = variable, sub = occurrence slot j
///   path_filler               index = variable, sub = path position, negated selects P_{x̄}
///   gadget_internal           index = clause, sub = local inner id (0-based)
///   gadget_output             index = clause
///   triangle_attach           index = host cycle position, sub = side (1,2: x pair; 3,4: y pair)
///   clique_attach             index = source vertex, sub = clique member
///   plain                     index = cycle position / source vertex (1-based)
struct VertexRole {
    RoleKind kind = RoleKind::plain;
    int index = 0;
    int sub = 0;
    bool negated = false;

    /// Layout key, e.g. "a_3", "x_2_1", "nx_2_1", "px_1_2", "h_4_0", "v_4", "u".
    std::string name() const;

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Immutable simple undirected graph on vertices [0, vertex_count).
///
/// Structural equality ignores labels; labels are a decoration carried
/// alongside for reductions and artifact layouts.
class Graph {
public:
    Graph() = default;

    /// Deduplicates edges; throws InputError on self-loops or endpoints >= n.
    static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
    static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Sorted, canonical edge list.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;
    bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

    std::size_t max_degree() const noexcept;
    std::size_t min_degree() const noexcept;

    const std::optional<VertexRole>& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::optional<VertexRole>>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::optional<VertexRole>> labels) const;

    /// G - v. Ids above v shift down by one; labels are dropped.
    Graph without_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
    }

private:
    friend class GraphBuilder;

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::optional<VertexRole>> labels_;
};

/// Incremental construction used by the reductions. Unlike from_edge_list it
/// treats a repeated edge as a construction bug.
class GraphBuilder {
public:
    Vertex add_vertex(std::optional<VertexRole> role = std::nullopt);
    /// Copies every vertex, edge and label of g; returns the id offset.
    Vertex add_graph(const Graph& g);
    void add_edge(Vertex a, Vertex b);
    void set_label(Vertex v, VertexRole role);
    std::size_t vertex_count() const noexcept { return labels_.size(); }

    Graph build() &&;

private:
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::vector<std::optional<VertexRole>> labels_;
};

/// Cyclic vertex order claimed to be a hamiltonian cycle.
struct HamiltonianWitness {
    std::vector<Vertex> order;

    friend bool operator==(const HamiltonianWitness&, const HamiltonianWitness&) = default;
};

bool is_triangle_free(const Graph& g);
std::size_t max_degree(const Graph& g);

/// True iff w visits every vertex exactly once and each cyclically
/// consecutive pair is an edge. Needs at least three vertices.
bool verify_hamiltonian_cycle(const Graph& g, const HamiltonianWitness& w);

/// Replaces e by a path of length two through a new vertex with id
/// vertex_count(). Throws InputError when e is not an edge of g.
Graph subdivide_edge(const Graph& g, Edge e);

/// DIMACS edge format: "c" comments, "p edge n m", then m lines "e u v" with
/// 1-based ids. Throws ParseError.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

/// "h v1 v2 ... vn" with 1-based ids.
HamiltonianWitness parse_hamiltonian_witness(std::string_view text);
std::string write_hamiltonian_witness(const HamiltonianWitness& w);

}  // namespace condcolor
