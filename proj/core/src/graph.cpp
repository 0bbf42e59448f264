#include "condcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "condcolor/errors.hpp"
#include "text_lines.hpp"

namespace condcolor {

std::string VertexRole::name() const {
    const auto i = std::to_string(index);
    const auto j = std::to_string(sub);
    switch (kind) {
        case RoleKind::plain: return "v_" + i;
        case RoleKind::backbone_a: return "a_" + i;
        case RoleKind::backbone_b: return "b_" + i;
        case RoleKind::literal_pos: return "x_" + i + "_" + j;
        case RoleKind::literal_neg: return "nx_" + i + "_" + j;
        case RoleKind::path_filler: return (negated ? "pnx_" : "px_") + i + "_" + j;
        case RoleKind::gadget_internal: return "h_" + i + "_" + j;
        case RoleKind::gadget_output: return "v_" + i;
        case RoleKind::triangle_attach:
            // sides 1,2 are the x-pair of a position, 3,4 the y-pair (planar construction)
            if (sub >= 3) return "y_" + i + "_" + std::to_string(sub - 2);
            return "x_" + i + "_" + j;
        case RoleKind::clique_attach: return "k_" + i + "_" + j;
        case RoleKind::extra_u: return "u";
    }
    return "?";
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    Graph g;
    g.adjacency_.resize(n);
    g.labels_.resize(n);
    g.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a >= n || b >= n) {
            throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        g.edges_.emplace_back(a, b);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
}

std::size_t Graph::min_degree() const noexcept {
    if (adjacency_.empty()) return 0;
    std::size_t best = adjacency_.front().size();
    for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
    return best;
}

Graph Graph::with_labels(std::vector<std::optional<VertexRole>> labels) const {
    if (labels.size() != vertex_count()) throw InputError("label vector size does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::without_vertex(Vertex v) const {
    if (v >= vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const Edge& e : edges_) {
        if (e.u == v || e.v == v) continue;
        pairs.emplace_back(shift(e.u), shift(e.v));
    }
    return from_edge_list(vertex_count() - 1, pairs);
}

Vertex GraphBuilder::add_vertex(std::optional<VertexRole> role) {
    labels_.push_back(std::move(role));
    return static_cast<Vertex>(labels_.size() - 1);
}

Vertex GraphBuilder::add_graph(const Graph& g) {
    const auto offset = static_cast<Vertex>(labels_.size());
    for (const auto& label : g.labels()) labels_.push_back(label);
    for (const Edge& e : g.edges()) pairs_.emplace_back(e.u + offset, e.v + offset);
    return offset;
}

void GraphBuilder::add_edge(Vertex a, Vertex b) { pairs_.emplace_back(a, b); }

void GraphBuilder::set_label(Vertex v, VertexRole role) { labels_.at(v) = role; }

Graph GraphBuilder::build() && {
    Graph g = Graph::from_edge_list(labels_.size(), pairs_);
    if (g.edge_count() != pairs_.size()) throw std::logic_error("GraphBuilder: duplicate edge");
    g.labels_ = std::move(labels_);
    return g;
}

bool is_triangle_free(const Graph& g) {
    // For each edge (u,v) with u < v, look for a common neighbour via a merge.
    for (const Edge& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j) return false;
            if (*i < *j) ++i; else ++j;
        }
    }
    return true;
}

std::size_t max_degree(const Graph& g) { return g.max_degree(); }

bool verify_hamiltonian_cycle(const Graph& g, const HamiltonianWitness& w) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || w.order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (Vertex v : w.order) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.adjacent(w.order[i], w.order[(i + 1) % n])) return false;
    }
    return true;
}

Graph subdivide_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) {
        throw InputError("cannot subdivide (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "): not an edge");
    }
    const auto mid = static_cast<Vertex>(g.vertex_count());
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.edge_count() + 1);
    for (const Edge& f : g.edges()) {
        if (f != e) pairs.emplace_back(f.u, f.v);
    }
    pairs.emplace_back(e.u, mid);
    pairs.emplace_back(mid, e.v);
    return Graph::from_edge_list(g.vertex_count() + 1, pairs);
}

Graph parse_graph(std::string_view text) {
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t header_line = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    detail::for_each_line(text, [&](std::size_t line_no, std::vector<std::string_view> tok) {
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "edges")) {
                throw ParseError(line_no, "expected \"p edge <vertices> <edges>\"");
            }
            n = detail::parse_count(tok[2], line_no);
            m = detail::parse_count(tok[3], line_no);
            have_header = true;
            header_line = line_no;
            return;
        }
        if (tok[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge line before problem line");
            if (tok.size() != 3) throw ParseError(line_no, "expected \"e <u> <v>\"");
            const auto a = detail::parse_count(tok[1], line_no);
            const auto b = detail::parse_count(tok[2], line_no);
            if (a < 1 || a > n || b < 1 || b > n) {
                throw ParseError(line_no, "vertex id out of range [1," + std::to_string(n) + "]");
            }
            if (a == b) throw ParseError(line_no, "self-loop");
            pairs.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
            return;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    });

    if (!have_header) throw ParseError(1, "missing \"p edge\" problem line");
    if (pairs.size() != m) {
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(pairs.size()));
    }
    return Graph::from_edge_list(n, pairs);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

HamiltonianWitness parse_hamiltonian_witness(std::string_view text) {
    HamiltonianWitness w;
    bool found = false;
    detail::for_each_line(text, [&](std::size_t line_no, std::vector<std::string_view> tok) {
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] != "h") throw ParseError(line_no, "expected \"h v1 v2 ... vn\"");
        if (found) throw ParseError(line_no, "duplicate witness line");
        found = true;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            const auto v = detail::parse_count(tok[i], line_no);
            if (v < 1) throw ParseError(line_no, "vertex ids are 1-based");
            w.order.push_back(static_cast<Vertex>(v - 1));
        }
    });
    if (!found) throw ParseError(1, "no \"h\" witness line");
    return w;
}

std::string write_hamiltonian_witness(const HamiltonianWitness& w) {
    std::ostringstream out;
    out << 'h';
    for (Vertex v : w.order) out << ' ' << v + 1;
    out << '\n';
    return out.str();
}

}  // namespace condcolor
