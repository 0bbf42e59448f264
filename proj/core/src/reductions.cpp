#include "condcolor/reductions.hpp"

#include <algorithm>
#include <cstdlib>

#include "condcolor/errors.hpp"

namespace condcolor {

const char* kind_name(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::clique_attach: return "clique_attach";
        case ReductionKind::sat3_to_32: return "sat3_to_32";
        case ReductionKind::ham_triangle: return "ham_triangle";
        case ReductionKind::planar_ham: return "planar_ham";
    }
    return "?";
}

const Graph& ReductionArtifact::source_graph() const {
    if (const auto* g = std::get_if<Graph>(&source)) return *g;
    throw InputError(std::string("artifact of kind ") + kind_name(kind) + " has no source graph");
}

const CnfFormula& ReductionArtifact::source_formula() const {
    if (const auto* f = std::get_if<CnfFormula>(&source)) return *f;
    throw InputError(std::string("artifact of kind ") + kind_name(kind) + " has no source formula");
}

namespace {

std::map<std::string, Vertex> layout_from_labels(const Graph& g) {
    std::map<std::string, Vertex> layout;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& role = g.label(v);
        if (!role) throw std::logic_error("reduction left vertex " + std::to_string(v) + " unlabeled");
        if (!layout.emplace(role->name(), v).second) {
            throw std::logic_error("reduction produced duplicate role " + role->name());
        }
    }
    return layout;
}

VertexRole role(RoleKind kind, int index, int sub = 0, bool negated = false) {
    return VertexRole{kind, index, sub, negated};
}

}  // namespace

// ---------------------------------------------------------------------------
// k-Col -> (k, r)-Col

ReductionArtifact reduce_kcol_to_krcol(const Graph& g, ColoringParams p) {
    p.validate();
    if (!(2 <= p.r && p.r < p.k)) {
        throw InputError("clique attachment needs 2 <= r < k, got k=" + std::to_string(p.k) +
                         " r=" + std::to_string(p.r));
    }
    const std::size_t n = g.vertex_count();
    const auto r = static_cast<std::size_t>(p.r);

    GraphBuilder b;
    for (Vertex v = 0; v < n; ++v) b.add_vertex(role(RoleKind::plain, static_cast<int>(v) + 1));
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> clique{v};
        for (std::size_t j = 0; j < r; ++j) {
            clique.push_back(b.add_vertex(
                role(RoleKind::clique_attach, static_cast<int>(v) + 1, static_cast<int>(j) + 1)));
        }
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t c = a + 1; c < clique.size(); ++c) b.add_edge(clique[a], clique[c]);
    }

    ReductionArtifact art;
    art.kind = ReductionKind::clique_attach;
    art.graph = std::move(b).build();
    art.layout = layout_from_labels(art.graph);
    art.source = g;
    art.target = p;
    art.original_vertices.resize(n);
    for (Vertex v = 0; v < n; ++v) art.original_vertices[v] = v;
    if (art.graph.vertex_count() != (r + 1) * n) throw std::logic_error("clique attachment size law broken");
    return art;
}

// ---------------------------------------------------------------------------
// 3-SAT -> (3, 2)-Col, triangle-free, maximum degree 3

ReductionArtifact reduce_3sat_to_32col(const CnfFormula& f, const ClauseGadget& gadget) {
    if (!is_normalized(f)) {
        throw InputError("formula is not normalized: every clause needs 3 literals over distinct variables and "
                         "every variable a positive occurrence (run normalize_for_reduction first)");
    }
    ClauseGadget certified = certify(gadget);

    const std::size_t n = f.var_count;
    const std::size_t m = f.clauses.size();

    ReductionArtifact art;
    art.kind = ReductionKind::sat3_to_32;
    art.source = f;
    art.target = {3, 2};

    GraphBuilder b;
    for (std::size_t i = 1; i <= 6 * n - 1; ++i) {
        art.a_path.push_back(b.add_vertex(role(RoleKind::backbone_a, static_cast<int>(i))));
    }
    for (std::size_t i = 1; i <= 3 * m - 2; ++i) {
        art.b_path.push_back(b.add_vertex(role(RoleKind::backbone_b, static_cast<int>(i))));
    }
    for (std::size_t i = 0; i + 1 < art.a_path.size(); ++i) b.add_edge(art.a_path[i], art.a_path[i + 1]);
    for (std::size_t i = 0; i + 1 < art.b_path.size(); ++i) b.add_edge(art.b_path[i], art.b_path[i + 1]);
    b.add_edge(art.a_path.front(), art.b_path.front());

    // occurrence counts t_i and t̄_i
    art.blocks.resize(n);
    for (const auto& clause : f.clauses) {
        for (Literal lit : clause) {
            auto& blk = art.blocks[static_cast<std::size_t>(std::abs(lit) - 1)];
            (lit > 0 ? blk.positive_occurrences : blk.negative_occurrences)++;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        auto& blk = art.blocks[i];
        const int var = static_cast<int>(i) + 1;
        const std::size_t pos_len = 3 * blk.positive_occurrences - 2;
        const std::size_t neg_len = 3 * blk.negative_occurrences + 2;
        // the (3j-2)-th vertex of each path is the marked x_{i_j} / x̄_{i_j}
        for (std::size_t p = 1; p <= pos_len; ++p) {
            const int pi = static_cast<int>(p);
            blk.positive_path.push_back(b.add_vertex(p % 3 == 1 ? role(RoleKind::literal_pos, var, (pi + 2) / 3)
                                                                : role(RoleKind::path_filler, var, pi, false)));
        }
        for (std::size_t q = 1; q <= neg_len; ++q) {
            const int qi = static_cast<int>(q);
            blk.negative_path.push_back(b.add_vertex(q % 3 == 1 ? role(RoleKind::literal_neg, var, (qi + 2) / 3)
                                                                : role(RoleKind::path_filler, var, qi, true)));
        }
        for (std::size_t p = 0; p + 1 < pos_len; ++p) b.add_edge(blk.positive_path[p], blk.positive_path[p + 1]);
        for (std::size_t q = 0; q + 1 < neg_len; ++q) b.add_edge(blk.negative_path[q], blk.negative_path[q + 1]);
        b.add_edge(blk.positive_path.back(), blk.negative_path.front());  // x_{i_{t_i}} - x̄_{i_1}
        b.add_edge(blk.positive_path.front(), art.a_path[6 * (i + 1) - 5 - 1]);  // x_{i_1} - a_{6i-5}
        b.add_edge(blk.negative_path.front(), art.a_path[6 * (i + 1) - 2 - 1]);  // x̄_{i_1} - a_{6i-2}
    }

    const std::size_t inner = certified.inner.vertex_count();
    std::vector<std::size_t> pos_seen(n, 0);
    std::vector<std::size_t> neg_seen(n, 0);
    for (std::size_t l = 0; l < m; ++l) {
        const int clause = static_cast<int>(l) + 1;
        std::vector<Vertex> ids(inner);
        for (Vertex h = 0; h < inner; ++h) {
            ids[h] = b.add_vertex(h == certified.output ? role(RoleKind::gadget_output, clause)
                                                        : role(RoleKind::gadget_internal, clause, static_cast<int>(h)));
        }
        for (const Edge& e : certified.inner.edges()) b.add_edge(ids[e.u], ids[e.v]);
        b.add_edge(ids[certified.output], art.b_path[3 * (l + 1) - 2 - 1]);  // v_l - b_{3l-2}

        std::array<Vertex, 3> literal_vertices{};
        for (std::size_t slot = 0; slot < 3; ++slot) {
            const Literal lit = f.clauses[l][slot];
            const auto i = static_cast<std::size_t>(std::abs(lit) - 1);
            Vertex lv;
            if (lit > 0) {
                const std::size_t j = ++pos_seen[i];  // j-th positive occurrence -> x_{i_j}
                lv = art.blocks[i].positive_path[3 * j - 3];
            } else {
                const std::size_t j = ++neg_seen[i];  // j-th negative occurrence -> x̄_{i_{j+1}}
                lv = art.blocks[i].negative_path[3 * (j + 1) - 3];
            }
            literal_vertices[slot] = lv;
            b.add_edge(lv, ids[certified.ports[slot]]);
        }
        art.clause_literal_vertices.push_back(literal_vertices);
        art.gadget_vertices.push_back(std::move(ids));
    }

    art.graph = std::move(b).build();
    art.layout = layout_from_labels(art.graph);
    art.gadget = std::move(certified);
    if (art.graph.max_degree() > 3 || !is_triangle_free(art.graph)) {
        throw std::logic_error("3-SAT construction broke its structural contract (max degree 3, triangle-free)");
    }
    return art;
}

ConditionalColoring lift_assignment(const ReductionArtifact& art, const Assignment& a) {
    if (art.kind != ReductionKind::sat3_to_32) throw InputError("lift_assignment needs a sat3_to_32 artifact");
    const CnfFormula& f = art.source_formula();
    if (!evaluate(f, a)) throw InputError("assignment does not satisfy the source formula");

    std::vector<Color> c(art.graph.vertex_count(), 0);
    // backbone: a_i = 2,1,0,2,1,0,... and b_i = 0,1,2,0,1,2,...
    static constexpr Color a_cycle[3] = {2, 1, 0};
    static constexpr Color b_cycle[3] = {0, 1, 2};
    for (std::size_t i = 0; i < art.a_path.size(); ++i) c[art.a_path[i]] = a_cycle[i % 3];
    for (std::size_t i = 0; i < art.b_path.size(); ++i) c[art.b_path[i]] = b_cycle[i % 3];

    for (std::size_t i = 0; i < art.blocks.size(); ++i) {
        const Color lit = a.values[i] ? 1 : 0;
        const Color neg = 1 - lit;
        const auto& blk = art.blocks[i];
        const Color pos_cycle[3] = {lit, neg, 2};
        const Color neg_cycle[3] = {neg, lit, 2};
        for (std::size_t p = 0; p < blk.positive_path.size(); ++p) c[blk.positive_path[p]] = pos_cycle[p % 3];
        for (std::size_t q = 0; q < blk.negative_path.size(); ++q) c[blk.negative_path[q]] = neg_cycle[q % 3];
    }

    const ClauseGadget& gadget = *art.gadget;
    for (std::size_t l = 0; l < art.gadget_vertices.size(); ++l) {
        StubPattern stubs{};
        for (std::size_t slot = 0; slot < 3; ++slot) stubs[slot] = c[art.clause_literal_vertices[l][slot]];
        const auto it = gadget.witness_table.find(stubs);
        if (it == gadget.witness_table.end()) {
            throw std::logic_error("no gadget witness for clause " + std::to_string(l + 1));
        }
        for (std::size_t h = 0; h < it->second.size(); ++h) c[art.gadget_vertices[l][h]] = it->second[h];
    }

    ConditionalColoring out{std::move(c), {3, 2}};
    const Verdict verdict = verify_coloring(art.graph, out);
    if (!verdict.ok()) {
        throw std::logic_error("lifted coloring fails verification: " + verdict.violations.front().detail);
    }
    return out;
}

Assignment extract_assignment(const ReductionArtifact& art, const ConditionalColoring& c) {
    if (art.kind != ReductionKind::sat3_to_32) throw InputError("extract_assignment needs a sat3_to_32 artifact");
    if (c.colors.size() != art.graph.vertex_count()) throw InputError("coloring does not cover the reduction output");
    if (std::any_of(c.colors.begin(), c.colors.end(), [](Color x) { return x >= 3; })) {
        throw InputError("coloring uses more than 3 colors");
    }
    const Verdict verdict = verify_coloring(art.graph, {c.colors, {3, 2}});
    if (!verdict.ok()) throw InputError("not a valid (3,2)-coloring: " + verdict.violations.front().detail);

    // rename colors so that a_1 -> 2, b_1 -> 0 and the remaining color -> 1
    const Color ca = c.colors[art.a_path.front()];
    const Color cb = c.colors[art.b_path.front()];
    Color rename[3];
    rename[ca] = 2;
    rename[cb] = 0;
    rename[3 - ca - cb] = 1;

    Assignment a;
    a.values.resize(art.blocks.size());
    for (std::size_t i = 0; i < art.blocks.size(); ++i) {
        a.values[i] = rename[c.colors[art.blocks[i].positive_path.front()]] == 1;
    }
    if (!evaluate(art.source_formula(), a)) {
        throw std::logic_error("extracted assignment does not satisfy the source formula");
    }
    return a;
}

// ---------------------------------------------------------------------------
// hamiltonian 3-Col -> (3, 2)-Col

ReductionArtifact reduce_ham_3col_to_32col(const Graph& g, const HamiltonianWitness& w) {
    if (!verify_hamiltonian_cycle(g, w)) throw InputError("hamiltonian witness does not validate");
    const std::size_t n = g.vertex_count();

    // v_i keeps its id; x_{i1}, x_{i2} hang off cycle position i
    GraphBuilder b;
    for (Vertex v = 0; v < n; ++v) b.add_vertex();
    for (std::size_t i = 0; i < n; ++i) b.set_label(w.order[i], role(RoleKind::plain, static_cast<int>(i) + 1));
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);

    std::vector<Vertex> x1(n);
    std::vector<Vertex> x2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int pos = static_cast<int>(i) + 1;
        x1[i] = b.add_vertex(role(RoleKind::triangle_attach, pos, 1));
        x2[i] = b.add_vertex(role(RoleKind::triangle_attach, pos, 2));
        b.add_edge(w.order[i], x1[i]);
        b.add_edge(x1[i], x2[i]);
        b.add_edge(x2[i], w.order[i]);
    }
    // pair links x_{(2j-1)2} x_{(2j)1}; 0-based that is x2[2j] - x1[2j+1]
    const std::size_t paired = n % 2 == 0 ? n : n - 1;
    for (std::size_t i = 0; i + 1 < paired; i += 2) b.add_edge(x2[i], x1[i + 1]);

    std::optional<Vertex> u;
    if (n % 2 == 1) {
        u = b.add_vertex(role(RoleKind::extra_u, 0));
        b.add_edge(x1[n - 1], *u);
        b.add_edge(x2[n - 1], *u);
        b.add_edge(x2[n - 2], *u);
    }

    ReductionArtifact art;
    art.kind = ReductionKind::ham_triangle;
    art.graph = std::move(b).build();
    art.layout = layout_from_labels(art.graph);
    art.source = g;
    art.target = {3, 2};
    art.original_vertices.resize(n);
    for (Vertex v = 0; v < n; ++v) art.original_vertices[v] = v;

    // Route: each linked pair (i, i+1) is walked as
    //   v_i x_{i1} x_{i2} x_{(i+1)1} x_{(i+1)2} v_{i+1}
    // and consecutive pairs are joined by the host edge v_{i+1} v_{i+2}.
    // For odd n the last pair detours through u:
    //   v_{n-2} x x x_{(n-1)1} v_{n-1} x_{(n-1)2} u x_{n1} x_{n2} v_n
    HamiltonianWitness out;
    const std::size_t full_pairs = n % 2 == 0 ? n / 2 : (n - 1) / 2 - 1;
    for (std::size_t p = 0; p < full_pairs; ++p) {
        const std::size_t i = 2 * p;
        out.order.insert(out.order.end(), {w.order[i], x1[i], x2[i], x1[i + 1], x2[i + 1], w.order[i + 1]});
    }
    if (n % 2 == 1) {
        const std::size_t i = n - 3;
        out.order.insert(out.order.end(), {w.order[i], x1[i], x2[i], x1[i + 1], w.order[i + 1], x2[i + 1], *u,
                                           x1[i + 2], x2[i + 2], w.order[i + 2]});
    }
    if (!verify_hamiltonian_cycle(art.graph, out)) {
        throw std::logic_error("constructed hamiltonian cycle of the triangle reduction does not validate");
    }
    art.ham_witness = std::move(out);
    return art;
}

// ---------------------------------------------------------------------------
// planar hamiltonian 3-Col -> (3, 2)-Col

ReductionArtifact reduce_planar_ham_3col_to_32col(const Graph& g, const HamiltonianWitness& w) {
    if (!verify_hamiltonian_cycle(g, w)) throw InputError("hamiltonian witness does not validate");
    const std::size_t n = g.vertex_count();

    GraphBuilder b;
    for (Vertex v = 0; v < n; ++v) b.add_vertex();
    for (std::size_t i = 0; i < n; ++i) b.set_label(w.order[i], role(RoleKind::plain, static_cast<int>(i) + 1));
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);

    // cycle edge v_i v_{i+1}: triangles v_i x_{i1} x_{i2} and v_{i+1} y_{(i+1)1} y_{(i+1)2}, linked by x_{i2} y_{(i+1)1}
    HamiltonianWitness out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        const Vertex vi = w.order[i];
        const Vertex vn = w.order[next];
        const int pos = static_cast<int>(i) + 1;
        const int npos = static_cast<int>(next) + 1;
        const Vertex xa = b.add_vertex(role(RoleKind::triangle_attach, pos, 1));
        const Vertex xb = b.add_vertex(role(RoleKind::triangle_attach, pos, 2));
        const Vertex ya = b.add_vertex(role(RoleKind::triangle_attach, npos, 3));
        const Vertex yb = b.add_vertex(role(RoleKind::triangle_attach, npos, 4));
        b.add_edge(xa, vi);
        b.add_edge(xb, vi);
        b.add_edge(xa, xb);
        b.add_edge(ya, vn);
        b.add_edge(yb, vn);
        b.add_edge(ya, yb);
        b.add_edge(xb, ya);
        out.order.insert(out.order.end(), {vi, xa, xb, ya, yb});
    }

    ReductionArtifact art;
    art.kind = ReductionKind::planar_ham;
    art.graph = std::move(b).build();
    art.layout = layout_from_labels(art.graph);
    art.source = g;
    art.target = {3, 2};
    art.original_vertices.resize(n);
    for (Vertex v = 0; v < n; ++v) art.original_vertices[v] = v;
    if (art.graph.vertex_count() != 5 * n || art.graph.edge_count() != g.edge_count() + 7 * n) {
        throw std::logic_error("planar construction size law broken");
    }
    if (!verify_hamiltonian_cycle(art.graph, out)) {
        throw std::logic_error("constructed hamiltonian cycle of the planar reduction does not validate");
    }
    art.ham_witness = std::move(out);
    return art;
}

ConditionalColoring project_coloring(const ReductionArtifact& art, const ConditionalColoring& c) {
    if (art.kind == ReductionKind::sat3_to_32) {
        throw InputError("project_coloring does not apply to sat3_to_32 artifacts (use extract_assignment)");
    }
    if (!verify_coloring(art.graph, c).ok()) throw InputError("coloring is not valid on the reduction output");
    ConditionalColoring out;
    out.params = {c.params.k, 1};
    for (Vertex v : art.original_vertices) out.colors.push_back(c.colors[v]);
    if (!is_proper_coloring(art.source_graph(), out.colors)) {
        throw std::logic_error("projected coloring is not proper on the source graph");
    }
    return out;
}

}  // namespace condcolor
