#include <gtest/gtest.h>

#include <random>

#include "condcolor/errors.hpp"
#include "condcolor/graph.hpp"
#include "support/oracles.hpp"

using namespace condcolor;

TEST(FromEdgeList, SingleVertexHasNoEdges) {
    const Graph g = Graph::from_edge_list(1, {});
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(FromEdgeList, TriangleIsK3) {
    const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.max_degree(), 2u);
    EXPECT_EQ(g, oracle::complete(3));
}

TEST(FromEdgeList, DuplicatesCollapse) {
    const Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.degree(0), 1u);
}

TEST(FromEdgeList, RejectsSelfLoopAndOutOfRange) {
    EXPECT_THROW(Graph::from_edge_list(2, {{1, 1}}), InputError);
    EXPECT_THROW(Graph::from_edge_list(2, {{0, 2}}), InputError);
}

TEST(Graph, HandshakeLemmaOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracle::random_graph(rng, 1 + rng() % 12, 0.4);
        std::size_t sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            sum += g.degree(v);
            for (Vertex u : g.neighbors(v)) EXPECT_TRUE(g.adjacent(u, v));
        }
        EXPECT_EQ(sum, 2 * g.edge_count());
    }
}

TEST(Graph, EqualityIgnoresLabels) {
    const Graph a = oracle::path(3);
    const Graph b = a.with_labels({VertexRole{RoleKind::backbone_a, 1}, std::nullopt, std::nullopt});
    EXPECT_EQ(a, b);
    EXPECT_EQ(b.label(0)->name(), "a_1");
}

TEST(Graph, WithoutVertexShiftsIds) {
    const Graph w = oracle::wheel(5);
    EXPECT_EQ(w.without_vertex(0), oracle::cycle(5));
}

TEST(TriangleFree, Basics) {
    EXPECT_FALSE(is_triangle_free(oracle::complete(3)));
    EXPECT_TRUE(is_triangle_free(oracle::cycle(4)));
    EXPECT_TRUE(is_triangle_free(oracle::petersen()));
}

TEST(TriangleFree, RandomBipartiteAgreesWithTripleScan) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = 5; b < 10; ++b)
                if (rng() % 2) e.emplace_back(a, b);
        const Graph g = Graph::from_edge_list(10, e);
        EXPECT_TRUE(is_triangle_free(g));
        EXPECT_EQ(is_triangle_free(g), !oracle::has_triangle(g));
    }
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracle::random_graph(rng, 8, 0.35);
        EXPECT_EQ(is_triangle_free(g), !oracle::has_triangle(g));
    }
}

TEST(MaxDegree, Families) {
    EXPECT_EQ(max_degree(oracle::complete(4)), 3u);
    EXPECT_EQ(max_degree(oracle::path(5)), 2u);
    EXPECT_EQ(max_degree(oracle::star(6)), 6u);
    EXPECT_EQ(max_degree(Graph::from_edge_list(3, {})), 0u);
}

TEST(HamiltonianCycle, Examples) {
    EXPECT_TRUE(verify_hamiltonian_cycle(oracle::cycle(5), {{0, 1, 2, 3, 4}}));
    EXPECT_FALSE(verify_hamiltonian_cycle(oracle::path(3), {{0, 1, 2}}));
    EXPECT_TRUE(verify_hamiltonian_cycle(oracle::complete(4), {{0, 2, 1, 3}}));
}

TEST(HamiltonianCycle, MalformedWitnessIsFalseNotError) {
    const Graph c = oracle::cycle(5);
    EXPECT_FALSE(verify_hamiltonian_cycle(c, {{0, 1, 2, 3}}));
    EXPECT_FALSE(verify_hamiltonian_cycle(c, {{0, 1, 2, 3, 3}}));
    EXPECT_FALSE(verify_hamiltonian_cycle(c, {{0, 1, 2, 3, 9}}));
    EXPECT_FALSE(verify_hamiltonian_cycle(oracle::path(2), {{0, 1}}));
}

TEST(HamiltonianCycle, ImpliesMinDegreeTwo) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        auto [g, w] = oracle::random_hamiltonian(rng, 3 + rng() % 6, 0.3);
        ASSERT_TRUE(verify_hamiltonian_cycle(g, w));
        EXPECT_GE(g.min_degree(), 2u);
    }
}

TEST(Subdivide, Families) {
    EXPECT_EQ(subdivide_edge(oracle::complete(3), Edge(0, 1)).edge_count(), 4u);
    EXPECT_EQ(subdivide_edge(oracle::complete(3), Edge(0, 1)).max_degree(), 2u);
    EXPECT_TRUE(verify_hamiltonian_cycle(subdivide_edge(oracle::complete(3), Edge(1, 2)), {{0, 1, 3, 2}}));
    EXPECT_EQ(subdivide_edge(oracle::path(2), Edge(0, 1)), Graph::from_edge_list(3, {{0, 2}, {2, 1}}));
    const Graph c5 = subdivide_edge(oracle::cycle(4), Edge(0, 3));
    EXPECT_EQ(c5.vertex_count(), 5u);
    EXPECT_TRUE(verify_hamiltonian_cycle(c5, {{0, 1, 2, 3, 4}}));
}

TEST(Subdivide, AbsentEdgeIsInputError) {
    EXPECT_THROW(subdivide_edge(oracle::path(3), Edge(0, 2)), InputError);
}

TEST(Subdivide, PreservesTriangleFreeness) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const Graph g = oracle::random_graph(rng, 7, 0.4);
        if (g.edge_count() == 0) continue;
        const Edge e = g.edges()[rng() % g.edge_count()];
        const Graph s = subdivide_edge(g, e);
        EXPECT_EQ(s.vertex_count(), g.vertex_count() + 1);
        EXPECT_EQ(s.edge_count(), g.edge_count() + 1);
        if (is_triangle_free(g)) {
            EXPECT_TRUE(is_triangle_free(s));
        }
    }
}

TEST(DimacsGraph, ParsesExamples) {
    EXPECT_EQ(parse_graph("p edge 2 1\ne 1 2"), oracle::path(2));
    EXPECT_EQ(parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"), oracle::complete(3));
    EXPECT_EQ(parse_graph("p edges 1 0\n").vertex_count(), 1u);
}

TEST(DimacsGraph, ErrorsCarryLineNumbers) {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("p edge 2 x\n"), 1u);
    EXPECT_EQ(line_of("c hi\np edge 2 1\ne 1 3\n"), 3u);
    EXPECT_EQ(line_of("c hi\np edge 3 2\ne 1 2\n"), 2u);
    EXPECT_EQ(line_of("e 1 2\n"), 1u);
    EXPECT_EQ(line_of(""), 1u);
    EXPECT_EQ(line_of("p edge 2 1\ne 1 1\n"), 2u);
}

TEST(DimacsGraph, RoundTripFiftyEdges) {
    std::mt19937_64 rng(50);
    std::vector<std::pair<Vertex, Vertex>> e;
    while (e.size() < 50) {
        const Vertex a = rng() % 20;
        const Vertex b = rng() % 20;
        if (a == b) continue;
        const Edge edge(a, b);
        if (std::find(e.begin(), e.end(), std::make_pair(edge.u, edge.v)) == e.end()) e.emplace_back(edge.u, edge.v);
    }
    const Graph g = Graph::from_edge_list(20, e);
    ASSERT_EQ(g.edge_count(), 50u);
    const Graph back = parse_graph(write_graph(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(write_graph(back), write_graph(g));
}

TEST(HamiltonianWitnessText, RoundTrip) {
    const HamiltonianWitness w{{2, 0, 1, 3}};
    EXPECT_EQ(write_hamiltonian_witness(w), "h 3 1 2 4\n");
    EXPECT_EQ(parse_hamiltonian_witness(write_hamiltonian_witness(w)), w);
    EXPECT_THROW(parse_hamiltonian_witness("h 0 1\n"), ParseError);
    EXPECT_THROW(parse_hamiltonian_witness("c nothing\n"), ParseError);
}

TEST(VertexRole, Names) {
    EXPECT_EQ((VertexRole{RoleKind::literal_pos, 2, 1}.name()), "x_2_1");
    EXPECT_EQ((VertexRole{RoleKind::literal_neg, 2, 3}.name()), "nx_2_3");
    EXPECT_EQ((VertexRole{RoleKind::path_filler, 1, 2, true}.name()), "pnx_1_2");
    EXPECT_EQ((VertexRole{RoleKind::triangle_attach, 4, 3}.name()), "y_4_1");
    EXPECT_EQ((VertexRole{RoleKind::extra_u, 0}.name()), "u");
}
