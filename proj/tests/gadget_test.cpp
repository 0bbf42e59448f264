#include <gtest/gtest.h>

#include <set>

#include "condcolor/errors.hpp"
#include "condcolor/gadget.hpp"
#include "support/fixture.hpp"
#include "support/oracles.hpp"

using namespace condcolor;

namespace {

std::string fixture_text() { return fixture::read_file(fixture::gadget_path()); }

// Gadget plus stubs s1..s3 (ids n..n+2) and t (id n+3) as one graph.
Graph with_stubs(const ClauseGadget& g) {
    const auto n = static_cast<Vertex>(g.inner.vertex_count());
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& x : g.inner.edges()) e.emplace_back(x.u, x.v);
    for (Vertex i = 0; i < 3; ++i) e.emplace_back(g.ports[i], n + i);
    e.emplace_back(g.output, n + 3);
    return Graph::from_edge_list(n + 4, e);
}

// C1 everywhere, C2 (r = 2) at inner vertices only.
bool boundary_valid(const Graph& h, std::size_t inner, const std::vector<Color>& c) {
    for (const Edge& e : h.edges())
        if (c[e.u] == c[e.v]) return false;
    for (Vertex v = 0; v < inner; ++v) {
        std::set<Color> seen;
        for (Vertex u : h.neighbors(v)) seen.insert(c[u]);
        if (seen.size() < std::min<std::size_t>(h.degree(v), 2)) return false;
    }
    return true;
}

struct NaiveReport {
    bool p1 = true;
    bool p1_nonvacuous = false;
    bool p2 = true;
};

NaiveReport naive_certify(const ClauseGadget& g) {
    const Graph h = with_stubs(g);
    const std::size_t n = g.inner.vertex_count();
    NaiveReport rep;
    for (int pattern = 0; pattern < 8; ++pattern) {
        const Color s[3] = {Color(pattern & 1), Color(pattern >> 1 & 1), Color(pattern >> 2 & 1)};
        bool reaches_one = false;
        for (Color t = 0; t < 3; ++t) {
            if (pattern != 0 && t != 0) continue;
            oracle::exists_coloring(n, 3, [&](const std::vector<Color>& inner) {
                std::vector<Color> c = inner;
                c.insert(c.end(), {s[0], s[1], s[2], t});
                if (!boundary_valid(h, n, c)) return false;
                if (pattern == 0) {
                    rep.p1_nonvacuous = true;
                    if (inner[g.output] != 0) rep.p1 = false;
                    return !rep.p1;
                }
                if (inner[g.output] == 1) reaches_one = true;
                return reaches_one;
            });
        }
        if (pattern != 0 && !reaches_one) rep.p2 = false;
    }
    return rep;
}

}  // namespace

TEST(ClauseGadget, FixtureCertifies) {
    const ClauseGadget g = parse_gadget_json(fixture_text());
    const GadgetReport rep = verify_clause_gadget(g);
    EXPECT_TRUE(rep.property1_holds);
    EXPECT_TRUE(rep.property2_holds);
    EXPECT_TRUE(rep.stored_witnesses_valid);
    EXPECT_FALSE(rep.counterexample);
    EXPECT_EQ(rep.certificate.size(), 8u);
    EXPECT_EQ(rep.witnesses.size(), 7u);
}

TEST(ClauseGadget, FixtureAgreesWithNaiveEnumeration) {
    const ClauseGadget g = parse_gadget_json(fixture_text());
    const NaiveReport naive = naive_certify(g);
    EXPECT_TRUE(naive.p1);
    EXPECT_TRUE(naive.p1_nonvacuous);
    EXPECT_TRUE(naive.p2);
}

TEST(ClauseGadget, FixtureStructure) {
    const ClauseGadget g = parse_gadget_json(fixture_text());
    EXPECT_NO_THROW(check_gadget_structure(g));
    EXPECT_TRUE(is_triangle_free(g.inner));
    EXPECT_LE(g.inner.max_degree(), 3u);
    for (Vertex p : g.ports) EXPECT_LE(g.inner.degree(p), 2u);
    EXPECT_LE(g.inner.degree(g.output), 2u);
    // with stubs attached the degree bound still holds
    EXPECT_LE(with_stubs(g).max_degree(), 3u);
    EXPECT_TRUE(is_triangle_free(with_stubs(g)));
}

TEST(ClauseGadget, StoredWitnessesValidate) {
    const ClauseGadget g = parse_gadget_json(fixture_text());
    ASSERT_EQ(g.witness_table.size(), 7u);
    const Graph h = with_stubs(g);
    for (const auto& [stubs, inner] : g.witness_table) {
        EXPECT_TRUE(gadget_coloring_valid(g, stubs, 0, inner));
        EXPECT_EQ(inner[g.output], 1u);
        std::vector<Color> c = inner;
        c.insert(c.end(), {stubs[0], stubs[1], stubs[2], 0});
        EXPECT_TRUE(boundary_valid(h, g.inner.vertex_count(), c));
    }
}

TEST(ClauseGadget, VerificationIsReproducible) {
    const ClauseGadget g = parse_gadget_json(fixture_text());
    const auto a = verify_clause_gadget(g);
    const auto b = verify_clause_gadget(g, 4);
    EXPECT_EQ(write_gadget_json(g, a), write_gadget_json(g, b));
}

TEST(ClauseGadget, JsonRoundTrip) {
    const ClauseGadget g = parse_gadget_json(fixture_text());
    const ClauseGadget back = parse_gadget_json(write_gadget_json(g, verify_clause_gadget(g)));
    EXPECT_EQ(back, g);
    EXPECT_EQ(gadget_digest(back), gadget_digest(g));
}

TEST(ClauseGadget, TriangleIsInputError) {
    ClauseGadget g;
    g.inner = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    g.ports = {0, 1, 3};
    g.output = 2;
    EXPECT_THROW(check_gadget_structure(g), InputError);
    EXPECT_THROW(verify_clause_gadget(g), InputError);
}

TEST(ClauseGadget, SharedPortIsInputError) {
    ClauseGadget g;
    g.inner = oracle::path(4);
    g.ports = {0, 0, 3};
    g.output = 1;
    EXPECT_THROW(verify_clause_gadget(g), InputError);
}

TEST(ClauseGadget, DegenerateGadgetReportIsReproducible) {
    // ports and output on a path: certification runs and gives the same verdict twice
    ClauseGadget g;
    g.inner = oracle::path(4);
    g.ports = {0, 1, 2};
    g.output = 3;
    const auto a = verify_clause_gadget(g);
    const auto b = verify_clause_gadget(g);
    EXPECT_EQ(a.property1_holds, b.property1_holds);
    EXPECT_EQ(a.property2_holds, b.property2_holds);
    const NaiveReport naive = naive_certify(g);
    EXPECT_EQ(a.property2_holds, naive.p2);
    EXPECT_FALSE(a.ok());
}

TEST(ClauseGadget, CorruptedWitnessFails) {
    ClauseGadget g = parse_gadget_json(fixture_text());
    auto& entry = g.witness_table.begin()->second;
    entry[g.output] = 0;
    const auto rep = verify_clause_gadget(g);
    EXPECT_FALSE(rep.stored_witnesses_valid);
    EXPECT_FALSE(rep.ok());
    EXPECT_THROW(certify(g), InputError);
}

TEST(ClauseGadget, DroppingAnEdgeIsCaughtWheneverNaiveEnumerationObjects) {
    const ClauseGadget base = parse_gadget_json(fixture_text());
    int broken = 0;
    for (const Edge& drop : base.inner.edges()) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (const Edge& x : base.inner.edges())
            if (!(x == drop)) e.emplace_back(x.u, x.v);
        ClauseGadget g = base;
        g.inner = Graph::from_edge_list(base.inner.vertex_count(), e);
        g.witness_table.clear();
        const auto rep = verify_clause_gadget(g);
        const NaiveReport naive = naive_certify(g);
        EXPECT_EQ(rep.property2_holds, naive.p2);
        if (naive.p1_nonvacuous) {
            EXPECT_EQ(rep.property1_holds, naive.p1);
        }
        if (!rep.ok()) {
            ++broken;
            EXPECT_TRUE(rep.counterexample);
        }
    }
    EXPECT_GT(broken, 0);
}

TEST(Synthesis, DeterministicInSeedAndLimits) {
    SynthesisLimits limits;
    limits.max_inner = 12;
    limits.seed = 1;
    SynthesisInfo info_a, info_b;
    const ClauseGadget a = synthesize_clause_gadget(limits, &info_a);
    const ClauseGadget b = synthesize_clause_gadget(limits, &info_b);
    EXPECT_EQ(a, b);
    EXPECT_EQ(info_a.attempts, info_b.attempts);
    EXPECT_EQ(write_gadget_json(a, verify_clause_gadget(a), info_a), write_gadget_json(b, verify_clause_gadget(b), info_b));
    EXPECT_TRUE(verify_clause_gadget(a).ok());
}

TEST(Synthesis, ShippedFixtureIsTheDefaultSeedResult) {
    const ClauseGadget shipped = parse_gadget_json(fixture_text());
    SynthesisInfo info;
    const ClauseGadget fresh = synthesize_clause_gadget(SynthesisLimits{}, &info);
    EXPECT_EQ(gadget_digest(fresh), gadget_digest(shipped));
    EXPECT_EQ(write_gadget_json(fresh, verify_clause_gadget(fresh), info), fixture_text());
}

TEST(Synthesis, OneVertexLimitFails) {
    SynthesisLimits limits;
    limits.max_inner = 1;
    limits.budget = 1000;
    EXPECT_THROW(synthesize_clause_gadget(limits), SynthesisError);
}
