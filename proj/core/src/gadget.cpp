#include "condcolor/gadget.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>

#include "condcolor/errors.hpp"

namespace condcolor {

namespace {

constexpr Color kColors = 3;
constexpr std::size_t kOrder = 2;

// Depth-first walk over inner colorings in lexicographic order (vertex 0
// first, colors ascending). A constraint is checked as soon as every vertex
// it mentions has a color, so each pruned subtree holds only invalid
// colorings and every valid one is reached exactly once.
class BoundaryEnumerator {
public:
    BoundaryEnumerator(const ClauseGadget& g, const StubPattern& stubs, Color output_stub) : g_(g) {
        const std::size_t n = g.inner.vertex_count();
        stub_.assign(n, {});
        for (std::size_t i = 0; i < 3; ++i) stub_[g.ports[i]].push_back(stubs[i]);
        stub_[g.output].push_back(output_stub);

        c2_at_.assign(n, {});
        for (Vertex w = 0; w < n; ++w) {
            const auto nbrs = g.inner.neighbors(w);
            if (nbrs.empty()) {
                stub_only_.push_back(w);
            } else {
                c2_at_[*std::max_element(nbrs.begin(), nbrs.end())].push_back(w);
            }
        }
        colors_.assign(n, 0);
    }

    /// visit returns false to stop.
    void run(const std::function<bool(const std::vector<Color>&)>& visit) {
        for (Vertex w : stub_only_) {
            if (!c2_holds(w)) return;
        }
        stop_ = false;
        descend(0, visit);
    }

private:
    bool c2_holds(Vertex w) const {
        const std::size_t degree = g_.inner.degree(w) + stub_[w].size();
        const std::size_t need = std::min(degree, kOrder);
        bool seen[kColors] = {false, false, false};
        std::size_t distinct = 0;
        auto mark = [&](Color c) {
            if (!seen[c]) {
                seen[c] = true;
                ++distinct;
            }
        };
        for (Vertex u : g_.inner.neighbors(w)) mark(colors_[u]);
        for (Color s : stub_[w]) mark(s);
        return distinct >= need;
    }

    void descend(Vertex i, const std::function<bool(const std::vector<Color>&)>& visit) {
        if (i == colors_.size()) {
            if (!visit(colors_)) stop_ = true;
            return;
        }
        for (Color c = 0; c < kColors && !stop_; ++c) {
            colors_[i] = c;
            bool ok = true;
            for (Vertex u : g_.inner.neighbors(i)) {
                if (u < i && colors_[u] == c) ok = false;
            }
            for (Color s : stub_[i]) ok = ok && s != c;
            for (Vertex w : c2_at_[i]) ok = ok && c2_holds(w);
            if (ok) descend(i + 1, visit);
        }
    }

    const ClauseGadget& g_;
    std::vector<std::vector<Color>> stub_;
    std::vector<std::vector<Vertex>> c2_at_;
    std::vector<Vertex> stub_only_;
    std::vector<Color> colors_;
    bool stop_ = false;
};

std::vector<StubPattern> nonzero_patterns() {
    std::vector<StubPattern> out;
    for (Color bits = 1; bits < 8; ++bits) out.push_back({bits & 1U, (bits >> 1) & 1U, (bits >> 2) & 1U});
    return out;
}

struct CaseResult {
    CaseCertificate cert;
    std::optional<std::vector<Color>> witness;        // first coloring with output 1 (P2 cases)
    std::optional<std::vector<Color>> offending;      // first coloring with output != 0 (P1 case)
    std::optional<Color> offending_stub;
};

CaseResult run_all_zero_case(const ClauseGadget& g) {
    CaseResult res;
    res.cert.boundary = {{0, 0, 0}, std::nullopt};
    std::vector<bool> hit(kColors, false);
    for (Color t = 0; t < kColors; ++t) {
        BoundaryEnumerator e(g, {0, 0, 0}, t);
        e.run([&](const std::vector<Color>& c) {
            ++res.cert.valid_colorings;
            hit[c[g.output]] = true;
            if (c[g.output] != 0 && !res.offending) {
                res.offending = c;
                res.offending_stub = t;
            }
            return true;
        });
    }
    for (Color c = 0; c < kColors; ++c)
        if (hit[c]) res.cert.output_colors.push_back(c);
    return res;
}

CaseResult run_pattern_case(const ClauseGadget& g, const StubPattern& p) {
    CaseResult res;
    res.cert.boundary = {p, Color{0}};
    std::vector<bool> hit(kColors, false);
    BoundaryEnumerator e(g, p, 0);
    e.run([&](const std::vector<Color>& c) {
        ++res.cert.valid_colorings;
        hit[c[g.output]] = true;
        if (c[g.output] == 1 && !res.witness) res.witness = c;
        return true;
    });
    for (Color c = 0; c < kColors; ++c)
        if (hit[c]) res.cert.output_colors.push_back(c);
    return res;
}

}  // namespace

void check_gadget_structure(const ClauseGadget& g) {
    const std::size_t n = g.inner.vertex_count();
    if (n > kMaxGadgetInner) {
        throw InputError("gadget has " + std::to_string(n) + " inner vertices, certification cap is " +
                         std::to_string(kMaxGadgetInner));
    }
    std::array<Vertex, 4> special{g.ports[0], g.ports[1], g.ports[2], g.output};
    for (std::size_t i = 0; i < special.size(); ++i) {
        if (special[i] >= n) throw InputError("gadget port/output id " + std::to_string(special[i]) + " out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (special[i] == special[j]) throw InputError("gadget ports and output must be distinct vertices");
        }
    }
    if (!is_triangle_free(g.inner)) throw InputError("gadget inner graph contains a triangle");
    for (Vertex v = 0; v < n; ++v) {
        const bool boundary = std::find(special.begin(), special.end(), v) != special.end();
        const std::size_t cap = boundary ? 2 : 3;
        if (g.inner.degree(v) > cap) {
            throw InputError("gadget vertex " + std::to_string(v) + " has inner degree " +
                             std::to_string(g.inner.degree(v)) + " > " + std::to_string(cap));
        }
    }
}

bool gadget_coloring_valid(const ClauseGadget& g, const StubPattern& stubs, Color output_stub,
                           const std::vector<Color>& inner) {
    const std::size_t n = g.inner.vertex_count();
    if (inner.size() != n) return false;
    if (std::any_of(inner.begin(), inner.end(), [](Color c) { return c >= kColors; })) return false;
    // Build the bordered graph explicitly and reuse the general verifier.
    GraphBuilder b;
    b.add_graph(g.inner);
    std::vector<Color> colors = inner;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vertex s = b.add_vertex();
        b.add_edge(s, g.ports[i]);
        colors.push_back(stubs[i]);
    }
    const Vertex t = b.add_vertex();
    b.add_edge(t, g.output);
    colors.push_back(output_stub);
    const Graph bordered = std::move(b).build();
    const Verdict verdict = verify_coloring(bordered, {colors, {3, 2}});
    // stub C2 belongs to the enclosing construction
    return std::all_of(verdict.violations.begin(), verdict.violations.end(),
                       [n](const Violation& v) { return v.kind == Violation::Kind::c2 && v.u >= n; });
}

GadgetReport verify_clause_gadget(const ClauseGadget& g, unsigned jobs) {
    check_gadget_structure(g);
    const auto patterns = nonzero_patterns();

    std::vector<CaseResult> results(1 + patterns.size());
    if (jobs > 1) {
        std::vector<std::future<CaseResult>> futures;
        futures.push_back(std::async(std::launch::async, [&g] { return run_all_zero_case(g); }));
        for (const auto& p : patterns) {
            futures.push_back(std::async(std::launch::async, [&g, p] { return run_pattern_case(g, p); }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        results[0] = run_all_zero_case(g);
        for (std::size_t i = 0; i < patterns.size(); ++i) results[i + 1] = run_pattern_case(g, patterns[i]);
    }

    GadgetReport report;
    for (const auto& r : results) report.certificate.push_back(r.cert);

    report.property1_holds = !results[0].offending.has_value();
    if (!report.property1_holds) {
        report.counterexample = GadgetCounterexample{
            results[0].cert.boundary, results[0].offending_stub, results[0].offending,
            "all-zero stubs admit a valid coloring whose output is not 0"};
    }

    report.property2_holds = true;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const auto& r = results[i + 1];
        if (r.witness) {
            report.witnesses[patterns[i]] = *r.witness;
        } else {
            report.property2_holds = false;
            if (!report.counterexample) {
                report.counterexample = GadgetCounterexample{
                    r.cert.boundary, Color{0}, std::nullopt,
                    "no valid coloring colors the output 1 for this stub pattern"};
            }
        }
    }

    for (const auto& [pattern, coloring] : g.witness_table) {
        const bool zero = pattern == StubPattern{0, 0, 0};
        const bool binary = std::all_of(pattern.begin(), pattern.end(), [](Color c) { return c <= 1; });
        const bool valid = !zero && binary && coloring.size() == g.inner.vertex_count() &&
                           coloring[g.output] == 1 && gadget_coloring_valid(g, pattern, 0, coloring);
        if (!valid) {
            report.stored_witnesses_valid = false;
            if (!report.counterexample) {
                report.counterexample = GadgetCounterexample{
                    {pattern, Color{0}}, Color{0}, coloring, "stored witness_table entry does not validate"};
            }
        }
    }
    return report;
}

ClauseGadget certify(ClauseGadget g, unsigned jobs) {
    const auto report = verify_clause_gadget(g, jobs);
    if (!report.ok()) {
        throw InputError("clause gadget failed certification: " +
                         (report.counterexample ? report.counterexample->reason : std::string("unknown")));
    }
    g.witness_table = report.witnesses;
    return g;
}

namespace {

// Cheap screen used during synthesis: stops at the first counterexample.
bool quick_screen(const ClauseGadget& g) {
    bool any_zero_case = false;
    for (Color t = 0; t < kColors; ++t) {
        bool bad = false;
        BoundaryEnumerator e(g, {0, 0, 0}, t);
        e.run([&](const std::vector<Color>& c) {
            any_zero_case = true;
            bad = c[g.output] != 0;
            return !bad;
        });
        if (bad) return false;
    }
    // the all-zero boundary must stay colorable for some output stub,
    // otherwise the forcing would hold only vacuously
    if (!any_zero_case) return false;
    for (const auto& p : nonzero_patterns()) {
        bool found = false;
        BoundaryEnumerator e(g, p, 0);
        e.run([&](const std::vector<Color>& c) {
            found = c[g.output] == 1;
            return !found;
        });
        if (!found) return false;
    }
    return true;
}

// Portable bounded draw; distribution objects differ between standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Graph random_candidate(std::mt19937_64& rng, std::size_t n, std::uint64_t density_permille) {
    std::vector<std::pair<Vertex, Vertex>> pool;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pool.emplace_back(a, b);
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[draw(rng, i)]);

    // vertices 0..2 are ports and 3 is the output: inner degree <= 2
    auto cap = [](Vertex v) { return v <= 3 ? std::size_t{2} : std::size_t{3}; };
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::size_t> deg(n, 0);
    std::vector<std::pair<Vertex, Vertex>> chosen;
    for (const auto& [a, b] : pool) {
        if (deg[a] >= cap(a) || deg[b] >= cap(b)) continue;
        bool closes_triangle = false;
        for (Vertex x = 0; x < n && !closes_triangle; ++x) closes_triangle = adj[a][x] && adj[b][x];
        if (closes_triangle) continue;
        if (draw(rng, 1000) >= density_permille) continue;
        adj[a][b] = adj[b][a] = true;
        ++deg[a];
        ++deg[b];
        chosen.emplace_back(a, b);
    }
    return Graph::from_edge_list(n, chosen);
}

}  // namespace

ClauseGadget synthesize_clause_gadget(const SynthesisLimits& limits, SynthesisInfo* info) {
    if (limits.max_inner < 4) {
        throw SynthesisError("a clause gadget needs at least 4 inner vertices (three ports and an output); "
                             "raise --max-inner");
    }
    if (limits.max_inner > kMaxGadgetInner) {
        throw SynthesisError("max inner size " + std::to_string(limits.max_inner) + " exceeds the certification cap " +
                             std::to_string(kMaxGadgetInner));
    }
    std::mt19937_64 rng(limits.seed);
    for (std::uint64_t attempt = 1; attempt <= limits.budget; ++attempt) {
        const std::size_t n = 4 + static_cast<std::size_t>(draw(rng, limits.max_inner - 3));
        const std::uint64_t density = 600 + draw(rng, 401);
        ClauseGadget candidate;
        candidate.inner = random_candidate(rng, n, density);
        candidate.ports = {0, 1, 2};
        candidate.output = 3;
        if (!quick_screen(candidate)) continue;
        auto report = verify_clause_gadget(candidate);
        if (!report.ok()) continue;
        candidate.witness_table = std::move(report.witnesses);
        if (info) *info = SynthesisInfo{limits, attempt};
        return candidate;
    }
    throw SynthesisError("no certified clause gadget within " + std::to_string(limits.budget) +
                         " candidates of at most " + std::to_string(limits.max_inner) +
                         " inner vertices; raise --max-inner or the search budget");
}

}  // namespace condcolor
