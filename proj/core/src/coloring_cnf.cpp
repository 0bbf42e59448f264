#include "condcolor/coloring_cnf.hpp"

#include "condcolor/errors.hpp"

namespace condcolor {

std::vector<std::string> CnfLayout::describe() const {
    const auto n = vertex_count;
    const auto k = static_cast<std::size_t>(params.k);
    std::vector<std::string> lines;
    lines.push_back("conditional (" + std::to_string(params.k) + "," + std::to_string(params.r) +
                    ")-coloring encoding, " + std::to_string(n) + " vertices (0-based ids)");
    lines.push_back("select(v,c)  = 1 + v*" + std::to_string(k) + " + c        vars 1.." + std::to_string(n * k));
    lines.push_back("present(v,c) = 1 + (" + std::to_string(n) + "+v)*" + std::to_string(k) + " + c    vars " +
                    std::to_string(n * k + 1) + ".." + std::to_string(2 * n * k));
    lines.push_back("present(v,c) <=> some neighbour of v selects c");
    lines.push_back("counter vars " + std::to_string(base_vars() + 1) + ".." +
                    std::to_string(base_vars() + counter_vars) +
                    ": sequential counters, at most k-min{d(v),r} false present(v,.) per vertex");
    return lines;
}

namespace {

class ClauseSink {
public:
    explicit ClauseSink(CnfFormula& f) : f_(f) {}
    void add(Clause c) { f_.clauses.push_back(std::move(c)); }
    int fresh() { return static_cast<int>(++f_.var_count); }

private:
    CnfFormula& f_;
};

// Sinz sequential counter: at most `bound` of `lits` are true, bound >= 1.
void at_most(ClauseSink& sink, const std::vector<Literal>& lits, std::size_t bound) {
    const std::size_t n = lits.size();
    if (bound >= n) return;
    // s[i][j]: at least j+1 of lits[0..i] are true
    std::vector<std::vector<Literal>> s(n - 1, std::vector<Literal>(bound));
    for (auto& row : s)
        for (auto& var : row) var = sink.fresh();

    sink.add({-lits[0], s[0][0]});
    for (std::size_t j = 1; j < bound; ++j) sink.add({-s[0][j]});
    for (std::size_t i = 1; i + 1 < n; ++i) {
        sink.add({-lits[i], s[i][0]});
        sink.add({-s[i - 1][0], s[i][0]});
        for (std::size_t j = 1; j < bound; ++j) {
            sink.add({-lits[i], -s[i - 1][j - 1], s[i][j]});
            sink.add({-s[i - 1][j], s[i][j]});
        }
        sink.add({-lits[i], -s[i - 1][bound - 1]});
    }
    sink.add({-lits[n - 1], -s[n - 2][bound - 1]});
}

}  // namespace

KrEncoding encode_kr_as_cnf(const Graph& g, ColoringParams p) {
    p.validate();
    KrEncoding enc;
    enc.layout.vertex_count = g.vertex_count();
    enc.layout.params = p;
    const auto& L = enc.layout;
    auto& f = enc.formula;
    f.var_count = L.base_vars();
    ClauseSink sink(f);
    const auto k = static_cast<Color>(p.k);

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Clause some;
        for (Color c = 0; c < k; ++c) some.push_back(L.select(v, c));
        sink.add(std::move(some));
        for (Color a = 0; a < k; ++a)
            for (Color b = a + 1; b < k; ++b) sink.add({-L.select(v, a), -L.select(v, b)});
    }
    for (const Edge& e : g.edges()) {
        for (Color c = 0; c < k; ++c) sink.add({-L.select(e.u, c), -L.select(e.v, c)});
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Color c = 0; c < k; ++c) {
            Clause support{-L.present(v, c)};
            for (Vertex u : g.neighbors(v)) {
                support.push_back(L.select(u, c));
                sink.add({-L.select(u, c), L.present(v, c)});
            }
            sink.add(std::move(support));
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto need = required_neighbor_colors(g, v, p.r);
        if (need == 0) continue;
        if (need > static_cast<std::size_t>(p.k)) {
            sink.add({});  // more distinct colors needed than exist
            continue;
        }
        const std::size_t slack = static_cast<std::size_t>(p.k) - need;
        if (slack == 0) {
            for (Color c = 0; c < k; ++c) sink.add({L.present(v, c)});
            continue;
        }
        std::vector<Literal> absent;
        for (Color c = 0; c < k; ++c) absent.push_back(-L.present(v, c));
        at_most(sink, absent, slack);
    }
    enc.layout.counter_vars = f.var_count - L.base_vars();
    return enc;
}

ConditionalColoring decode_model(const CnfLayout& layout, const Assignment& model) {
    if (model.values.size() < layout.base_vars()) {
        throw InputError("model has " + std::to_string(model.values.size()) + " variables, layout needs at least " +
                         std::to_string(layout.base_vars()));
    }
    ConditionalColoring c;
    c.params = layout.params;
    c.colors.resize(layout.vertex_count);
    for (Vertex v = 0; v < layout.vertex_count; ++v) {
        int chosen = -1;
        for (Color col = 0; col < static_cast<Color>(layout.params.k); ++col) {
            if (!model[layout.select(v, col)]) continue;
            if (chosen >= 0) throw InputError("vertex " + std::to_string(v) + " selects more than one color");
            chosen = static_cast<int>(col);
        }
        if (chosen < 0) throw InputError("vertex " + std::to_string(v) + " selects no color");
        c.colors[v] = static_cast<Color>(chosen);
    }
    return c;
}

}  // namespace condcolor
