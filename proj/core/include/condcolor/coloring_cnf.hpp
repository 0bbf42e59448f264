#pragma once

#include <string>
#include <vector>

#include "condcolor/cnf.hpp"
#include "condcolor/coloring.hpp"
#include "condcolor/graph.hpp"

namespace condcolor {

/// Variable numbering of a (k, r)-coloring encoding.
///
///   select(v, c)   = 1 + v*k + c             "v has color c"
///   present(v, c)  = 1 + n*k + v*k + c       "some neighbour of v has color c"
///   counter variables follow, 2*n*k + 1 .. var_count
struct CnfLayout {
    std::size_t vertex_count = 0;
    ColoringParams params;
    std::size_t counter_vars = 0;

    int select(Vertex v, Color c) const {
        return static_cast<int>(1 + v * static_cast<std::size_t>(params.k) + c);
    }
    int present(Vertex v, Color c) const {
        return static_cast<int>(1 + (vertex_count + v) * static_cast<std::size_t>(params.k) + c);
    }
    std::size_t base_vars() const { return 2 * vertex_count * static_cast<std::size_t>(params.k); }

    /// "c ..." comment lines describing the numbering above.
    std::vector<std::string> describe() const;
};

struct KrEncoding {
    CnfFormula formula;
    CnfLayout layout;
};

/// Encodes "g has a conditional (k, r)-coloring" as CNF. C1 and exactly-one
/// color per vertex are direct clauses; C2 becomes "at least min{d(v), r} of
/// present(v, .) are true", expressed as a sequential counter bounding the
/// false presence literals from above.
KrEncoding encode_kr_as_cnf(const Graph& g, ColoringParams p);

/// Reads the coloring off a model of the encoding. Throws InputError when a
/// vertex has no selected color or more than one.
ConditionalColoring decode_model(const CnfLayout& layout, const Assignment& model);

}  // namespace condcolor
