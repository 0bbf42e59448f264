#include <algorithm>

#include <json.hpp>

#include "condcolor/reductions.hpp"
#include "digest.hpp"

namespace condcolor {

namespace {

using ojson = nlohmann::ordered_json;

std::string source_digest(const ReductionArtifact& art) {
    if (const auto* g = std::get_if<Graph>(&art.source)) return detail::fnv1a_hex(write_graph(*g));
    return detail::fnv1a_hex(write_dimacs_cnf(std::get<CnfFormula>(art.source)));
}

}  // namespace

std::string write_layout_json(const ReductionArtifact& art) {
    std::vector<std::pair<Vertex, std::string>> by_vertex;
    by_vertex.reserve(art.layout.size());
    for (const auto& [name, v] : art.layout) by_vertex.emplace_back(v, name);
    std::sort(by_vertex.begin(), by_vertex.end());

    ojson roles = ojson::object();
    // vertex ids are written 1-based to match the DIMACS edge file
    for (const auto& [v, name] : by_vertex) roles[name] = v + 1;
    ojson doc;
    doc["kind"] = kind_name(art.kind);
    doc["vertex_base"] = 1;
    doc["roles"] = std::move(roles);
    return doc.dump(2) + "\n";
}

std::string write_provenance_json(const ReductionArtifact& art) {
    ojson doc;
    doc["kind"] = kind_name(art.kind);
    doc["input_digest"] = source_digest(art);
    doc["gadget_digest"] = art.gadget ? ojson(gadget_digest(*art.gadget)) : ojson(nullptr);
    doc["graph_digest"] = detail::fnv1a_hex(write_graph(art.graph));
    doc["target"] = {{"k", art.target.k}, {"r", art.target.r}};
    doc["vertices"] = art.graph.vertex_count();
    doc["edges"] = art.graph.edge_count();
    doc["max_degree"] = art.graph.max_degree();

    ojson sizes = ojson::object();
    switch (art.kind) {
        case ReductionKind::clique_attach: {
            const auto n = art.source_graph().vertex_count();
            sizes["source_vertices"] = n;
            sizes["expected_vertices"] = (static_cast<std::size_t>(art.target.r) + 1) * n;
            break;
        }
        case ReductionKind::sat3_to_32: {
            const auto& f = art.source_formula();
            sizes["variables"] = f.var_count;
            sizes["clauses"] = f.clauses.size();
            sizes["a_path"] = art.a_path.size();
            sizes["b_path"] = art.b_path.size();
            ojson blocks = ojson::array();
            for (const auto& b : art.blocks) {
                blocks.push_back({{"t", b.positive_occurrences},
                                  {"t_bar", b.negative_occurrences},
                                  {"positive_path", b.positive_path.size()},
                                  {"negative_path", b.negative_path.size()}});
            }
            sizes["blocks"] = std::move(blocks);
            sizes["triangle_free"] = is_triangle_free(art.graph);
            break;
        }
        case ReductionKind::ham_triangle: {
            const auto n = art.source_graph().vertex_count();
            sizes["source_vertices"] = n;
            sizes["expected_vertices"] = 3 * n + (n % 2);
            sizes["source_max_degree"] = art.source_graph().max_degree();
            break;
        }
        case ReductionKind::planar_ham: {
            const auto n = art.source_graph().vertex_count();
            sizes["source_vertices"] = n;
            sizes["expected_vertices"] = 5 * n;
            sizes["added_edges"] = 7 * n;
            // planarity is inherited from the caller's claim about the input
            sizes["planarity"] = "asserted, not verified";
            break;
        }
    }
    doc["size"] = std::move(sizes);
    doc["hamiltonian_witness"] = art.ham_witness.has_value();
    return doc.dump(2) + "\n";
}

}  // namespace condcolor
