#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "condcolor/errors.hpp"
#include "condcolor/gadget.hpp"
#include "digest.hpp"

namespace condcolor {

namespace {

using ojson = nlohmann::ordered_json;

ojson boundary_json(const BoundaryCase& b) {
    ojson j;
    j["stubs"] = b.stubs;
    if (b.output_stub) {
        j["output_stub"] = *b.output_stub;
    } else {
        j["output_stub"] = nullptr;
    }
    return j;
}

}  // namespace

std::string write_gadget_json(const ClauseGadget& g, const GadgetReport& report,
                              const std::optional<SynthesisInfo>& info) {
    ojson doc;
    doc["format"] = "condcolor-clause-gadget";
    doc["version"] = 1;
    doc["digest"] = gadget_digest(g);
    doc["inner_vertex_count"] = g.inner.vertex_count();
    ojson edges = ojson::array();
    for (const Edge& e : g.inner.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    doc["ports"] = g.ports;
    doc["output"] = g.output;
    if (info) {
        doc["synthesis"] = {{"seed", info->limits.seed},
                            {"max_inner", info->limits.max_inner},
                            {"budget", info->limits.budget},
                            {"attempt", info->attempts}};
    }
    ojson table = ojson::array();
    for (const auto& [pattern, coloring] : g.witness_table) {
        ojson entry;
        entry["stubs"] = pattern;
        entry["output_stub"] = 0;
        entry["coloring"] = coloring;
        table.push_back(std::move(entry));
    }
    doc["witness_table"] = std::move(table);

    ojson cert;
    cert["property1"] = report.property1_holds;
    cert["property2"] = report.property2_holds;
    ojson cases = ojson::array();
    for (const auto& c : report.certificate) {
        ojson item = boundary_json(c.boundary);
        item["valid_colorings"] = c.valid_colorings;
        item["output_colors"] = c.output_colors;
        if (c.output_colors.size() == 1) {
            item["forced_output"] = c.output_colors.front();
        } else {
            item["forced_output"] = nullptr;
        }
        cases.push_back(std::move(item));
    }
    cert["cases"] = std::move(cases);
    doc["certificate"] = std::move(cert);
    return doc.dump(2) + "\n";
}

ClauseGadget parse_gadget_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        if (doc.value("format", std::string{}) != "condcolor-clause-gadget") {
            throw InputError("not a clause gadget fixture (format tag missing)");
        }
        const auto n = doc.at("inner_vertex_count").get<std::size_t>();
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (const auto& e : doc.at("edges")) {
            pairs.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        }
        ClauseGadget g;
        g.inner = Graph::from_edge_list(n, pairs);
        g.ports = doc.at("ports").get<std::array<Vertex, 3>>();
        g.output = doc.at("output").get<Vertex>();
        if (doc.contains("witness_table")) {
            for (const auto& entry : doc.at("witness_table")) {
                const auto pattern = entry.at("stubs").get<StubPattern>();
                if (entry.value("output_stub", 0) != 0) throw InputError("witness entries must use output_stub 0");
                g.witness_table[pattern] = entry.at("coloring").get<std::vector<Color>>();
            }
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad gadget fixture: ") + e.what());
    }
}

std::string gadget_digest(const ClauseGadget& g) {
    std::ostringstream canon;
    canon << g.inner.vertex_count() << ';';
    for (const Edge& e : g.inner.edges()) canon << e.u << '-' << e.v << ',';
    canon << ';' << g.ports[0] << ',' << g.ports[1] << ',' << g.ports[2] << ';' << g.output;
    return detail::fnv1a_hex(canon.str());
}

}  // namespace condcolor
