#include <json.hpp>

#include "condcolor/coloring.hpp"
#include "condcolor/errors.hpp"

namespace condcolor {

std::string write_coloring_json(const ConditionalColoring& c) {
    nlohmann::ordered_json doc;
    doc["k"] = c.params.k;
    doc["r"] = c.params.r;
    nlohmann::ordered_json colors = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < c.colors.size(); ++v) colors[std::to_string(v)] = c.colors[v];
    doc["colors"] = std::move(colors);
    return doc.dump(2) + "\n";
}

ConditionalColoring parse_coloring_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        ConditionalColoring c;
        c.params.k = doc.at("k").get<int>();
        c.params.r = doc.at("r").get<int>();
        const auto& colors = doc.at("colors");
        c.colors.assign(colors.size(), 0);
        std::vector<bool> seen(colors.size(), false);
        for (const auto& [key, value] : colors.items()) {
            const auto v = std::stoul(key);
            if (v >= c.colors.size() || seen[v]) throw InputError("coloring keys must be 0..n-1 exactly once");
            seen[v] = true;
            c.colors[v] = value.get<Color>();
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad coloring JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const InputError*>(&e)) throw;
        throw InputError(std::string("bad coloring JSON: ") + e.what());
    }
}

}  // namespace condcolor
