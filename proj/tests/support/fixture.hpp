#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "condcolor/gadget.hpp"

namespace fixture {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string gadget_path() { return CONDCOLOR_TEST_DATA_DIR "/clause_gadget.json"; }

inline const condcolor::ClauseGadget& gadget() {
    static const condcolor::ClauseGadget g = condcolor::parse_gadget_json(read_file(gadget_path()));
    return g;
}

}  // namespace fixture
