#pragma once

#include <cstdint>
#include <optional>

#include "condcolor/cnf.hpp"

namespace condcolor {

struct SatStats {
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
};

/// Complete CDCL solver (watched literals, first-UIP learning, activity
/// ordering, Luby restarts) for moderate instances such as the coloring
/// encodings. Returns a model or nullopt when the formula is unsatisfiable.
std::optional<Assignment> solve_cnf(const CnfFormula& f, SatStats* stats = nullptr);

}  // namespace condcolor
