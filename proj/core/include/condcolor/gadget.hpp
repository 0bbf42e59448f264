#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "condcolor/coloring.hpp"
#include "condcolor/graph.hpp"

namespace condcolor {

/// Colors of the three literal stubs attached to the input ports.
using StubPattern = std::array<Color, 3>;

/// Clause building block. Each input port receives one external edge from a
/// literal vertex; the output receives one external edge from the clause's
/// b-vertex. Colors are {0, 1, 2} with 0 = false and 1 = true.
struct ClauseGadget {
    Graph inner;
    std::array<Vertex, 3> ports{};
    Vertex output = 0;
    /// Stub pattern (not all zero, output stub colored 0) -> inner coloring
    /// with the output colored 1.
    std::map<StubPattern, std::vector<Color>> witness_table;

    friend bool operator==(const ClauseGadget&, const ClauseGadget&) = default;
};

/// Stub colors around the gadget; output_stub unset means "any color".
struct BoundaryCase {
    StubPattern stubs{};
    std::optional<Color> output_stub;

    friend bool operator==(const BoundaryCase&, const BoundaryCase&) = default;
};

struct CaseCertificate {
    BoundaryCase boundary;
    std::uint64_t valid_colorings = 0;
    std::vector<Color> output_colors;  // colors the output takes in some valid coloring
};

struct GadgetCounterexample {
    BoundaryCase boundary;
    std::optional<Color> output_stub_color;  // the stub color used, for the free-stub case
    std::optional<std::vector<Color>> coloring;
    std::string reason;
};

struct GadgetReport {
    bool property1_holds = false;  // all-zero stubs force the output to 0
    bool property2_holds = false;  // any other 0/1 pattern admits output 1
    bool stored_witnesses_valid = true;
    std::optional<GadgetCounterexample> counterexample;
    std::vector<CaseCertificate> certificate;  // all-zero case first, then the 7 others
    std::map<StubPattern, std::vector<Color>> witnesses;

    bool ok() const noexcept { return property1_holds && property2_holds && stored_witnesses_valid; }
};

/// Inner size cap: 3^14 colorings per boundary case keeps a case < 10^7 checks.
inline constexpr std::size_t kMaxGadgetInner = 14;

/// Throws InputError unless: ports and output are distinct inner vertices,
/// inner is triangle-free with inner degree <= 3, ports and output have
/// inner degree <= 2, and the inner size is within kMaxGadgetInner.
void check_gadget_structure(const ClauseGadget& g);

/// True iff `inner` is a valid inner coloring for the boundary: C1 on inner
/// and stub edges, C2 (r = 2) at every inner vertex counting stub colors.
bool gadget_coloring_valid(const ClauseGadget& g, const StubPattern& stubs, Color output_stub,
                           const std::vector<Color>& inner);

/// Exhaustive certification over every boundary case. Stored witness_table
/// entries, when present, must also validate.
GadgetReport verify_clause_gadget(const ClauseGadget& g, unsigned jobs = 1);

/// Returns g with witness_table replaced by the certified witnesses; throws
/// InputError if certification fails.
ClauseGadget certify(ClauseGadget g, unsigned jobs = 1);

struct SynthesisLimits {
    std::size_t max_inner = 12;
    std::uint64_t budget = 2'000'000;  // candidate graphs examined
    std::uint64_t seed = 1;
};

struct SynthesisInfo {
    SynthesisLimits limits;
    std::uint64_t attempts = 0;
};

class SynthesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seeded random search over triangle-free candidates within the limits,
/// returning the first one that certifies. Deterministic in (seed, limits).
/// Throws SynthesisError when the budget runs out.
ClauseGadget synthesize_clause_gadget(const SynthesisLimits& limits, SynthesisInfo* info = nullptr);

/// Fixture file: inner edges, ports, output, witness_table and a certificate
/// section with per-case counts and output colors.
std::string write_gadget_json(const ClauseGadget& g, const GadgetReport& report,
                              const std::optional<SynthesisInfo>& info = std::nullopt);
ClauseGadget parse_gadget_json(const std::string& text);

/// FNV-1a digest of the gadget's structure (edges, ports, output).
std::string gadget_digest(const ClauseGadget& g);

}  // namespace condcolor
