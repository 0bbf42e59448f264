#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "condcolor/cnf.hpp"
#include "condcolor/coloring.hpp"
#include "condcolor/gadget.hpp"
#include "condcolor/graph.hpp"

namespace condcolor {

enum class ReductionKind { clique_attach, sat3_to_32, ham_triangle, planar_ham };

const char* kind_name(ReductionKind kind);

/// Per-variable block sizes of the 3-SAT construction.
struct LiteralBlock {
    std::size_t positive_occurrences = 0;  // t_i
    std::size_t negative_occurrences = 0;  // t̄_i
    std::vector<Vertex> positive_path;     // P_{x_i}, 3 t_i - 2 vertices
    std::vector<Vertex> negative_path;     // P_{x̄_i}, 3 t̄_i + 2 vertices
};

/// Output of a reduction: the graph, a role -> vertex layout, the source
/// instance and whatever is needed to translate witnesses either way.
struct ReductionArtifact {
    ReductionKind kind = ReductionKind::clique_attach;
    Graph graph;
    std::map<std::string, Vertex> layout;
    std::variant<Graph, CnfFormula> source;
    /// Target question: is graph (k, r)-colorable?
    ColoringParams target;
    std::optional<HamiltonianWitness> ham_witness;

    /// Source vertex i -> its copy in graph (clique_attach, ham_triangle, planar_ham).
    std::vector<Vertex> original_vertices;

    // sat3_to_32 only
    std::optional<ClauseGadget> gadget;          // certified, witness_table filled
    std::vector<Vertex> a_path;                  // a_1 .. a_{6n-1}
    std::vector<Vertex> b_path;                  // b_1 .. b_{3m-2}
    std::vector<LiteralBlock> blocks;            // B_1 .. B_n
    std::vector<std::vector<Vertex>> gadget_vertices;  // clause -> inner id -> vertex
    std::vector<std::array<Vertex, 3>> clause_literal_vertices;  // vertex joined to each port

    const Graph& source_graph() const;
    const CnfFormula& source_formula() const;
};

/// Joins every vertex of g to its own K_r. Requires 2 <= r < k.
ReductionArtifact reduce_kcol_to_krcol(const Graph& g, ColoringParams p);

/// 3-SAT -> (3,2)-Col on triangle-free graphs of maximum degree 3.
/// Requires a normalized formula and a gadget that certifies.
ReductionArtifact reduce_3sat_to_32col(const CnfFormula& f, const ClauseGadget& gadget);

/// Satisfying assignment -> (3,2)-coloring of the sat3 output. Throws
/// InputError if a does not satisfy the source formula.
ConditionalColoring lift_assignment(const ReductionArtifact& art, const Assignment& a);

/// (3,2)-coloring of the sat3 output -> satisfying assignment. Colors are
/// first renamed so that a_1 -> 2 and b_1 -> 0. Throws InputError if c is
/// not a valid (3,2)-coloring of the output.
Assignment extract_assignment(const ReductionArtifact& art, const ConditionalColoring& c);

/// Per-vertex triangles plus pair links (and u when n is odd) along the
/// supplied hamiltonian cycle. Throws InputError on an invalid witness.
ReductionArtifact reduce_ham_3col_to_32col(const Graph& g, const HamiltonianWitness& w);

/// Two linked triangles per hamiltonian-cycle edge; 5n vertices.
ReductionArtifact reduce_planar_ham_3col_to_32col(const Graph& g, const HamiltonianWitness& w);

/// Restriction of c to the source vertices (clique_attach, ham_triangle,
/// planar_ham). Throws InputError for other kinds.
ConditionalColoring project_coloring(const ReductionArtifact& art, const ConditionalColoring& c);

/// Artifact bundle files.
std::string write_layout_json(const ReductionArtifact& art);
std::string write_provenance_json(const ReductionArtifact& art);

}  // namespace condcolor
