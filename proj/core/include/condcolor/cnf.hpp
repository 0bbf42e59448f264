#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace condcolor {

/// DIMACS literal: +v for x_v, -v for its negation, v in [1, var_count].
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
    std::size_t var_count = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth values indexed by variable id - 1.
struct Assignment {
    std::vector<bool> values;

    bool operator[](int var) const { return values.at(static_cast<std::size_t>(var - 1)); }
    bool satisfies(Literal lit) const { return lit > 0 ? (*this)[lit] : !(*this)[-lit]; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Parses "p cnf n m" plus m zero-terminated clauses (clauses may span lines).
/// Throws ParseError on a missing header, an out-of-range literal or a
/// clause-count mismatch.
CnfFormula parse_dimacs_cnf(std::string_view text);

/// Writes the formula; each entry of `comments` becomes a "c ..." line.
std::string write_dimacs_cnf(const CnfFormula& f, const std::vector<std::string>& comments = {});

/// True iff every clause has a true literal. Throws InputError when a is not
/// total over f's variables.
bool evaluate(const CnfFormula& f, const Assignment& a);

inline constexpr std::size_t kSatOracleBound = 20;

/// 2^n enumeration; throws OracleBoundError when var_count exceeds `bound`.
std::optional<Assignment> brute_force_sat(const CnfFormula& f, std::size_t bound = kSatOracleBound);

/// Record of what normalize_for_reduction changed, sufficient to carry a
/// satisfying assignment of the rewritten formula back to the original.
struct NormalizationNotes {
    enum class Rewrite {
        duplicate_literal_removed,
        tautology_dropped,
        empty_clause_replaced,
        clause_padded,
        clause_split,
        variable_dropped,
        polarity_flipped,
    };
    struct Entry {
        Rewrite kind;
        int clause = 0;    // 1-based index into the original clause list, 0 if n/a
        int variable = 0;  // original variable id, 0 if n/a
        std::string detail;
    };
    /// Where a variable of the normalized formula came from.
    struct Origin {
        int original = 0;  // original id, or 0 for a fresh auxiliary variable
        bool flipped = false;
    };

    std::size_t original_var_count = 0;
    std::vector<Origin> origin;  // indexed by normalized id - 1
    std::vector<Entry> entries;

    /// Carries an assignment of the normalized formula back; dropped
    /// variables are set to false.
    Assignment to_original(const Assignment& normalized) const;
    std::string to_json() const;
};

struct NormalizedCnf {
    CnfFormula formula;
    NormalizationNotes notes;
};

/// Rewrites f into the shape the 3-SAT reduction consumes: every clause has
/// exactly three literals over distinct variables, no clause is tautological,
/// every variable occurs positively at least once, and no variable is unused.
/// Satisfiability is preserved.
NormalizedCnf normalize_for_reduction(const CnfFormula& f);

/// True iff f already has the normalized shape.
bool is_normalized(const CnfFormula& f);

}  // namespace condcolor
