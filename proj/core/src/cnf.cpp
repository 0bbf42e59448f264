#include "condcolor/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "condcolor/errors.hpp"
#include "text_lines.hpp"

namespace condcolor {

CnfFormula parse_dimacs_cnf(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    bool finished = false;
    std::size_t declared = 0;
    std::size_t header_line = 0;
    std::size_t last_line = 0;
    Clause current;

    detail::for_each_line(text, [&](std::size_t line_no, std::vector<std::string_view> tok) {
        last_line = line_no;
        if (finished || tok.empty() || tok[0] == "c" || tok[0].front() == 'c') return;
        if (tok[0] == "%") {
            finished = true;  // SATLIB end marker
            return;
        }
        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(line_no, "expected \"p cnf <vars> <clauses>\"");
            f.var_count = detail::parse_count(tok[2], line_no);
            declared = detail::parse_count(tok[3], line_no);
            have_header = true;
            header_line = line_no;
            return;
        }
        if (!have_header) throw ParseError(line_no, "clause before \"p cnf\" problem line");
        for (auto t : tok) {
            const long long lit = detail::parse_int(t, line_no);
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::llabs(lit) > static_cast<long long>(f.var_count)) {
                throw ParseError(line_no, "literal " + std::string(t) + " out of range [1," +
                                              std::to_string(f.var_count) + "]");
            }
            current.push_back(static_cast<Literal>(lit));
        }
    });

    if (!have_header) throw ParseError(1, "missing \"p cnf\" problem line");
    if (!current.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
    if (f.clauses.size() != declared) {
        throw ParseError(header_line, "header declares " + std::to_string(declared) + " clauses, found " +
                                          std::to_string(f.clauses.size()));
    }
    return f;
}

std::string write_dimacs_cnf(const CnfFormula& f, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& line : comments) out << "c " << line << '\n';
    out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (Literal lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
    if (a.values.size() != f.var_count) {
        throw InputError("assignment covers " + std::to_string(a.values.size()) + " variables, formula has " +
                         std::to_string(f.var_count));
    }
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](Literal lit) { return a.satisfies(lit); });
    });
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, std::size_t bound) {
    if (f.var_count > bound) {
        throw OracleBoundError("brute force SAT refuses " + std::to_string(f.var_count) + " variables (bound " +
                               std::to_string(bound) + ")");
    }
    struct Masks {
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
    };
    std::vector<Masks> masks;
    masks.reserve(f.clauses.size());
    for (const auto& clause : f.clauses) {
        Masks m;
        for (Literal lit : clause) {
            const auto bit = std::uint64_t{1} << (std::abs(lit) - 1);
            (lit > 0 ? m.pos : m.neg) |= bit;
        }
        masks.push_back(m);
    }
    const std::uint64_t total = std::uint64_t{1} << f.var_count;
    for (std::uint64_t x = 0; x < total; ++x) {
        const bool sat = std::all_of(masks.begin(), masks.end(),
                                     [x](const Masks& m) { return (x & m.pos) != 0 || (~x & m.neg) != 0; });
        if (!sat) continue;
        Assignment a;
        a.values.resize(f.var_count);
        for (std::size_t v = 0; v < f.var_count; ++v) a.values[v] = ((x >> v) & 1U) != 0;
        return a;
    }
    return std::nullopt;
}

Assignment NormalizationNotes::to_original(const Assignment& normalized) const {
    if (normalized.values.size() != origin.size()) {
        throw InputError("assignment does not match the normalized formula");
    }
    Assignment out;
    out.values.assign(original_var_count, false);
    for (std::size_t i = 0; i < origin.size(); ++i) {
        const auto& o = origin[i];
        if (o.original == 0) continue;
        out.values[static_cast<std::size_t>(o.original - 1)] = normalized.values[i] != o.flipped;
    }
    return out;
}

namespace {

const char* rewrite_name(NormalizationNotes::Rewrite kind) {
    using R = NormalizationNotes::Rewrite;
    switch (kind) {
        case R::duplicate_literal_removed: return "duplicate_literal_removed";
        case R::tautology_dropped: return "tautology_dropped";
        case R::empty_clause_replaced: return "empty_clause_replaced";
        case R::clause_padded: return "clause_padded";
        case R::clause_split: return "clause_split";
        case R::variable_dropped: return "variable_dropped";
        case R::polarity_flipped: return "polarity_flipped";
    }
    return "?";
}

}  // namespace

std::string NormalizationNotes::to_json() const {
    nlohmann::ordered_json doc;
    doc["original_var_count"] = original_var_count;
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < origin.size(); ++i) {
        nlohmann::ordered_json v;
        v["var"] = i + 1;
        if (origin[i].original == 0) {
            v["origin"] = nullptr;
        } else {
            v["origin"] = origin[i].original;
        }
        v["flipped"] = origin[i].flipped;
        vars.push_back(std::move(v));
    }
    doc["variables"] = std::move(vars);
    nlohmann::ordered_json rewrites = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json item;
        item["kind"] = rewrite_name(e.kind);
        item["clause"] = e.clause;
        item["variable"] = e.variable;
        item["detail"] = e.detail;
        rewrites.push_back(std::move(item));
    }
    doc["rewrites"] = std::move(rewrites);
    return doc.dump(2) + "\n";
}

NormalizedCnf normalize_for_reduction(const CnfFormula& f) {
    using R = NormalizationNotes::Rewrite;
    NormalizedCnf out;
    auto& notes = out.notes;
    notes.original_var_count = f.var_count;

    for (const auto& clause : f.clauses) {
        for (Literal lit : clause) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.var_count) {
                throw InputError("literal " + std::to_string(lit) + " out of range");
            }
        }
    }

    // 1. per-clause cleanup
    struct Kept {
        Clause lits;
        int index;
    };
    std::vector<Kept> kept;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const int idx = static_cast<int>(i + 1);
        Clause lits;
        for (Literal lit : f.clauses[i]) {
            if (std::find(lits.begin(), lits.end(), lit) == lits.end()) lits.push_back(lit);
        }
        if (lits.size() != f.clauses[i].size()) {
            notes.entries.push_back({R::duplicate_literal_removed, idx, 0, "repeated literals collapsed"});
        }
        const bool tautology = std::any_of(lits.begin(), lits.end(), [&](Literal lit) {
            return std::find(lits.begin(), lits.end(), -lit) != lits.end();
        });
        if (tautology) {
            notes.entries.push_back({R::tautology_dropped, idx, 0, "clause contains a literal and its negation"});
            continue;
        }
        kept.push_back({std::move(lits), idx});
    }

    // 2. occurrence counts decide dropping and flipping
    std::vector<std::size_t> pos(f.var_count + 1, 0);
    std::vector<std::size_t> neg(f.var_count + 1, 0);
    for (const auto& k : kept) {
        for (Literal lit : k.lits) (lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit))]++;
    }
    std::vector<int> renamed(f.var_count + 1, 0);
    std::vector<bool> flipped(f.var_count + 1, false);
    for (std::size_t v = 1; v <= f.var_count; ++v) {
        const int var = static_cast<int>(v);
        if (pos[v] == 0 && neg[v] == 0) {
            notes.entries.push_back({R::variable_dropped, 0, var, "variable occurs in no clause"});
            continue;
        }
        if (pos[v] == 0) {
            flipped[v] = true;
            notes.entries.push_back({R::polarity_flipped, 0, var, "variable occurs only negatively"});
        }
        notes.origin.push_back({var, flipped[v]});
        renamed[v] = static_cast<int>(notes.origin.size());
    }
    auto fresh = [&notes]() {
        notes.origin.push_back({0, false});
        return static_cast<Literal>(notes.origin.size());
    };

    // 3. reshape every clause to exactly three literals
    auto& clauses = out.formula.clauses;
    for (const auto& k : kept) {
        Clause lits;
        for (Literal lit : k.lits) {
            const auto v = static_cast<std::size_t>(std::abs(lit));
            const bool positive = (lit > 0) != flipped[v];
            lits.push_back(positive ? renamed[v] : -renamed[v]);
        }
        switch (lits.size()) {
            case 0: {
                const Literal y1 = fresh(), y2 = fresh(), y3 = fresh();
                for (int signs = 0; signs < 8; ++signs) {
                    clauses.push_back({(signs & 1) ? -y1 : y1, (signs & 2) ? -y2 : y2, (signs & 4) ? -y3 : y3});
                }
                notes.entries.push_back({R::empty_clause_replaced, k.index, 0,
                                         "empty clause replaced by all 8 sign patterns over 3 fresh variables"});
                break;
            }
            case 1: {
                const Literal y = fresh(), z = fresh();
                const Literal l = lits[0];
                clauses.push_back({l, y, z});
                clauses.push_back({l, y, -z});
                clauses.push_back({l, -y, z});
                clauses.push_back({l, -y, -z});
                notes.entries.push_back({R::clause_padded, k.index, 0, "unit clause padded with 2 fresh variables"});
                break;
            }
            case 2: {
                const Literal y = fresh();
                clauses.push_back({lits[0], lits[1], y});
                clauses.push_back({lits[0], lits[1], -y});
                notes.entries.push_back({R::clause_padded, k.index, 0, "binary clause padded with 1 fresh variable"});
                break;
            }
            case 3: clauses.push_back(lits); break;
            default: {
                // (l1 v l2 v y1)(-y1 v l3 v y2)...(-y_{s-3} v l_{s-1} v l_s)
                Literal link = fresh();
                clauses.push_back({lits[0], lits[1], link});
                for (std::size_t i = 2; i + 2 < lits.size(); ++i) {
                    const Literal next = fresh();
                    clauses.push_back({-link, lits[i], next});
                    link = next;
                }
                clauses.push_back({-link, lits[lits.size() - 2], lits.back()});
                notes.entries.push_back({R::clause_split, k.index, 0,
                                         "clause of " + std::to_string(lits.size()) +
                                             " literals split with chain variables"});
                break;
            }
        }
    }

    if (clauses.empty()) {
        const Literal y1 = fresh(), y2 = fresh(), y3 = fresh();
        clauses.push_back({y1, y2, y3});
        notes.entries.push_back({R::clause_padded, 0, 0, "formula without clauses given one satisfiable clause"});
    }
    out.formula.var_count = notes.origin.size();
    return out;
}

bool is_normalized(const CnfFormula& f) {
    if (f.var_count == 0 || f.clauses.empty()) return false;
    std::vector<bool> positive(f.var_count + 1, false);
    for (const auto& clause : f.clauses) {
        if (clause.size() != 3) return false;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto v = static_cast<std::size_t>(std::abs(clause[i]));
            if (clause[i] == 0 || v > f.var_count) return false;
            for (std::size_t j = 0; j < i; ++j) {
                if (std::abs(clause[j]) == std::abs(clause[i])) return false;
            }
            if (clause[i] > 0) positive[v] = true;
        }
    }
    return std::all_of(positive.begin() + 1, positive.end(), [](bool b) { return b; });
}

}  // namespace condcolor
