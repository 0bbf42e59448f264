#include "condcolor/sat_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "condcolor/errors.hpp"

namespace condcolor {

namespace {

// Literal code: 2*var + sign, var 0-based, sign 1 = negated.
using Lit = std::uint32_t;
constexpr Lit negate(Lit l) { return l ^ 1U; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }

constexpr std::int8_t kUnset = -1;

std::uint64_t luby(std::uint64_t i) {
    // i-th element (1-based) of 1,1,2,1,1,2,4,...
    std::uint64_t size = 1;
    std::uint64_t seq = 0;
    while (size < i + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    std::uint64_t x = i;
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    return std::uint64_t{1} << seq;
}

class Cdcl {
public:
    explicit Cdcl(std::size_t vars)
        : value_(vars, kUnset), level_(vars, 0), reason_(vars, -1), activity_(vars, 0.0),
          phase_(vars, 0), seen_(vars, 0), watches_(2 * vars) {}

    bool add_clause(std::vector<Lit> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 1; i < lits.size(); ++i) {
            if (lits[i] == negate(lits[i - 1])) return true;  // tautology
        }
        if (lits.empty()) return false;
        if (lits.size() == 1) {
            const auto v = lit_value(lits[0]);
            if (v == 0) return false;
            if (v == kUnset) enqueue(lits[0], -1);
            return true;
        }
        attach(std::move(lits));
        return true;
    }

    std::optional<std::vector<bool>> solve(SatStats& stats) {
        if (propagate() >= 0) return std::nullopt;
        std::uint64_t restart_index = 1;
        std::uint64_t budget = 100 * luby(restart_index);
        std::uint64_t since_restart = 0;
        while (true) {
            const int conflict = propagate();
            if (conflict >= 0) {
                ++stats.conflicts;
                ++since_restart;
                if (decision_level() == 0) return std::nullopt;
                std::vector<Lit> learnt;
                const int back = analyze(conflict, learnt);
                backtrack(back);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    const int idx = attach(learnt);
                    enqueue(learnt[0], idx);
                }
                var_inc_ *= 1.0 / 0.95;
                continue;
            }
            if (since_restart >= budget) {
                backtrack(0);
                since_restart = 0;
                budget = 100 * luby(++restart_index);
            }
            const int next = pick_branch();
            if (next < 0) {
                std::vector<bool> model(value_.size());
                for (std::size_t v = 0; v < value_.size(); ++v) model[v] = value_[v] == 1;
                return model;
            }
            ++stats.decisions;
            trail_lim_.push_back(trail_.size());
            const auto v = static_cast<std::uint32_t>(next);
            enqueue(2 * v + (phase_[v] ? 0U : 1U), -1);
        }
    }

    std::uint64_t propagations = 0;

private:
    std::int8_t lit_value(Lit l) const {
        const auto v = value_[var_of(l)];
        if (v == kUnset) return kUnset;
        return static_cast<std::int8_t>((l & 1U) ? 1 - v : v);
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    int attach(std::vector<Lit> lits) {
        const int idx = static_cast<int>(clauses_.size());
        watches_[lits[0]].push_back(idx);
        watches_[lits[1]].push_back(idx);
        clauses_.push_back(std::move(lits));
        return idx;
    }

    void enqueue(Lit l, int reason) {
        const auto v = var_of(l);
        value_[v] = static_cast<std::int8_t>((l & 1U) ? 0 : 1);
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(l);
    }

    // Returns the index of a conflicting clause, or -1.
    int propagate() {
        while (qhead_ < trail_.size()) {
            const Lit p = trail_[qhead_++];
            ++propagations;
            const Lit false_lit = negate(p);
            auto& ws = watches_[false_lit];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const int ci = ws[i];
                auto& c = clauses_[static_cast<std::size_t>(ci)];
                if (c[0] == false_lit) std::swap(c[0], c[1]);
                if (lit_value(c[0]) == 1) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t j = 2; j < c.size(); ++j) {
                    if (lit_value(c[j]) != 0) {
                        std::swap(c[1], c[j]);
                        watches_[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[keep++] = ci;
                if (lit_value(c[0]) == 0) {
                    for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
                    ws.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c[0], ci);
            }
            ws.resize(keep);
        }
        return -1;
    }

    void bump(std::uint32_t v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (auto& a : activity_) a *= 1e-100;
            var_inc_ *= 1e-100;
        }
    }

    int analyze(int conflict, std::vector<Lit>& learnt) {
        learnt.assign(1, 0);
        int pending = 0;
        Lit p = 0;
        bool have_p = false;
        std::size_t index = trail_.size();
        int ci = conflict;
        do {
            const auto& c = clauses_[static_cast<std::size_t>(ci)];
            for (std::size_t j = have_p ? 1 : 0; j < c.size(); ++j) {
                const Lit q = c[j];
                const auto v = var_of(q);
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                bump(v);
                if (level_[v] >= decision_level()) ++pending;
                else learnt.push_back(q);
            }
            while (!seen_[var_of(trail_[--index])]) {}
            p = trail_[index];
            have_p = true;
            ci = reason_[var_of(p)];
            seen_[var_of(p)] = 0;
            --pending;
            if (pending > 0 && ci >= 0) {
                // reason clauses keep the implied literal first
                auto& rc = clauses_[static_cast<std::size_t>(ci)];
                if (rc[0] != p) {
                    const auto it = std::find(rc.begin(), rc.end(), p);
                    std::iter_swap(rc.begin(), it);
                }
            }
        } while (pending > 0);
        learnt[0] = negate(p);

        int back = 0;
        if (learnt.size() > 1) {
            std::size_t max_i = 1;
            for (std::size_t i = 2; i < learnt.size(); ++i) {
                if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
            }
            std::swap(learnt[1], learnt[max_i]);
            back = level_[var_of(learnt[1])];
        }
        for (Lit l : learnt) seen_[var_of(l)] = 0;
        return back;
    }

    void backtrack(int level) {
        if (decision_level() <= level) return;
        const std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
        for (std::size_t i = trail_.size(); i-- > stop;) {
            const auto v = var_of(trail_[i]);
            phase_[v] = static_cast<std::uint8_t>(value_[v] == 1);
            value_[v] = kUnset;
            reason_[v] = -1;
        }
        trail_.resize(stop);
        trail_lim_.resize(static_cast<std::size_t>(level));
        qhead_ = trail_.size();
    }

    int pick_branch() const {
        int best = -1;
        double best_act = -1.0;
        for (std::size_t v = 0; v < value_.size(); ++v) {
            if (value_[v] == kUnset && activity_[v] > best_act) {
                best = static_cast<int>(v);
                best_act = activity_[v];
            }
        }
        return best;
    }

    std::vector<std::int8_t> value_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<double> activity_;
    std::vector<std::uint8_t> phase_;
    std::vector<std::uint8_t> seen_;
    std::vector<std::vector<int>> watches_;
    std::vector<std::vector<Lit>> clauses_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    double var_inc_ = 1.0;
};

}  // namespace

std::optional<Assignment> solve_cnf(const CnfFormula& f, SatStats* stats) {
    Cdcl solver(f.var_count);
    bool ok = true;
    for (const auto& clause : f.clauses) {
        std::vector<Lit> lits;
        lits.reserve(clause.size());
        for (Literal lit : clause) {
            const auto v = static_cast<std::size_t>(std::abs(lit));
            if (lit == 0 || v > f.var_count) throw InputError("literal " + std::to_string(lit) + " out of range");
            lits.push_back(static_cast<Lit>(2 * (v - 1) + (lit < 0 ? 1 : 0)));
        }
        if (!solver.add_clause(std::move(lits))) {
            ok = false;
            break;
        }
    }
    SatStats local;
    std::optional<Assignment> result;
    if (ok) {
        if (auto model = solver.solve(local)) result = Assignment{std::move(*model)};
    }
    local.propagations = solver.propagations;
    if (stats) *stats = local;
    if (result && !evaluate(f, *result)) throw std::logic_error("CDCL returned a non-model");
    return result;
}

}  // namespace condcolor
