#include "kr_search.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace condcolor::detail {

KrSearch::KrSearch(const Graph& g, int k, std::vector<std::uint32_t> need,
                   std::vector<Mask> initial_domains, SolverOptions options)
    : g_(g), k_(k), need_(std::move(need)), initial_(std::move(initial_domains)), options_(options) {
    const Mask full = full_mask(k_);
    symmetric_ = std::all_of(initial_.begin(), initial_.end(), [full](Mask m) { return m == full; });
    queued_.assign(g_.vertex_count(), 0);
    weight_.assign(g_.vertex_count(), 0);
    parent_.resize(g_.vertex_count());
    stamp_.assign(g_.vertex_count(), 0);
}

void KrSearch::push(Vertex v) {
    if (!queued_[v]) {
        queued_[v] = 1;
        queue_.push_back(v);
    }
}

bool KrSearch::hall_filter(State& s, Vertex w) {
    // w must see a distinct color on every neighbour, so N[w] is an
    // all-different group: any subset whose domains cover exactly as many
    // colors as it has members owns those colors.
    const auto nbrs = g_.neighbors(w);
    const std::size_t size = nbrs.size() + 1;
    if (size > kMaxHallGroup) return true;
    Vertex group[kMaxHallGroup];
    group[0] = w;
    std::copy(nbrs.begin(), nbrs.end(), group + 1);
    const std::uint32_t subsets = (std::uint32_t{1} << size) - 1;
    for (std::uint32_t t = 1; t < subsets; ++t) {
        Mask cover = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (t >> i & 1) cover |= s.dom[group[i]];
        }
        const auto members = static_cast<int>(std::popcount(t));
        const int colors = mask_size(cover);
        if (colors < members) return false;
        if (colors > members) continue;
        for (std::size_t i = 0; i < size; ++i) {
            const Vertex x = group[i];
            if ((t >> i & 1) || (s.dom[x] & cover) == 0) continue;
            if (s.fixed[x]) return false;
            s.dom[x] &= ~cover;
            if (s.dom[x] == 0) return false;
            push(x);
        }
    }
    return true;
}

bool KrSearch::check_c2(State& s, Vertex w) {
    const std::uint32_t need = need_[w];
    if (need == 0) return true;
    Mask seen = 0;
    Mask open_union = 0;
    std::uint32_t open = 0;
    for (Vertex u : g_.neighbors(w)) {
        if (s.fixed[u]) {
            seen |= s.dom[u];
        } else {
            ++open;
            open_union |= s.dom[u];
        }
    }
    if (need == g_.degree(w) && need >= 2 && !hall_filter(s, w)) {
        ++weight_[w];
        return false;
    }
    const auto have = static_cast<std::uint32_t>(mask_size(seen));
    if (have >= need) return true;
    const auto fresh = static_cast<std::uint32_t>(mask_size(open_union & ~seen));
    if (have + std::min(open, fresh) < need) {
        ++weight_[w];
        return false;
    }
    if (have + open == need) {
        // every uncolored neighbour has to bring a color not seen yet
        for (Vertex u : g_.neighbors(w)) {
            if (s.fixed[u]) continue;
            const Mask narrowed = s.dom[u] & ~seen;
            if (narrowed != s.dom[u]) {
                if (narrowed == 0) {
                    ++weight_[w];
                    return false;
                }
                s.dom[u] = narrowed;
                push(u);
            }
        }
    }
    return true;
}

bool KrSearch::propagate(State& s, std::span<const Vertex> seeds) {
    for (Vertex v : seeds) push(v);
    bool ok = true;
    std::size_t head = 0;
    while (ok && head < queue_.size()) {
        const Vertex v = queue_[head++];
        queued_[v] = 0;
        if (s.dom[v] == 0) {
            ok = false;
            break;
        }
        if (!s.fixed[v] && mask_size(s.dom[v]) == 1) {
            s.fixed[v] = 1;
            const Mask c = s.dom[v];
            for (Vertex u : g_.neighbors(v)) {
                if ((s.dom[u] & c) == 0) continue;
                if (s.fixed[u] || (s.dom[u] &= ~c) == 0) {
                    ++weight_[u];
                    ++weight_[v];
                    ok = false;
                    break;
                }
                push(u);
            }
            if (!ok) break;
        }
        if (!check_c2(s, v)) {
            ok = false;
            break;
        }
        for (Vertex w : g_.neighbors(v)) {
            if (!check_c2(s, w)) {
                ok = false;
                break;
            }
        }
        // Compact the queue now and then so it does not grow without bound.
        if (head > 4096 && head * 2 > queue_.size()) {
            queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(head));
            head = 0;
        }
    }
    for (std::size_t i = head; i < queue_.size(); ++i) queued_[queue_[i]] = 0;
    queue_.clear();
    return ok;
}

Vertex KrSearch::pick_branch_vertex(const State& s, std::span<const Vertex> unfixed) const {
    // minimise dom / wdeg; ties go to more uncolored neighbours, then degree
    Vertex best = unfixed.front();
    std::uint64_t best_dom = 0;
    std::uint64_t best_w = 0;
    std::size_t best_open = 0;
    std::size_t best_deg = 0;
    bool first = true;
    for (Vertex v : unfixed) {
        const auto dom = static_cast<std::uint64_t>(mask_size(s.dom[v]));
        std::uint64_t w = 1 + weight_[v];
        std::size_t open = 0;
        for (Vertex u : g_.neighbors(v)) {
            w += weight_[u];
            open += s.fixed[u] ? 0 : 1;
        }
        const std::size_t deg = g_.degree(v);
        const std::uint64_t lhs = dom * best_w;
        const std::uint64_t rhs = best_dom * w;
        const bool better = first || lhs < rhs ||
                            (lhs == rhs && (open > best_open || (open == best_open && deg > best_deg)));
        if (better) {
            first = false;
            best = v;
            best_dom = dom;
            best_w = w;
            best_open = open;
            best_deg = deg;
        }
    }
    return best;
}

Mask KrSearch::branch_values(const State& s, Vertex v) const {
    if (!symmetric_) return s.dom[v];
    Mask used = 0;
    for (std::size_t u = 0; u < s.fixed.size(); ++u) {
        if (s.fixed[u]) used |= s.dom[u];
    }
    const Mask unused = full_mask(k_) & ~used;
    const Mask first_unused = unused & (~unused + 1);
    return s.dom[v] & (used | first_unused);
}

std::vector<std::vector<Vertex>> KrSearch::components(const State& s, std::span<const Vertex> unfixed) {
    auto find = [this](Vertex x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    };
    auto unite = [&](Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    };
    ++stamp_now_;
    for (Vertex v : unfixed) {
        parent_[v] = v;
        stamp_[v] = stamp_now_;
    }
    auto entailed = [&](Vertex w) {
        if (need_[w] == 0) return true;
        Mask seen = 0;
        for (Vertex u : g_.neighbors(w)) {
            if (s.fixed[u]) seen |= s.dom[u];
        }
        return static_cast<std::uint32_t>(mask_size(seen)) >= need_[w];
    };
    for (Vertex v : unfixed) {
        for (Vertex u : g_.neighbors(v)) {
            if (!s.fixed[u]) {
                if (stamp_[u] == stamp_now_) unite(v, u);
                continue;
            }
            // a fixed neighbour whose C2 is still open couples its whole neighbourhood
            if (entailed(u)) continue;
            for (Vertex x : g_.neighbors(u)) {
                if (!s.fixed[x] && stamp_[x] == stamp_now_) unite(v, x);
            }
        }
    }
    std::vector<std::vector<Vertex>> groups;
    std::vector<std::int64_t> slot(g_.vertex_count(), -1);
    for (Vertex v : unfixed) {
        const Vertex root = find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::int64_t>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[root])].push_back(v);
    }
    return groups;
}

bool KrSearch::search(State& s, std::vector<Vertex> scope) {
    ++stats_.nodes;
    std::erase_if(scope, [&](Vertex v) { return s.fixed[v] != 0; });
    if (scope.empty()) return true;

    if (options_.decompose) {
        auto groups = components(s, scope);
        if (groups.size() > 1) {
            std::sort(groups.begin(), groups.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            for (auto& group : groups) {
                if (!search(s, std::move(group))) return false;
            }
            return true;
        }
    }

    const Vertex v = pick_branch_vertex(s, scope);
    Mask values = branch_values(s, v);
    while (values) {
        const Mask bit = values & (~values + 1);
        values &= values - 1;
        State child = s;
        child.dom[v] = bit;
        const Vertex seed[] = {v};
        if (propagate(child, seed) && search(child, scope)) {
            s = std::move(child);
            return true;
        }
    }
    ++stats_.failures;
    return false;
}

std::vector<Color> KrSearch::colors_of(const State& s) const {
    std::vector<Color> colors(s.dom.size());
    for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = mask_color(s.dom[v]);
    return colors;
}

std::optional<std::vector<Color>> KrSearch::solve_parallel(State root) {
    std::vector<Vertex> unfixed;
    for (Vertex v = 0; v < root.dom.size(); ++v) {
        if (!root.fixed[v]) unfixed.push_back(v);
    }
    if (unfixed.empty()) return colors_of(root);
    const Vertex v = pick_branch_vertex(root, unfixed);
    Mask values = branch_values(root, v);

    struct Branch {
        std::future<std::optional<std::vector<Color>>> result;
    };
    std::vector<Branch> branches;
    std::vector<Mask> bits;
    while (values) {
        bits.push_back(values & (~values + 1));
        values &= values - 1;
    }
    // Branches are merged in value order, so the witness does not depend on
    // thread timing.
    std::optional<std::vector<Color>> answer;
    for (std::size_t start = 0; start < bits.size() && !answer; start += options_.jobs) {
        const std::size_t stop = std::min(bits.size(), start + options_.jobs);
        std::vector<std::future<std::pair<std::optional<std::vector<Color>>, SolverStats>>> running;
        for (std::size_t i = start; i < stop; ++i) {
            running.push_back(std::async(std::launch::async, [this, &root, v, unfixed, bit = bits[i]] {
                KrSearch worker = *this;
                worker.stats_ = {};
                State child = root;
                child.dom[v] = bit;
                const Vertex seed[] = {v};
                std::optional<std::vector<Color>> out;
                if (worker.propagate(child, seed) && worker.search(child, unfixed)) out = worker.colors_of(child);
                return std::make_pair(std::move(out), worker.stats_);
            }));
        }
        for (auto& f : running) {
            auto [out, st] = f.get();
            stats_.nodes += st.nodes;
            stats_.failures += st.failures;
            if (out && !answer) answer = std::move(out);
        }
    }
    return answer;
}

std::optional<std::vector<Color>> KrSearch::solve() {
    State s{initial_, std::vector<std::uint8_t>(initial_.size(), 0)};
    std::vector<Vertex> all(g_.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    if (!propagate(s, all)) return std::nullopt;
    if (options_.jobs > 1) return solve_parallel(std::move(s));
    if (!search(s, all)) return std::nullopt;
    return colors_of(s);
}

bool KrSearch::enumerate_from(State& s, const std::function<bool(std::span<const Color>)>& visit,
                              std::uint64_t& count, bool& stop) {
    ++stats_.nodes;
    std::vector<Vertex> unfixed;
    for (Vertex v = 0; v < s.dom.size(); ++v) {
        if (!s.fixed[v]) unfixed.push_back(v);
    }
    if (unfixed.empty()) {
        ++count;
        const auto colors = colors_of(s);
        if (!visit(colors)) stop = true;
        return true;
    }
    const Vertex v = pick_branch_vertex(s, unfixed);
    Mask values = s.dom[v];
    while (values && !stop) {
        const Mask bit = values & (~values + 1);
        values &= values - 1;
        State child = s;
        child.dom[v] = bit;
        const Vertex seed[] = {v};
        if (propagate(child, seed)) enumerate_from(child, visit, count, stop);
    }
    return true;
}

std::uint64_t KrSearch::enumerate(const std::function<bool(std::span<const Color>)>& visit) {
    State s{initial_, std::vector<std::uint8_t>(initial_.size(), 0)};
    std::vector<Vertex> all(g_.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    std::uint64_t count = 0;
    bool stop = false;
    if (!propagate(s, all)) return 0;
    enumerate_from(s, visit, count, stop);
    return count;
}

}  // namespace condcolor::detail
