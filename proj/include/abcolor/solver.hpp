#ifndef ABCOLOR_SOLVER_HPP
#define ABCOLOR_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abcolor/coloring.hpp"
#include "abcolor/graph.hpp"

namespace abcolor {

struct Budget {
    long long max_nodes = 10'000'000;
    std::optional<double> max_seconds;  // off by default, keeps runs deterministic
};

enum class SolveStatus : uint8_t { colorable, not_colorable, unknown };

struct SolveOutcome {
    SolveStatus status = SolveStatus::unknown;
    std::optional<MixedColoring> witness;
    long long nodes_explored = 0;
};

inline const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::colorable: return "COLORABLE";
        case SolveStatus::not_colorable: return "NOT_COLORABLE";
        case SolveStatus::unknown: return "UNKNOWN";
    }
    return "?";
}

// Per-vertex restrictions: fixed pre-assignments (first-class so precolored
// lemmas are directly testable) and tag masks for universal gadget checks.
struct SearchConstraints {
    static constexpr uint8_t allow_d1 = 1;
    static constexpr uint8_t allow_d2 = 2;

    std::vector<VertexColor> fixed;  // kind none = free
    std::vector<uint8_t> allowed;    // empty = both tags everywhere

    static SearchConstraints free_for(int n) {
        SearchConstraints c;
        c.fixed.assign(n, VertexColor{});
        c.allowed.assign(n, allow_d1 | allow_d2);
        return c;
    }
};

namespace detail {

// Backtracking search over tagged colorings. Vertices are branched in a fixed
// order (largest square-graph degree first, then id). After each assignment,
// affected vertices are rechecked: zero admissible colors fails the branch, a
// single admissible color is assigned immediately. Class symmetry is broken
// by admitting, per tag, only indices already in use plus the lowest unused
// one; unused indices are interchangeable, so this is complete.
class Searcher {
public:
    Searcher(const Graph& g, Params p, const Budget& budget, const SearchConstraints* cons)
        : g_(g), p_(p), budget_(budget) {
        if (p.d1 < 0 || p.d2 < 0) throw std::invalid_argument("solver: negative class count");
        n_ = g.n();
        sq_adj_.resize(n_);
        for (int v = 0; v < n_; ++v) sq_adj_[v] = two_ball(g, v);

        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return sq_adj_[a].size() > sq_adj_[b].size();
        });

        colors_.assign(n_, VertexColor{});
        d1_block_.assign(static_cast<size_t>(n_) * p_.d1, 0);
        d2_block_.assign(static_cast<size_t>(n_) * p_.d2, 0);
        d1_count_.assign(p_.d1, 0);
        d2_count_.assign(p_.d2, 0);
        allowed_.assign(n_, SearchConstraints::allow_d1 | SearchConstraints::allow_d2);

        if (cons) {
            if (!cons->allowed.empty()) {
                if (static_cast<int>(cons->allowed.size()) != n_)
                    throw std::invalid_argument("solver: constraint size mismatch");
                allowed_ = cons->allowed;
            }
            if (!cons->fixed.empty() && static_cast<int>(cons->fixed.size()) != n_)
                throw std::invalid_argument("solver: constraint size mismatch");
            for (int v = 0; cons && v < static_cast<int>(cons->fixed.size()); ++v) {
                const auto& f = cons->fixed[v];
                if (f.kind == ColorKind::none) continue;
                int limit = f.kind == ColorKind::d1 ? p_.d1 : p_.d2;
                if (f.index < 0 || f.index >= limit)
                    throw std::invalid_argument("solver: fixed color out of range at vertex " +
                                                std::to_string(v));
                pre_assignments_.emplace_back(v, f);
            }
        }
        start_ = std::chrono::steady_clock::now();
    }

    // First-solution search.
    SolveOutcome decide() {
        SolveOutcome out;
        if (!apply_pre_assignments()) {
            out.status = aborted_ ? SolveStatus::unknown : SolveStatus::not_colorable;
            out.nodes_explored = nodes_;
            return out;
        }
        found_ = false;
        dfs_first();
        out.nodes_explored = nodes_;
        if (found_) {
            out.status = SolveStatus::colorable;
            out.witness = witness_;
        } else {
            out.status = aborted_ ? SolveStatus::unknown : SolveStatus::not_colorable;
        }
        return out;
    }

    // Visits every total coloring, one canonical representative per
    // class-permutation orbit. Returns not_colorable when the space was
    // exhausted (regardless of hits), unknown on budget abort.
    SolveStatus enumerate(const std::function<bool(const MixedColoring&)>& emit) {
        emit_ = &emit;
        stop_emitting_ = false;
        if (!apply_pre_assignments())
            return aborted_ ? SolveStatus::unknown : SolveStatus::not_colorable;
        dfs_all();
        emit_ = nullptr;
        return (aborted_ || stop_emitting_) ? SolveStatus::unknown : SolveStatus::not_colorable;
    }

    long long nodes() const { return nodes_; }

private:
    bool budget_ok() {
        if (nodes_ >= budget_.max_nodes) {
            aborted_ = true;
            return false;
        }
        if (budget_.max_seconds && (nodes_ & 1023) == 0) {
            auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
            if (dt.count() > *budget_.max_seconds) {
                aborted_ = true;
                return false;
            }
        }
        return true;
    }

    int lowest_unused(const std::vector<int>& count) const {
        for (int i = 0; i < static_cast<int>(count.size()); ++i)
            if (count[i] == 0) return i;
        return -1;
    }

    // Admissible colors for v under the effective palette, deterministic order.
    void admissible(int v, std::vector<VertexColor>& out) const {
        out.clear();
        int fresh1 = lowest_unused(d1_count_);
        if (allowed_[v] & SearchConstraints::allow_d1) {
            for (int i = 0; i < p_.d1; ++i) {
                if (d1_count_[i] == 0 && i != fresh1) continue;
                if (d1_block_[static_cast<size_t>(v) * p_.d1 + i] == 0) out.push_back(d1_color(i));
            }
        }
        int fresh2 = lowest_unused(d2_count_);
        if (allowed_[v] & SearchConstraints::allow_d2) {
            for (int j = 0; j < p_.d2; ++j) {
                if (d2_count_[j] == 0 && j != fresh2) continue;
                if (d2_block_[static_cast<size_t>(v) * p_.d2 + j] == 0) out.push_back(d2_color(j));
            }
        }
    }

    void assign(int v, VertexColor c) {
        colors_[v] = c;
        trail_.push_back(v);
        if (c.kind == ColorKind::d1) {
            ++d1_count_[c.index];
            for (int w : g_.neighbors(v)) ++d1_block_[static_cast<size_t>(w) * p_.d1 + c.index];
        } else {
            ++d2_count_[c.index];
            for (int w : sq_adj_[v]) ++d2_block_[static_cast<size_t>(w) * p_.d2 + c.index];
        }
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            VertexColor c = colors_[v];
            colors_[v] = VertexColor{};
            if (c.kind == ColorKind::d1) {
                --d1_count_[c.index];
                for (int w : g_.neighbors(v)) --d1_block_[static_cast<size_t>(w) * p_.d1 + c.index];
            } else {
                --d2_count_[c.index];
                for (int w : sq_adj_[v]) --d2_block_[static_cast<size_t>(w) * p_.d2 + c.index];
            }
        }
    }

    // Assigns v := c, then runs unit propagation. False on dead end; the
    // caller unwinds via undo_to.
    bool assign_and_propagate(int v, VertexColor c) {
        std::deque<int> queue;
        auto push_affected = [&](int u) {
            if (u >= 0) {
                const auto& ring = colors_[u].kind == ColorKind::d1 ? g_.neighbors(u) : sq_adj_[u];
                for (int w : ring)
                    if (colors_[w].kind == ColorKind::none) queue.push_back(w);
            }
        };
        assign(v, c);
        push_affected(v);
        std::vector<VertexColor> cand;
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            if (colors_[w].kind != ColorKind::none) continue;
            admissible(w, cand);
            if (cand.empty()) return false;
            if (cand.size() == 1) {
                assign(w, cand[0]);
                push_affected(w);
            }
        }
        return true;
    }

    bool apply_pre_assignments() {
        for (auto [v, c] : pre_assignments_) {
            if (colors_[v].kind != ColorKind::none) {
                if (!(colors_[v] == c)) return false;  // propagation already chose otherwise
                continue;
            }
            size_t blocked = c.kind == ColorKind::d1
                                 ? d1_block_[static_cast<size_t>(v) * p_.d1 + c.index]
                                 : d2_block_[static_cast<size_t>(v) * p_.d2 + c.index];
            if (blocked) return false;
            if ((c.kind == ColorKind::d1 && !(allowed_[v] & SearchConstraints::allow_d1)) ||
                (c.kind == ColorKind::d2 && !(allowed_[v] & SearchConstraints::allow_d2)))
                return false;
            if (!assign_and_propagate(v, c)) return false;
        }
        // catch vertices that start out overconstrained
        std::vector<VertexColor> cand;
        for (int v : order_) {
            if (colors_[v].kind != ColorKind::none) continue;
            admissible(v, cand);
            if (cand.empty()) return false;
            if (cand.size() == 1 && !assign_and_propagate(v, cand[0])) return false;
        }
        return true;
    }

    int next_unassigned() {
        while (cursor_ < n_ && colors_[order_[cursor_]].kind != ColorKind::none) ++cursor_;
        return cursor_ < n_ ? order_[cursor_] : -1;
    }

    bool dfs_first() {
        int saved_cursor = cursor_;
        int v = next_unassigned();
        if (v == -1) {
            witness_ = MixedColoring(n_);
            witness_.colors = colors_;
            found_ = true;
            return true;
        }
        std::vector<VertexColor> cand;
        admissible(v, cand);
        for (const auto& c : cand) {
            ++nodes_;
            if (!budget_ok()) break;
            size_t mark = trail_.size();
            if (assign_and_propagate(v, c)) {
                if (dfs_first()) return true;
            }
            undo_to(mark);
            cursor_ = saved_cursor;
            if (aborted_) return false;
        }
        cursor_ = saved_cursor;
        return false;
    }

    void dfs_all() {
        if (aborted_ || stop_emitting_) return;
        int saved_cursor = cursor_;
        int v = next_unassigned();
        if (v == -1) {
            MixedColoring sol(n_);
            sol.colors = colors_;
            if (!(*emit_)(canonicalized(sol))) stop_emitting_ = true;
            cursor_ = saved_cursor;
            return;
        }
        std::vector<VertexColor> cand;
        admissible(v, cand);
        for (const auto& c : cand) {
            ++nodes_;
            if (!budget_ok()) break;
            size_t mark = trail_.size();
            if (assign_and_propagate(v, c)) dfs_all();
            undo_to(mark);
            cursor_ = saved_cursor;
            if (aborted_ || stop_emitting_) break;
        }
        cursor_ = saved_cursor;
    }

    const Graph& g_;
    Params p_;
    Budget budget_;
    int n_ = 0;
    std::vector<std::vector<int>> sq_adj_;
    std::vector<int> order_;
    int cursor_ = 0;

    std::vector<VertexColor> colors_;
    std::vector<uint16_t> d1_block_, d2_block_;
    std::vector<int> d1_count_, d2_count_;
    std::vector<uint8_t> allowed_;
    std::vector<std::pair<int, VertexColor>> pre_assignments_;
    std::vector<int> trail_;

    long long nodes_ = 0;
    bool aborted_ = false;
    bool found_ = false;
    bool stop_emitting_ = false;
    MixedColoring witness_;
    const std::function<bool(const MixedColoring&)>* emit_ = nullptr;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Sound and complete within budget; deterministic for fixed inputs.
inline SolveOutcome decide(const Graph& g, Params p, const Budget& budget = {},
                           const SearchConstraints* constraints = nullptr) {
    detail::Searcher s(g, p, budget, constraints);
    SolveOutcome out = s.decide();
    if (out.status == SolveStatus::colorable) {
        if (!out.witness || !out.witness->is_total() || !verify(g, p, *out.witness).empty())
            throw std::runtime_error("solver: produced witness failed verification");
    }
    return out;
}

struct EnumerationResult {
    std::vector<MixedColoring> colorings;  // canonical representatives
    bool overflow = false;                 // cap exceeded
    bool complete = true;                  // false when the budget ran out
    long long nodes_explored = 0;
};

// Every valid total coloring up to class permutation, each verified.
inline EnumerationResult enumerate_colorings(const Graph& g, Params p, long long cap,
                                             const Budget& budget = {},
                                             const SearchConstraints* constraints = nullptr) {
    if (cap <= 0) throw std::invalid_argument("enumerate: cap must be positive");
    detail::Searcher s(g, p, budget, constraints);
    EnumerationResult out;
    std::set<MixedColoring> seen;
    SolveStatus st = s.enumerate([&](const MixedColoring& c) {
        if (!seen.insert(c).second) return true;
        if (static_cast<long long>(seen.size()) > cap) {
            out.overflow = true;
            return false;
        }
        if (!verify(g, p, c).empty())
            throw std::runtime_error("solver: enumerated coloring failed verification");
        return true;
    });
    out.nodes_explored = s.nodes();
    out.complete = st == SolveStatus::not_colorable && !out.overflow;
    if (out.overflow) seen.erase(std::prev(seen.end()));
    out.colorings.assign(seen.begin(), seen.end());
    return out;
}

// ---------------------------------------------------------------------------
// Gadget specifications and the universal checker.

enum class GadgetPropertyKind : uint8_t {
    forced_d2,        // port takes a d2 color in every valid coloring
    forced_d1,        // port takes a d1 color in every valid coloring
    iff_d1_d2,        // first port is d1 exactly when second port is d2
    at_least_one_d2,  // not all listed ports are d1
    corner_pattern,   // 4 ports: all share one d1 class, or 3 share and 1 is d2
};

struct GadgetProperty {
    GadgetPropertyKind kind;
    std::vector<std::string> ports;
};

struct GadgetSpec {
    Graph gadget;
    std::vector<std::pair<std::string, int>> ports;  // named, distinct vertices
    GadgetProperty property;

    int port(const std::string& name) const {
        for (const auto& [pname, v] : ports)
            if (pname == name) return v;
        throw std::invalid_argument("gadget: no port named `" + name + "`");
    }

    void validate() const {
        std::set<int> seen;
        for (const auto& [name, v] : ports) {
            if (v < 0 || v >= gadget.n())
                throw std::invalid_argument("gadget: port `" + name + "` out of range");
            if (!seen.insert(v).second)
                throw std::invalid_argument("gadget: duplicate port vertex " + std::to_string(v));
        }
        for (const auto& name : property.ports) (void)port(name);
    }
};

enum class GadgetCheckStatus : uint8_t { holds, fails_with_witness, unknown };

struct GadgetCheckResult {
    GadgetCheckStatus status = GadgetCheckStatus::unknown;
    std::optional<MixedColoring> witness;  // a coloring violating the property
    long long nodes_explored = 0;
};

// Evaluates the property over all valid colorings by searching for a
// counterexample with the existential engine (tag restrictions), except
// corner_pattern which filters an exhaustive enumeration. Colorability of
// the gadget itself is not checked here.
inline GadgetCheckResult check_gadget(const GadgetSpec& spec, Params p, const Budget& budget = {}) {
    spec.validate();
    GadgetCheckResult res;
    const Graph& g = spec.gadget;

    auto counterexample = [&](const std::vector<std::pair<int, uint8_t>>& masks) {
        SearchConstraints cons = SearchConstraints::free_for(g.n());
        for (auto [v, mask] : masks) cons.allowed[v] = mask;
        SolveOutcome out = decide(g, p, budget, &cons);
        res.nodes_explored += out.nodes_explored;
        return out;
    };

    auto step = [&](SolveOutcome out) {
        if (res.status != GadgetCheckStatus::holds) return;  // already decided
        switch (out.status) {
            case SolveStatus::colorable:
                res.status = GadgetCheckStatus::fails_with_witness;
                res.witness = out.witness;
                break;
            case SolveStatus::unknown: res.status = GadgetCheckStatus::unknown; break;
            case SolveStatus::not_colorable: break;
        }
    };

    res.status = GadgetCheckStatus::holds;
    switch (spec.property.kind) {
        case GadgetPropertyKind::forced_d2: {
            int v = spec.port(spec.property.ports.at(0));
            step(counterexample({{v, SearchConstraints::allow_d1}}));
            break;
        }
        case GadgetPropertyKind::forced_d1: {
            int v = spec.port(spec.property.ports.at(0));
            step(counterexample({{v, SearchConstraints::allow_d2}}));
            break;
        }
        case GadgetPropertyKind::iff_d1_d2: {
            int a = spec.port(spec.property.ports.at(0));
            int b = spec.port(spec.property.ports.at(1));
            step(counterexample(
                {{a, SearchConstraints::allow_d1}, {b, SearchConstraints::allow_d1}}));
            step(counterexample(
                {{a, SearchConstraints::allow_d2}, {b, SearchConstraints::allow_d2}}));
            break;
        }
        case GadgetPropertyKind::at_least_one_d2: {
            std::vector<std::pair<int, uint8_t>> masks;
            for (const auto& name : spec.property.ports)
                masks.emplace_back(spec.port(name), SearchConstraints::allow_d1);
            step(counterexample(masks));
            break;
        }
        case GadgetPropertyKind::corner_pattern: {
            if (spec.property.ports.size() != 4)
                throw std::invalid_argument("gadget: corner pattern needs exactly 4 ports");
            std::vector<int> corners;
            for (const auto& name : spec.property.ports) corners.push_back(spec.port(name));
            auto matches = [&](const MixedColoring& c) {
                std::vector<int> d1s;
                int d2s = 0;
                for (int v : corners) {
                    if (c.at(v).kind == ColorKind::d2)
                        ++d2s;
                    else
                        d1s.push_back(c.at(v).index);
                }
                if (d2s > 1) return false;
                for (size_t i = 1; i < d1s.size(); ++i)
                    if (d1s[i] != d1s[0]) return false;
                return true;
            };
            EnumerationResult all = enumerate_colorings(g, p, 1'000'000, budget);
            res.nodes_explored += all.nodes_explored;
            if (!all.complete || all.overflow) {
                res.status = GadgetCheckStatus::unknown;
                break;
            }
            for (const auto& c : all.colorings) {
                if (!matches(c)) {
                    res.status = GadgetCheckStatus::fails_with_witness;
                    res.witness = c;
                    break;
                }
            }
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Obstruction profiles: how (2,k)-colorings of g - v block restoring a
// degree-2 vertex v with neighbors v1, v2.

struct ObstructionPair {
    std::vector<int> s1, s2;  // sorted d2 classes on N(v1), N(v2)

    bool operator<(const ObstructionPair& o) const {
        return std::tie(s1, s2) < std::tie(o.s1, o.s2);
    }
    bool operator==(const ObstructionPair& o) const { return s1 == o.s1 && s2 == o.s2; }
};

struct ObstructionProfile {
    bool has_bc = false;                // some coloring gives v1,v2 one d2 class
    std::set<ObstructionPair> pairs;    // closed under d2-class permutation
    long long colorings_seen = 0;       // representatives enumerated
    long long unblocked = 0;            // representatives that extend past v
    bool complete = true;               // enumeration finished within budget

    bool blocking() const { return complete && colorings_seen > 0 && unblocked == 0; }
    bool full_pair_only() const {
        if (pairs.size() != 1) return false;
        const auto& pr = *pairs.begin();
        return pr.s1.size() == pr.s2.size() && pr.s1 == pr.s2 && !pr.s1.empty();
    }
};

// Enumerates all (2,k)-colorings of g_minus_v and records the realized
// obstructions for the removed vertex. Pair events are stored closed under
// permutations of the d2 classes, matching the full (non-symmetry-reduced)
// coloring space.
inline ObstructionProfile obstruction_profile(const Graph& g_minus_v, int v1, int v2, int k,
                                              const Budget& budget = {}) {
    if (v1 < 0 || v2 < 0 || v1 >= g_minus_v.n() || v2 >= g_minus_v.n() || v1 == v2)
        throw std::invalid_argument("obstruction profile: bad neighbor pair");
    if (k < 0) throw std::invalid_argument("obstruction profile: negative k");

    ObstructionProfile prof;
    Params p{2, k};
    detail::Searcher s(g_minus_v, p, budget, nullptr);

    std::vector<int> perm(k);
    auto add_pair_closure = [&](const std::set<int>& s1, const std::set<int>& s2) {
        for (int i = 0; i < k; ++i) perm[i] = i;
        do {
            ObstructionPair pr;
            for (int x : s1) pr.s1.push_back(perm[x]);
            for (int x : s2) pr.s2.push_back(perm[x]);
            std::sort(pr.s1.begin(), pr.s1.end());
            std::sort(pr.s2.begin(), pr.s2.end());
            prof.pairs.insert(std::move(pr));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    SolveStatus st = s.enumerate([&](const MixedColoring& c) {
        ++prof.colorings_seen;
        const auto &c1 = c.at(v1), &c2 = c.at(v2);
        if (c1.kind == ColorKind::d2 && c2.kind == ColorKind::d2 && c1.index == c2.index) {
            prof.has_bc = true;
            return true;
        }
        if (c1.kind == ColorKind::d1 && c2.kind == ColorKind::d1 && c1.index != c2.index) {
            std::set<int> s1, s2, both;
            for (int w : g_minus_v.neighbors(v1))
                if (c.at(w).kind == ColorKind::d2) s1.insert(c.at(w).index);
            for (int w : g_minus_v.neighbors(v2))
                if (c.at(w).kind == ColorKind::d2) s2.insert(c.at(w).index);
            both = s1;
            both.insert(s2.begin(), s2.end());
            if (static_cast<int>(both.size()) == k) {
                add_pair_closure(s1, s2);
                return true;
            }
        }
        ++prof.unblocked;
        return true;
    });
    prof.complete = st == SolveStatus::not_colorable;
    return prof;
}

}  // namespace abcolor

#endif  // ABCOLOR_SOLVER_HPP
