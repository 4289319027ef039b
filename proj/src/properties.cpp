#include "hx/properties.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <string>

#include "hx/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hx {

namespace {

int pc(std::uint64_t m) { return std::popcount(m); }

// ---- max_union ----------------------------------------------------------
//
// Phase A finds the value with a greedy-ordered branch and bound; phase B
// reconstructs the lexicographically least witness for the known value by
// scanning candidates in colex index order.

struct UnionValueSearch {
    const std::vector<std::uint64_t>& masks;
    int s;
    int best = 0;

    void run() {
        std::vector<int> idx(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i)
            idx[i] = static_cast<int>(i);
        descend(0, idx, s);
    }

    void descend(std::uint64_t cur, const std::vector<int>& remaining, int picks) {
        if (picks == 0) {
            best = std::max(best, pc(cur));
            return;
        }
        // Order by marginal coverage against the current union. Marginals
        // are in {0,...,k}, so a bucket pass replaces the sort; prefix sums
        // and suffix unions make every child bound O(1). The bound is
        // current + top `picks` marginals, additionally capped by the
        // vertices actually reachable from the remaining candidates.
        const std::size_t m = remaining.size();
        std::array<std::vector<int>, 4> bucket; // k <= 3
        for (std::size_t i = 0; i < m; ++i) {
            int marg = pc(masks[static_cast<std::size_t>(remaining[i])] & ~cur);
            bucket[static_cast<std::size_t>(std::min(marg, 3))].push_back(remaining[i]);
        }
        std::vector<int> sorted;
        std::vector<int> prefix; // prefix[t] = sum of the first t marginals
        sorted.reserve(m);
        prefix.reserve(m + 1);
        prefix.push_back(0);
        for (int g = 3; g >= 0; --g)
            for (int idx : bucket[static_cast<std::size_t>(g)]) {
                sorted.push_back(idx);
                prefix.push_back(prefix.back() + g);
            }
        std::vector<std::uint64_t> suffix_or(m + 1, 0);
        for (std::size_t i = m; i-- > 0;)
            suffix_or[i] = suffix_or[i + 1] | masks[static_cast<std::size_t>(sorted[i])];

        auto child_bound = [&](std::size_t from) {
            std::size_t to = std::min(m, from + static_cast<std::size_t>(picks));
            int by_marginals = pc(cur) + (from >= m ? 0 : prefix[to] - prefix[from]);
            int by_reachable = pc(cur | suffix_or[from]);
            return std::min(by_marginals, by_reachable);
        };

        if (child_bound(0) <= best)
            return;

        for (std::size_t i = 0; i + static_cast<std::size_t>(picks) <= m; ++i) {
            std::uint64_t next = cur | masks[static_cast<std::size_t>(sorted[i])];
            std::vector<int> rest(sorted.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                  sorted.end());
            descend(next, rest, picks - 1);
            if (child_bound(i + 1) <= best)
                return;
        }
    }
};

// Lexicographically least s-list (ascending colex indices) with union of
// exactly `target`. Exists whenever target is the max: once the union hits
// the target, no superset can exceed it, so the smallest remaining indices
// complete the lex-least witness directly.
struct UnionWitnessSearch {
    const std::vector<std::uint64_t>& masks;
    int s;
    int target;
    std::vector<int> picked;
    std::vector<std::uint64_t> suffix_or; // static: masks are in index order

    void prepare() {
        suffix_or.assign(masks.size() + 1, 0);
        for (std::size_t i = masks.size(); i-- > 0;)
            suffix_or[i] = suffix_or[i + 1] | masks[i];
    }

    bool descend(std::uint64_t cur, std::size_t from, int picks) {
        if (pc(cur) == target) {
            for (int t = 0; t < picks; ++t)
                picked.push_back(static_cast<int>(from) + t);
            return true;
        }
        if (picks == 0)
            return false;
        if (pc(cur | suffix_or[from]) < target)
            return false;
        // top `picks` marginals in the suffix, bucketed by value
        std::array<int, 4> count{};
        for (std::size_t i = from; i < masks.size(); ++i)
            ++count[static_cast<std::size_t>(std::min(pc(masks[i] & ~cur), 3))];
        int bound = pc(cur);
        int left = picks;
        for (int g = 3; g >= 1 && left > 0; --g) {
            int take = std::min(left, count[static_cast<std::size_t>(g)]);
            bound += take * g;
            left -= take;
        }
        if (bound < target)
            return false;

        for (std::size_t i = from; i + static_cast<std::size_t>(picks) <= masks.size(); ++i) {
            picked.push_back(static_cast<int>(i));
            if (descend(cur | masks[i], i + 1, picks - 1))
                return true;
            picked.pop_back();
        }
        return false;
    }
};

// ---- matching number ----------------------------------------------------

struct MatchingValueSearch {
    const std::vector<std::uint64_t>& masks;
    int k;
    int best = 0;
    int stop_at; // early exit once a matching this large is found

    explicit MatchingValueSearch(const std::vector<std::uint64_t>& m, int arity, int cap)
        : masks(m), k(arity), stop_at(cap) {}

    void descend(std::uint64_t avail, int count) {
        best = std::max(best, count);
        if (best >= stop_at)
            return;
        std::uint64_t coverable = 0;
        for (std::uint64_t e : masks)
            if ((e & ~avail) == 0)
                coverable |= e;
        if (!coverable)
            return;
        if (count + pc(coverable) / k <= best)
            return;
        std::uint64_t low = coverable & (~coverable + 1); // lowest coverable vertex
        for (std::uint64_t e : masks) {
            if ((e & ~avail) == 0 && (e & low)) {
                descend(avail & ~e, count + 1);
                if (best >= stop_at)
                    return;
            }
        }
        descend(avail & ~low, count); // lowest vertex stays unmatched
    }
};

// Lexicographically least matching of a known size, scanning edges in colex
// index order, include-first.
struct MatchingWitnessSearch {
    const std::vector<std::uint64_t>& masks;
    int k;
    int target;
    std::vector<int> picked;

    bool descend(std::uint64_t avail, std::size_t from, int count) {
        if (count == target)
            return true;
        if (from >= masks.size())
            return false;
        // Cheap feasibility bound on the rest.
        std::uint64_t coverable = 0;
        for (std::size_t i = from; i < masks.size(); ++i)
            if ((masks[i] & ~avail) == 0)
                coverable |= masks[i];
        if (count + pc(coverable) / k < target)
            return false;
        for (std::size_t i = from; i < masks.size(); ++i) {
            if ((masks[i] & ~avail) != 0)
                continue;
            picked.push_back(static_cast<int>(i));
            if (descend(avail & ~masks[i], i + 1, count + 1))
                return true;
            picked.pop_back();
        }
        return false;
    }
};

std::vector<Edge> edges_at(const Family& f, const std::vector<int>& indices) {
    std::vector<Edge> out;
    out.reserve(indices.size());
    for (int i : indices)
        out.push_back(Edge::of_mask(f.masks()[static_cast<std::size_t>(i)]));
    return out;
}

} // namespace

MaxUnion max_union(const Family& f, int s) {
    if (s < 1)
        throw invalid_argument_error("max_union requires s >= 1, got s = " + std::to_string(s));
    if (static_cast<std::size_t>(s) > f.size())
        throw invalid_argument_error("max_union requires s <= |f|, got s = " +
                                     std::to_string(s) + ", |f| = " +
                                     std::to_string(f.size()));

    const auto& masks = f.masks();
    int value = 0;

    const int threads = effective_threads();
    const bool parallel = threads > 1 && masks.size() >= 24 && s >= 3;
    if (parallel) {
        // Parallel over the first two picks (pairs balance far better than
        // single first picks). The shared incumbent only ever prunes subtrees
        // that cannot exceed it, so the maximum is order-independent.
        const std::int64_t m = static_cast<std::int64_t>(masks.size());
        std::atomic<int> global{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
        for (std::int64_t pair = 0; pair < m * m; ++pair) {
            const std::int64_t i = pair / m, j = pair % m;
            if (j <= i || j + s - 2 > m)
                continue;
            UnionValueSearch w{masks, s};
            w.best = global.load(std::memory_order_relaxed);
            std::vector<int> rest;
            rest.reserve(static_cast<std::size_t>(m - j - 1));
            for (std::int64_t t = j + 1; t < m; ++t)
                rest.push_back(static_cast<int>(t));
            w.descend(masks[static_cast<std::size_t>(i)] | masks[static_cast<std::size_t>(j)],
                      rest, s - 2);
            int seen = global.load(std::memory_order_relaxed);
            while (w.best > seen &&
                   !global.compare_exchange_weak(seen, w.best, std::memory_order_relaxed)) {
            }
        }
        value = global.load();
    } else {
        UnionValueSearch w{masks, s};
        w.run();
        value = w.best;
    }

    UnionWitnessSearch ws{masks, s, value, {}, {}};
    ws.prepare();
    if (!ws.descend(0, 0, s))
        throw error("internal: max_union witness reconstruction failed");
    return {value, edges_at(f, ws.picked)};
}

UCheckResult check_U(const Family& f, int s, int q) {
    if (s < 1)
        throw invalid_argument_error("check_U requires s >= 1, got s = " + std::to_string(s));
    if (f.size() < static_cast<std::size_t>(s))
        return {true, std::nullopt}; // fewer than s edges: vacuous
    MaxUnion mu = max_union(f, s);
    if (mu.size <= q)
        return {true, std::nullopt};
    return {false, UnionWitness{mu.edges, mu.size}};
}

MatchingWitness matching_number(const Family& f) {
    if (f.empty())
        return {0, {}};
    const auto& masks = f.masks();
    const int cap = f.ground_set() / f.arity();
    MatchingValueSearch vs(masks, f.arity(), cap);
    vs.descend(prefix_mask(f.ground_set()), 0);

    MatchingWitnessSearch ws{masks, f.arity(), vs.best, {}};
    if (!ws.descend(prefix_mask(f.ground_set()), 0, 0))
        throw error("internal: matching witness reconstruction failed");
    return {vs.best, edges_at(f, ws.picked)};
}

std::optional<ShiftViolation> shift_violation(const Family& f) {
    for (std::uint64_t m : f.masks()) {
        for (int j : Edge::of_mask(m).vertices()) {
            for (int i = 1; i < j; ++i) {
                if (m & vertex_bit(i))
                    continue;
                std::uint64_t lower = (m ^ vertex_bit(j)) | vertex_bit(i);
                if (!f.contains_mask(lower))
                    return ShiftViolation(Edge::of_mask(m), Edge::of_mask(lower));
            }
        }
    }
    return std::nullopt;
}

bool is_shifted(const Family& f) { return !shift_violation(f).has_value(); }

Family stabilize(const Family& f) {
    const int n = f.ground_set();
    std::vector<std::uint64_t> cur = f.masks();

    auto label_sum = [](const std::vector<std::uint64_t>& ms) {
        long long total = 0;
        for (std::uint64_t m : ms)
            for (int v = 1; v <= 64; ++v)
                if (m & vertex_bit(v))
                    total += v;
        return total;
    };
    long long potential = label_sum(cur);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                // S_ij against the family as it stands at this step.
                bool moved = false;
                std::vector<std::uint64_t> next;
                next.reserve(cur.size());
                for (std::uint64_t e : cur) {
                    if ((e & vertex_bit(j)) && !(e & vertex_bit(i))) {
                        std::uint64_t img = (e ^ vertex_bit(j)) | vertex_bit(i);
                        if (!std::binary_search(cur.begin(), cur.end(), img)) {
                            next.push_back(img);
                            moved = true;
                            continue;
                        }
                    }
                    next.push_back(e);
                }
                if (moved) {
                    std::sort(next.begin(), next.end());
                    cur = std::move(next);
                    changed = true;
                    long long p = label_sum(cur);
                    assert(p < potential); // compressions strictly lower the label sum
                    potential = p;
                }
            }
        }
    }

    Family out = Family::of_masks(n, f.arity(), std::move(cur));
    assert(out.size() == f.size());
    assert(is_shifted(out));
    return out;
}

StabilityStat r_stat(const Graph& g) {
    if (g.arity() != 2)
        throw invalid_arity_error("r_stat requires a graph (k = 2), got k = " +
                                  std::to_string(g.arity()));
    const int nu = matching_number(g).nu;
    int r = 0;
    for (int i = 1; i <= nu; ++i) {
        if (matching_number(delete_prefix(g, i)).nu == nu - i)
            r = i;
        else
            break; // nu(g - [i]) >= nu - i always, so the failure is final
    }
    return {r};
}

bool union_exceeds_with(std::uint64_t forced, const std::vector<std::uint64_t>& chosen,
                        int s, int q) {
    const int picks = s - 1;
    if (static_cast<int>(chosen.size()) < picks)
        return false;
    if (pc(forced) > q)
        return true;
    if (picks == 0)
        return false;
    if (picks == 1) {
        for (std::uint64_t m : chosen)
            if (pc(forced | m) > q)
                return true;
        return false;
    }

    // Candidates ordered by marginal against the forced edge; a prefix whose
    // union already exceeds q can always be padded to s distinct edges.
    std::vector<std::uint64_t> cand(chosen);
    std::stable_sort(cand.begin(), cand.end(), [&](std::uint64_t a, std::uint64_t b) {
        return pc(a & ~forced) > pc(b & ~forced);
    });
    // Marginals against the forced edge only shrink as the union grows, so
    // prefix sums of them stay valid upper bounds at every node; the suffix
    // union caps the bound by what is reachable at all.
    std::vector<int> static_marg(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i)
        static_marg[i] = pc(cand[i] & ~forced);
    std::vector<std::uint64_t> suffix_or(cand.size() + 1, 0);
    for (std::size_t i = cand.size(); i-- > 0;)
        suffix_or[i] = suffix_or[i + 1] | cand[i];

    struct Rec {
        const std::vector<std::uint64_t>& cand;
        const std::vector<int>& static_marg;
        const std::vector<std::uint64_t>& suffix_or;
        int q;
        bool found = false;

        void descend(std::uint64_t cur, std::size_t from, int left) {
            if (found)
                return;
            if (pc(cur) > q) {
                found = true;
                return;
            }
            if (left == 0)
                return;
            if (pc(cur | suffix_or[from]) <= q)
                return;
            int bound = pc(cur);
            int taken = 0;
            for (std::size_t i = from; i < cand.size() && taken < left; ++i, ++taken)
                bound += static_marg[i];
            if (bound <= q)
                return;
            for (std::size_t i = from; i + static_cast<std::size_t>(left) <= cand.size(); ++i) {
                descend(cur | cand[i], i + 1, left - 1);
                if (found)
                    return;
            }
        }
    };

    Rec rec{cand, static_marg, suffix_or, q};
    rec.descend(forced, 0, picks);
    return rec.found;
}

} // namespace hx
