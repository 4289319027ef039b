#include "reference.hpp"

#include <algorithm>
#include <bit>

#include "hx/errors.hpp"

namespace ref {

namespace {
int pc(std::uint64_t m) { return std::popcount(m); }

// Visits all s-subsets of [0, m) in lexicographic order of index lists.
template <typename Fn>
void for_each_combination(int m, int s, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    if (s > m)
        return;
    while (true) {
        fn(idx);
        int i = s - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - s + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}
} // namespace

NaiveMaxUnion max_union_naive(const hx::Family& f, int s) {
    if (s < 1 || static_cast<std::size_t>(s) > f.size())
        throw hx::invalid_argument_error("max_union_naive: bad s");
    const auto& masks = f.masks();
    NaiveMaxUnion best;
    for_each_combination(static_cast<int>(masks.size()), s, [&](const std::vector<int>& idx) {
        std::uint64_t u = 0;
        for (int i : idx)
            u |= masks[static_cast<std::size_t>(i)];
        if (pc(u) > best.size) { // strict: first (lex-least) maximizer wins
            best.size = pc(u);
            best.indices = idx;
        }
    });
    return best;
}

bool check_u_naive(const hx::Family& f, int s, int q) {
    if (f.size() < static_cast<std::size_t>(s))
        return true;
    return max_union_naive(f, s).size <= q;
}

NaiveMatching matching_number_naive(const hx::Family& f) {
    if (f.size() > 22)
        throw hx::invalid_argument_error("matching_number_naive: family too large");
    const auto& masks = f.masks();
    const int m = static_cast<int>(masks.size());

    NaiveMatching best;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        std::uint64_t seen = 0;
        bool disjoint = true;
        int cnt = 0;
        for (int i = 0; i < m && disjoint; ++i) {
            if (sub & (std::uint64_t{1} << i)) {
                if (seen & masks[static_cast<std::size_t>(i)])
                    disjoint = false;
                seen |= masks[static_cast<std::size_t>(i)];
                ++cnt;
            }
        }
        if (disjoint && cnt > best.nu)
            best.nu = cnt;
    }

    // Lexicographically least maximum matching: index lists in lex order,
    // include-first recursion with no pruning beyond disjointness.
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, std::uint64_t used) -> bool {
        if (static_cast<int>(pick.size()) == best.nu)
            return true;
        for (int i = from; i < m; ++i) {
            if (used & masks[static_cast<std::size_t>(i)])
                continue;
            pick.push_back(i);
            if (self(self, i + 1, used | masks[static_cast<std::size_t>(i)]))
                return true;
            pick.pop_back();
        }
        return false;
    };
    rec(rec, 0, 0);
    best.indices = pick;
    return best;
}

int graph_matching_naive(const hx::Graph& g) {
    if (g.arity() != 2)
        throw hx::invalid_arity_error("graph_matching_naive: not a graph");
    const auto& masks = g.masks();
    auto rec = [&](auto&& self, std::uint64_t avail) -> int {
        std::uint64_t coverable = 0;
        for (std::uint64_t e : masks)
            if ((e & ~avail) == 0)
                coverable |= e;
        if (!coverable)
            return 0;
        std::uint64_t low = coverable & (~coverable + 1);
        int best = self(self, avail & ~low); // leave it unmatched
        for (std::uint64_t e : masks)
            if ((e & ~avail) == 0 && (e & low))
                best = std::max(best, 1 + self(self, avail & ~e));
        return best;
    };
    return rec(rec, hx::prefix_mask(g.ground_set()));
}

hx::Graph shadow_naive(const hx::Family& f) {
    std::vector<std::uint64_t> pairs;
    for (const hx::Edge& e : f.edges()) {
        auto vs = e.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                pairs.push_back(hx::vertex_bit(vs[a]) | hx::vertex_bit(vs[b]));
    }
    return hx::Family::of_masks(f.ground_set(), 2, pairs);
}

bool dominates(const hx::Edge& a, const hx::Edge& b) {
    auto va = a.vertices();
    auto vb = b.vertices();
    if (va.size() != vb.size())
        return false;
    for (std::size_t i = 0; i < va.size(); ++i)
        if (va[i] > vb[i])
            return false;
    return true;
}

bool is_shifted_naive(const hx::Family& f) {
    // every k-subset dominated by a member must itself be a member
    std::vector<std::uint64_t> all;
    std::vector<int> stack;
    auto gen = [&](auto&& self, int next) -> void {
        if (static_cast<int>(stack.size()) == f.arity()) {
            all.push_back(hx::mask_of(stack));
            return;
        }
        for (int v = next; v <= f.ground_set(); ++v) {
            stack.push_back(v);
            self(self, v + 1);
            stack.pop_back();
        }
    };
    gen(gen, 1);
    for (std::uint64_t member : f.masks())
        for (std::uint64_t cand : all)
            if (dominates(hx::Edge::of_mask(cand), hx::Edge::of_mask(member)) &&
                !f.contains_mask(cand))
                return false;
    return true;
}

int max_shifted_u_naive(int n, int s, int q) {
    std::vector<std::uint64_t> triples;
    for (int c = 3; c <= n; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a)
                triples.push_back(hx::vertex_bit(a) | hx::vertex_bit(b) | hx::vertex_bit(c));

    const int m = static_cast<int>(triples.size());
    std::vector<std::uint64_t> chosen;
    int best = 0;

    auto u_ok_with = [&](std::uint64_t e) {
        if (static_cast<int>(chosen.size()) < s - 1)
            return true;
        // every (s-1)-subset of chosen, brute force
        bool violated = false;
        for_each_combination(static_cast<int>(chosen.size()), s - 1,
                             [&](const std::vector<int>& idx) {
                                 std::uint64_t u = e;
                                 for (int i : idx)
                                     u |= chosen[static_cast<std::size_t>(i)];
                                 if (pc(u) > q)
                                     violated = true;
                             });
        return !violated;
    };

    auto preds_included = [&](std::uint64_t e) {
        for (int v : hx::Edge::of_mask(e).vertices()) {
            if (v > 1 && !(e & hx::vertex_bit(v - 1))) {
                std::uint64_t pm = (e ^ hx::vertex_bit(v)) | hx::vertex_bit(v - 1);
                if (std::find(chosen.begin(), chosen.end(), pm) == chosen.end())
                    return false;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int j) -> void {
        if (j == m) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        std::uint64_t e = triples[static_cast<std::size_t>(j)];
        if (preds_included(e) && u_ok_with(e)) {
            chosen.push_back(e);
            self(self, j + 1);
            chosen.pop_back();
        }
        self(self, j + 1);
    };
    rec(rec, 0);
    return best;
}

hx::Family random_family(int n, int k, int max_edges, std::mt19937_64& rng) {
    std::vector<std::uint64_t> all;
    std::vector<int> stack;
    auto gen = [&](auto&& self, int next) -> void {
        if (static_cast<int>(stack.size()) == k) {
            all.push_back(hx::mask_of(stack));
            return;
        }
        for (int v = next; v <= n; ++v) {
            stack.push_back(v);
            self(self, v + 1);
            stack.pop_back();
        }
    };
    gen(gen, 1);
    std::shuffle(all.begin(), all.end(), rng);
    int cnt = std::uniform_int_distribution<int>(
        0, std::min<int>(max_edges, static_cast<int>(all.size())))(rng);
    all.resize(static_cast<std::size_t>(cnt));
    return hx::Family::of_masks(n, k, all);
}

} // namespace ref
