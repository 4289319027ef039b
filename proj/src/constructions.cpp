#include "hx/constructions.hpp"

#include <bit>
#include <string>

#include "hx/binom.hpp"

namespace hx {

namespace {
// All k-subsets of [n] as masks, ascending (= colex order). Positions are
// 0-based bit indices a[0] < a[1] < ... < a[k-1].
void enumerate_subsets(int n, int k, std::vector<std::uint64_t>& out) {
    std::vector<int> a(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        a[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int p : a)
            m |= std::uint64_t{1} << p;
        out.push_back(m);
        int i = 0;
        while (i < k) {
            int cap = (i + 1 < k) ? a[static_cast<std::size_t>(i + 1)] : n;
            if (a[static_cast<std::size_t>(i)] + 1 < cap)
                break;
            ++i;
        }
        if (i == k)
            return;
        ++a[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            a[static_cast<std::size_t>(j)] = j;
    }
}
} // namespace

Family make_A(int p, int r, int n, int k) {
    if (r < 1)
        throw invalid_parameters_error("make_A requires r >= 1, got r = " + std::to_string(r));
    if (p < r)
        throw invalid_parameters_error("make_A requires p >= r, got p = " + std::to_string(p) +
                                       ", r = " + std::to_string(r));
    if (n < p)
        throw invalid_parameters_error("make_A requires n >= p, got n = " + std::to_string(n) +
                                       ", p = " + std::to_string(p));
    if (k < r)
        throw invalid_parameters_error("make_A requires k >= r, got k = " + std::to_string(k) +
                                       ", r = " + std::to_string(r));
    if (n > kMaxGroundSet)
        throw invalid_parameters_error("make_A requires n <= 64");
    if (k > n)
        throw invalid_parameters_error("make_A requires k <= n");

    std::vector<std::uint64_t> all;
    all.reserve(static_cast<std::size_t>(binom(n, k)));
    enumerate_subsets(n, k, all);

    const std::uint64_t pmask = prefix_mask(p);
    std::vector<std::uint64_t> kept;
    for (std::uint64_t m : all)
        if (std::popcount(m & pmask) >= r)
            kept.push_back(m);
    return Family::of_masks(n, k, std::move(kept));
}

namespace {
void check_fi_params(int n, int s) {
    if (s < 2)
        throw invalid_parameters_error("constructions require s >= 2, got s = " +
                                       std::to_string(s));
    if (n < 2 * s + 1)
        throw invalid_parameters_error("constructions require n >= 2s+1, got n = " +
                                       std::to_string(n) + ", s = " + std::to_string(s));
}
} // namespace

Construction make_F1(int n, int s) {
    check_fi_params(n, s);
    return {make_A(1, 1, n, 3), n < 2 * s + 2};
}

Construction make_F2(int n, int s) {
    check_fi_params(n, s);
    return {make_A(s + 1, 2, n, 3), n < 2 * s + 2};
}

Construction make_F3(int n, int s) {
    check_fi_params(n, s);
    return {make_A(2 * s + 1, 3, n, 3), n < 2 * s + 2};
}

SizeFormulas size_formulas(int n, int s) {
    check_fi_params(n, s);
    SizeFormulas out;
    out.f1 = binom(n - 1, 2);
    out.f2 = binom(s + 1, 2) * static_cast<std::uint64_t>(n - s - 1) + binom(s + 1, 3);
    out.f3 = binom(2 * s + 1, 3);
    return out;
}

std::uint64_t conjecture_bound(int n, int s) {
    return size_formulas(n, s).max();
}

ConstructionSpec::Kind ConstructionSpec::kind_from_string(const std::string& name) {
    if (name == "Apr")
        return Kind::A_pr;
    if (name == "F1")
        return Kind::F1;
    if (name == "F2")
        return Kind::F2;
    if (name == "F3")
        return Kind::F3;
    if (name == "Agraph")
        return Kind::A_graph;
    throw invalid_parameters_error("unknown construction kind: " + name +
                                   " (expected F1|F2|F3|Apr|Agraph)");
}

Construction ConstructionSpec::build() const {
    switch (kind) {
    case Kind::F1:
    case Kind::F2:
    case Kind::F3:
        if (s < 0)
            throw invalid_parameters_error("F1/F2/F3 require the parameter s");
        return kind == Kind::F1 ? make_F1(n, s) : kind == Kind::F2 ? make_F2(n, s)
                                                                   : make_F3(n, s);
    case Kind::A_pr:
        if (p < 0 || r < 0)
            throw invalid_parameters_error("Apr requires the parameters p and r");
        return {make_A(p, r, n, k), false};
    case Kind::A_graph:
        if (i < 0 || m < 0)
            throw invalid_parameters_error("Agraph requires the parameters i and m");
        return {make_A_graph(i, n, m), false};
    }
    throw invalid_parameters_error("unknown construction kind");
}

Graph make_A_graph(int i, int n, int m) {
    if (i < 0)
        throw invalid_parameters_error("make_A_graph requires i >= 0, got i = " +
                                       std::to_string(i));
    if (m < i)
        throw invalid_parameters_error("make_A_graph requires i <= m, got i = " +
                                       std::to_string(i) + ", m = " + std::to_string(m));
    if (2 * m > n - 2)
        throw invalid_parameters_error("make_A_graph requires m <= (n-2)/2, got m = " +
                                       std::to_string(m) + ", n = " + std::to_string(n));
    if (n > kMaxGroundSet)
        throw invalid_parameters_error("make_A_graph requires n <= 64");

    const std::uint64_t spine = prefix_mask(i);                       // [i]
    const std::uint64_t clique = prefix_mask(2 * m - i + 1) & ~spine; // [2m-i+1] \ [i]
    std::vector<std::uint64_t> edges;
    for (int a = 1; a < n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            std::uint64_t e = vertex_bit(a) | vertex_bit(b);
            bool meets_spine = (e & spine) != 0;
            bool inside_clique = (e & ~clique) == 0;
            if (meets_spine || inside_clique)
                edges.push_back(e);
        }
    }
    return Family::of_masks(n, 2, std::move(edges));
}

bool is_subgraph(const Graph& g, const Graph& h) {
    if (g.ground_set() != h.ground_set())
        throw ground_set_error("is_subgraph: ground sets differ (" +
                               std::to_string(g.ground_set()) + " vs " +
                               std::to_string(h.ground_set()) + ")");
    if (g.arity() != h.arity())
        throw invalid_arity_error("is_subgraph: arities differ");
    for (std::uint64_t m : g.masks())
        if (!h.contains_mask(m))
            return false;
    return true;
}

} // namespace hx
