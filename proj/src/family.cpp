#include "hx/family.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hx {

namespace {
void check_ground_set(int n) {
    if (n < 1 || n > kMaxGroundSet)
        throw invalid_parameters_error("ground set size n = " + std::to_string(n) +
                                       " outside [1, 64]");
}

void check_arity(int k, int n) {
    if (k < 1 || k > n)
        throw invalid_arity_error("arity k = " + std::to_string(k) +
                                  " outside [1, n = " + std::to_string(n) + "]");
}
} // namespace

Family::Family(int n, int k) : n_(n), k_(k) {
    check_ground_set(n);
    check_arity(k, n);
}

Family Family::of_masks(int n, int k, std::vector<std::uint64_t> masks) {
    Family f(n, k);
    const std::uint64_t universe = prefix_mask(n);
    for (std::uint64_t m : masks) {
        if (std::popcount(m) != k)
            throw invalid_arity_error("edge arity differs from family arity k = " +
                                      std::to_string(k));
        if ((m & ~universe) != 0)
            throw invalid_vertex_error("edge vertex outside ground set [1, " +
                                       std::to_string(n) + "]");
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    f.masks_ = std::move(masks);
    return f;
}

Family Family::of(int n, int k, std::span<const Edge> edges) {
    std::vector<std::uint64_t> masks;
    masks.reserve(edges.size());
    for (const Edge& e : edges)
        masks.push_back(e.mask());
    return of_masks(n, k, std::move(masks));
}

bool Family::contains_mask(std::uint64_t m) const noexcept {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

std::vector<Edge> Family::edges() const {
    std::vector<Edge> out;
    out.reserve(masks_.size());
    for (std::uint64_t m : masks_)
        out.push_back(Edge::of_mask(m));
    return out;
}

Graph shadow(const Family& f) {
    if (f.arity() != 3)
        throw invalid_arity_error("shadow requires a 3-uniform family, got k = " +
                                  std::to_string(f.arity()));
    std::vector<std::uint64_t> pairs;
    pairs.reserve(3 * f.size());
    for (std::uint64_t m : f.masks()) {
        std::uint64_t rest = m;
        while (rest) {
            std::uint64_t low = rest & (~rest + 1);
            pairs.push_back(m ^ low);
            rest ^= low;
        }
    }
    return Family::of_masks(f.ground_set(), 2, std::move(pairs));
}

Family link(const Family& f, int v) {
    if (v < 1 || v > f.ground_set())
        throw invalid_vertex_error("link vertex " + std::to_string(v) +
                                   " outside ground set [1, " +
                                   std::to_string(f.ground_set()) + "]");
    if (f.arity() < 2)
        throw invalid_arity_error("link requires k >= 2");
    const std::uint64_t vbit = vertex_bit(v);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : f.masks())
        if (m & vbit)
            out.push_back(m ^ vbit);
    return Family::of_masks(f.ground_set(), f.arity() - 1, std::move(out));
}

Family delete_vertices(const Family& f, std::uint64_t t_mask) {
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks())
        if ((m & t_mask) == 0)
            out.push_back(m);
    return Family::of_masks(f.ground_set(), f.arity(), std::move(out));
}

Family delete_vertices(const Family& f, std::span<const int> t) {
    std::uint64_t mask = mask_of(t);
    if ((mask & ~prefix_mask(f.ground_set())) != 0)
        throw invalid_vertex_error("deleted vertex outside ground set");
    return delete_vertices(f, mask);
}

Family delete_prefix(const Family& f, int i) {
    if (i < 0 || i > f.ground_set())
        throw invalid_vertex_error("prefix length " + std::to_string(i) +
                                   " outside [0, n]");
    return delete_vertices(f, prefix_mask(i));
}

Family restrict_to(const Family& f, std::uint64_t x_mask) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : f.masks())
        if ((m & ~x_mask) == 0)
            out.push_back(m);
    return Family::of_masks(f.ground_set(), f.arity(), std::move(out));
}

Family restrict_to(const Family& f, std::span<const int> x) {
    return restrict_to(f, mask_of(x));
}

int union_size(std::span<const Edge> edges) {
    if (edges.empty())
        throw invalid_argument_error("union_size of an empty edge list");
    std::uint64_t u = 0;
    for (const Edge& e : edges)
        u |= e.mask();
    return std::popcount(u);
}

std::uint64_t mask_of(std::span<const int> vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxGroundSet)
            throw invalid_vertex_error("vertex label " + std::to_string(v) +
                                       " outside [1, 64]");
        m |= vertex_bit(v);
    }
    return m;
}

std::uint64_t prefix_mask(int i) {
    if (i <= 0)
        return 0;
    if (i >= 64)
        return ~std::uint64_t{0};
    return (std::uint64_t{1} << i) - 1;
}

} // namespace hx
