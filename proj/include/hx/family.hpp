#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hx/edge.hpp"

namespace hx {

// A k-uniform family over the ground set [n]. Immutable after
// construction; edge masks are kept sorted ascending, which is colex order,
// so iteration and every serialized output are deterministic.
class Family {
public:
    Family(int n, int k);

    // Canonicalizes: validates arity and range, sorts, drops duplicates.
    static Family of(int n, int k, std::span<const Edge> edges);
    static Family of_masks(int n, int k, std::vector<std::uint64_t> masks);

    int ground_set() const noexcept { return n_; }
    int arity() const noexcept { return k_; }
    std::size_t size() const noexcept { return masks_.size(); }
    bool empty() const noexcept { return masks_.empty(); }

    bool contains(const Edge& e) const noexcept { return contains_mask(e.mask()); }
    bool contains_mask(std::uint64_t m) const noexcept;

    // Ascending colex order.
    const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
    std::vector<Edge> edges() const;

    bool operator==(const Family&) const = default;

private:
    int n_;
    int k_;
    std::vector<std::uint64_t> masks_;
};

// A graph is a family with k = 2; operations that require one validate this.
using Graph = Family;

// All (k-1)-subsets contained in some edge. Requires k = 3 (the result is a
// graph on the same ground set).
Graph shadow(const Family& f);

// The link of v: { e : e + v in f, v not in e }, a (k-1)-uniform family on
// the same ground set.
Family link(const Family& f, int v);

// { e in f : e disjoint from t }. Ground set unchanged; deleted vertices
// simply become isolated, so matching numbers before/after deletion compare
// on the same labels.
Family delete_vertices(const Family& f, std::uint64_t t_mask);
Family delete_vertices(const Family& f, std::span<const int> t);

// Deletes {1, ..., i}; i = 0 is the identity.
Family delete_prefix(const Family& f, int i);

// { e in f : e subset of x } (induced subfamily).
Family restrict_to(const Family& f, std::uint64_t x_mask);
Family restrict_to(const Family& f, std::span<const int> x);

// |e1 u ... u es|; the list must be nonempty.
int union_size(std::span<const Edge> edges);

// Mask of a 1-based vertex list (validated against [1, 64]).
std::uint64_t mask_of(std::span<const int> vertices);

// Mask of {1, ..., i} (i = 0 gives the empty set).
std::uint64_t prefix_mask(int i);

} // namespace hx
