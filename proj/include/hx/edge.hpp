#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hx/errors.hpp"

namespace hx {

// Ground-set size limit of v1. Edges are 64-bit vertex masks, so set
// operations (union, intersection, subset tests) are single instructions.
inline constexpr int kMaxGroundSet = 64;

// Vertex labels are 1-based everywhere outside this class; bit i of the
// mask stands for vertex i+1.

constexpr std::uint64_t vertex_bit(int v) {
    return std::uint64_t{1} << (v - 1);
}

// An edge: a nonempty subset of [n], canonical by construction (the mask
// representation is unique, so equality is mask equality and ordering is
// colex order).
class Edge {
public:
    static Edge of_mask(std::uint64_t mask) {
        if (mask == 0)
            throw invalid_argument_error("edge must be a non-empty vertex set");
        return Edge(mask);
    }

    static Edge of(std::span<const int> vertices) {
        std::uint64_t m = 0;
        for (int v : vertices) {
            if (v < 1 || v > kMaxGroundSet)
                throw invalid_vertex_error("vertex label " + std::to_string(v) +
                                           " outside [1, 64]");
            if (m & vertex_bit(v))
                throw invalid_argument_error("repeated vertex label " + std::to_string(v));
            m |= vertex_bit(v);
        }
        return of_mask(m);
    }

    static Edge of(std::initializer_list<int> vertices) {
        return of(std::span<const int>(vertices.begin(), vertices.size()));
    }

    std::uint64_t mask() const noexcept { return mask_; }

    int arity() const noexcept { return std::popcount(mask_); }

    bool contains(int v) const noexcept {
        return v >= 1 && v <= kMaxGroundSet && (mask_ & vertex_bit(v)) != 0;
    }

    int max_label() const noexcept { return std::bit_width(mask_); }

    // Ascending 1-based labels.
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(arity()));
        std::uint64_t m = mask_;
        while (m) {
            out.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
        return out;
    }

    // Numeric mask order is exactly colex order on vertex sets.
    auto operator<=>(const Edge&) const = default;

private:
    explicit constexpr Edge(std::uint64_t mask) : mask_(mask) {}

    std::uint64_t mask_;
};

} // namespace hx
