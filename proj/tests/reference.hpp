#pragma once

// Naive reference implementations used as independent oracles by the tests
// and as baselines by the benchmark. Everything here is plain enumeration
// with no pruning; correctness over speed.

#include <random>
#include <vector>

#include "hx/family.hpp"

namespace ref {

struct NaiveMaxUnion {
    int size = 0;
    std::vector<int> indices; // lexicographically least maximizer
};

// All C(|f|, s) subsets.
NaiveMaxUnion max_union_naive(const hx::Family& f, int s);
bool check_u_naive(const hx::Family& f, int s, int q);

struct NaiveMatching {
    int nu = 0;
    std::vector<int> indices; // lexicographically least maximum matching
};

// All subsets of edges, pairwise-disjointness test. Guarded to |f| <= 22.
NaiveMatching matching_number_naive(const hx::Family& f);

// Plain vertex recursion for graphs (no pruning); exponential in n.
int graph_matching_naive(const hx::Graph& g);

// Double loop: every 2-subset of every edge.
hx::Graph shadow_naive(const hx::Family& f);

// a precedes b in the shift order: sorted labels dominate coordinatewise.
bool dominates(const hx::Edge& a, const hx::Edge& b);

// Literal down-closure definition of shiftedness.
bool is_shifted_naive(const hx::Family& f);

// Uniform random family: edge count uniform in [0, max_edges], edges drawn
// without replacement.
hx::Family random_family(int n, int k, int max_edges, std::mt19937_64& rng);

// Exhaustive maximum over shifted U(s,q) 3-families on [n]: plain
// recursion over the colex triple list, include allowed only when every
// elementary predecessor is included and the union condition survives.
// No bounds, no incumbent, no propagation; small n only.
int max_shifted_u_naive(int n, int s, int q);

} // namespace ref
