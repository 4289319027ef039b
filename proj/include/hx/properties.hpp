#pragma once

#include <optional>
#include <vector>

#include "hx/family.hpp"

namespace hx {

// s edges of a family whose union exceeds some q: a counterexample
// certificate to U(s, q). Always the maximal-union witness with the
// lexicographically least edge list (colex edge order), so output is
// reproducible byte-for-byte.
struct UnionWitness {
    std::vector<Edge> edges;
    int union_size = 0;
};

struct UCheckResult {
    bool ok = true;
    std::optional<UnionWitness> witness; // set iff !ok
};

// U(s, q): every s distinct edges have union of size <= q.
// Vacuously true when |f| < s.
UCheckResult check_U(const Family& f, int s, int q);

struct MaxUnion {
    int size = 0;
    std::vector<Edge> edges; // lexicographically least maximizer, colex order
};

// max |e1 u ... u es| over s distinct edges, by branch and bound: candidates
// ordered by marginal coverage against the current union, upper bound =
// current union + top remaining marginals. Requires 1 <= s <= |f|.
MaxUnion max_union(const Family& f, int s);

struct MatchingWitness {
    int nu = 0;
    std::vector<Edge> edges; // pairwise disjoint, lexicographically least maximum
};

// Exact matching number via branch and bound on the lowest coverable vertex.
MatchingWitness matching_number(const Family& f);

// First edge whose family misses a lower replacement: F is present but
// (F \ {j}) u {i} with i < j is not.
struct ShiftViolation {
    Edge present;
    Edge missing;

    ShiftViolation(Edge p, Edge m) : present(p), missing(m) {}
};

// Elementary-swap criterion for shiftedness (equivalent to down-closure
// under coordinatewise domination; the equivalence is covered by tests).
std::optional<ShiftViolation> shift_violation(const Family& f);
bool is_shifted(const Family& f);

// Repeated elementary compressions S_ij, (i, j) swept in lexicographic
// order until a full sweep is a no-op. Preserves |f|; the result is shifted.
Family stabilize(const Family& f);

// Largest i >= 0 with nu(g - [i]) = nu(g) - i. Requires a graph (k = 2).
struct StabilityStat {
    int r = 0;
};

StabilityStat r_stat(const Graph& g);

// Internal kernel shared with the search: does some s-subset of
// {forced} u chosen have union > q? chosen must not contain forced.
bool union_exceeds_with(std::uint64_t forced, const std::vector<std::uint64_t>& chosen,
                        int s, int q);

} // namespace hx
