#pragma once

#include <cstdint>
#include <string>

#include "hx/family.hpp"

namespace hx {

// A(p, r, n, k) = { A in C([n], k) : |A n [p]| >= r }.
// Requires p >= r >= 1, n >= p, k >= r.
Family make_A(int p, int r, int n, int k);

// The three candidate extremal 3-graphs:
//   F1 = A(1, 1, n, 3)        edges through vertex 1
//   F2 = A(s+1, 2, n, 3)      edges meeting [s+1] twice
//   F3 = A(2s+1, 3, n, 3)     edges inside [2s+1]
// Parameters below the n >= 2s+2 threshold still build (the search wants
// them for boundary experiments); the flag records the soft violation.
struct Construction {
    Family family;
    bool below_threshold = false;
};

Construction make_F1(int n, int s);
Construction make_F2(int n, int s);
Construction make_F3(int n, int s);

// A named construction request, as it arrives from the CLI or a config
// file; build() validates the parameters relevant to its kind and
// dispatches to the make_* functions.
struct ConstructionSpec {
    enum class Kind { A_pr, F1, F2, F3, A_graph };

    Kind kind = Kind::F1;
    int n = 0;
    int s = -1; // F1/F2/F3
    int p = -1, r = -1, k = 3; // A_pr
    int i = -1, m = -1; // A_graph

    static Kind kind_from_string(const std::string& name);
    Construction build() const;
};

// Closed forms C(n-1,2), C(s+1,2)(n-s-1)+C(s+1,3), C(2s+1,3).
// Valid for s >= 2, n >= 2s+1; cross-checked against the constructions.
struct SizeFormulas {
    std::uint64_t f1 = 0;
    std::uint64_t f2 = 0;
    std::uint64_t f3 = 0;

    std::uint64_t max() const { return f1 > f2 ? (f1 > f3 ? f1 : f3) : (f2 > f3 ? f2 : f3); }
    bool operator==(const SizeFormulas&) const = default;
};

SizeFormulas size_formulas(int n, int s);
std::uint64_t conjecture_bound(int n, int s);

// The container graph for stable graphs with matching number m:
// a clique on [i] joined to everything, a clique on [2m-i+1] \ [i], and the
// rest isolated. Requires 0 <= i <= m <= (n-2)/2.
Graph make_A_graph(int i, int n, int m);

// Every edge of g is an edge of h; ground sets and arities must match.
bool is_subgraph(const Graph& g, const Graph& h);

} // namespace hx
