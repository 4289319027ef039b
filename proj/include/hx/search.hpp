#pragma once

#include <cstdint>
#include <optional>

#include "hx/constructions.hpp"
#include "hx/family.hpp"

namespace hx {

struct SearchBudget {
    std::uint64_t max_nodes = 2'000'000'000ULL;
    double max_seconds = 300.0;
};

// Record of one extremal search: max{|F| : F subset of C([n],3), F is
// U(s, 2s+1)}, over shifted families or over all families. On budget
// exhaustion `complete` is false and theorem_holds stays unset unless the
// bound was already beaten (which would decide the theorem regardless).
struct SearchCertificate {
    int n = 0;
    int s = 0;
    int q = 0;
    std::uint64_t optimum = 0;
    Family witness{3, 3};
    SizeFormulas bound_breakdown;
    std::optional<bool> theorem_holds;
    bool restricted_to_shifted = true;
    bool complete = true;
    std::uint64_t nodes_explored = 0;
    std::int64_t elapsed_ms = 0;
};

// Exact optimum over shifted U(s, 2s+1) families, by depth-first
// include/exclude over the triples of [n] in colex order (a linear extension
// of the shift order, so the down-set constraint is locally checkable).
// The three constructions are verified feasible and seed the incumbent.
SearchCertificate search_shifted_max(int n, int s, const SearchBudget& budget = {});

// Oracle over ALL families, validating the shifted restriction end to end.
// Refused unless C(n,3) <= 20 and s = 2.
SearchCertificate search_unrestricted_max(int n, int s, const SearchBudget& budget = {});

// search_shifted_max plus the bound comparison.
SearchCertificate verify_theorem(int n, int s, const SearchBudget& budget = {});

// Independent re-check of a certificate (used on load; does not trust the
// search): witness size/U/shiftedness, breakdown, verdict consistency.
// Throws hx::error on any inconsistency.
void revalidate_certificate(const SearchCertificate& cert);

} // namespace hx
