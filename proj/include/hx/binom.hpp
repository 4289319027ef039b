#pragma once

#include <array>
#include <cstdint>

namespace hx {

// Pascal-triangle table up to n = 64. Every entry for n <= 64 fits in
// uint64_t (the largest, C(64,32), is about 1.8e18).
namespace detail {
inline constexpr int kBinomMax = 64;

constexpr auto make_binom_table() {
    std::array<std::array<std::uint64_t, kBinomMax + 1>, kBinomMax + 1> t{};
    for (int n = 0; n <= kBinomMax; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
}

inline constexpr auto kBinomTable = make_binom_table();
} // namespace detail

constexpr std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > detail::kBinomMax)
        return 0;
    return detail::kBinomTable[n][k];
}

} // namespace hx
