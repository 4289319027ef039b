// Kernel timings: naive oracle vs branch-and-bound, serial vs OpenMP.
// Build and run: ./hx_bench [n_s pairs are fixed small instances]

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hx/constructions.hpp"
#include "hx/parallel.hpp"
#include "hx/properties.hpp"
#include "hx/search.hpp"
#include "reference.hpp"

namespace {

double time_secs(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double naive, double serial, double parallel) {
    std::printf("%-34s %10.4fs %10.4fs %10.4fs %8.2fx\n", name.c_str(), naive, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("%-34s %11s %11s %11s %9s\n", "kernel", "naive", "serial", "parallel",
                "par/ser");

    // max_union on the densest feasibility-grid instance
    {
        hx::Family f2 = hx::make_F2(14, 5).family; // 140 edges
        int value = 0;
        double t_naive = time_secs([&] { value = ref::max_union_naive(f2, 3).size; });
        hx::set_thread_limit(1);
        double t_serial = time_secs([&] { value = hx::max_union(f2, 5).size; });
        hx::set_thread_limit(0);
        double t_par = time_secs([&] { value = hx::max_union(f2, 5).size; });
        // naive at s=3 only: C(140,5) is out of reach for the oracle
        row("max_union F2(14,5) [naive: s=3]", t_naive, t_serial, t_par);
        std::printf("  max_union(F2(14,5), 5) = %d\n", value);
    }

    // matching number: subset-enumeration oracle vs branch and bound
    {
        std::mt19937_64 rng(7);
        std::vector<hx::Family> batch;
        for (int i = 0; i < 500; ++i)
            batch.push_back(ref::random_family(12, 3, 14, rng));
        double t_naive = time_secs([&] {
            for (const auto& f : batch)
                ref::matching_number_naive(f);
        });
        hx::set_thread_limit(1);
        double t_serial = time_secs([&] {
            for (const auto& f : batch)
                hx::matching_number(f);
        });
        row("matching_number x500 (n=12)", t_naive, t_serial, t_serial);
    }

    // extremal search, serial vs parallel; the down-set enumerator is the
    // naive baseline where it is feasible at all
    {
        double t_naive = time_secs([&] { ref::max_shifted_u_naive(7, 2, 5); });
        hx::set_thread_limit(1);
        double t_serial = time_secs([&] { hx::search_shifted_max(7, 2); });
        hx::set_thread_limit(0);
        double t_par = time_secs([&] { hx::search_shifted_max(7, 2); });
        row("search_shifted_max(7,2)", t_naive, t_serial, t_par);
    }
    for (auto [n, s] : {std::pair{10, 3}, std::pair{11, 3}, std::pair{12, 4},
                        std::pair{14, 4}}) {
        std::uint64_t opt = 0;
        hx::set_thread_limit(1);
        double t_serial =
            time_secs([&] { opt = hx::search_shifted_max(n, s).optimum; });
        hx::set_thread_limit(0);
        double t_par = time_secs([&] { opt = hx::search_shifted_max(n, s).optimum; });
        row("search_shifted_max(" + std::to_string(n) + "," + std::to_string(s) + ")", 0.0,
            t_serial, t_par);
        std::printf("  optimum = %llu\n", static_cast<unsigned long long>(opt));
    }
    return 0;
}
