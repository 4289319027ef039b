// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is exact and pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hx/constructions.hpp"
#include "hx/lemmas.hpp"
#include "hx/parallel.hpp"
#include "hx/properties.hpp"
#include "hx/reports.hpp"
#include "hx/search.hpp"
#include "reference.hpp"

namespace {

struct Criterion {
    std::string name;
    double time_limit_secs;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& what, std::string& msg) {
    if (!cond && msg.empty())
        msg = what;
    return cond;
}

// 1. Formula/enumeration agreement over the full grid.
bool criterion1(std::string& msg) {
    bool ok = true;
    for (int s = 2; s <= 5; ++s)
        for (int n = 2 * s + 2; n <= 14; ++n) {
            hx::SizeFormulas fx = hx::size_formulas(n, s);
            ok &= expect(hx::make_F1(n, s).family.size() == fx.f1,
                         "F1 size mismatch at n=" + std::to_string(n) +
                             " s=" + std::to_string(s), msg);
            ok &= expect(hx::make_F2(n, s).family.size() == fx.f2,
                         "F2 size mismatch at n=" + std::to_string(n) +
                             " s=" + std::to_string(s), msg);
            ok &= expect(hx::make_F3(n, s).family.size() == fx.f3,
                         "F3 size mismatch at n=" + std::to_string(n) +
                             " s=" + std::to_string(s), msg);
        }
    hx::SizeFormulas probe = hx::size_formulas(10, 3);
    ok &= expect(probe == hx::SizeFormulas{36, 40, 35} && probe.max() == 40,
                 "frozen probe (10,3) -> 36/40/35 bound 40", msg);
    return ok;
}

// 2. Construction feasibility: every F_i is U(s, 2s+1) across the grid.
bool criterion2(std::string& msg) {
    bool ok = true;
    for (int s = 2; s <= 5; ++s)
        for (int n = 2 * s + 2; n <= 14; ++n) {
            int q = 2 * s + 1;
            ok &= expect(hx::check_U(hx::make_F1(n, s).family, s, q).ok,
                         "F1 violates U at n=" + std::to_string(n) + " s=" +
                             std::to_string(s), msg);
            ok &= expect(hx::check_U(hx::make_F2(n, s).family, s, q).ok,
                         "F2 violates U at n=" + std::to_string(n) + " s=" +
                             std::to_string(s), msg);
            ok &= expect(hx::check_U(hx::make_F3(n, s).family, s, q).ok,
                         "F3 violates U at n=" + std::to_string(n) + " s=" +
                             std::to_string(s), msg);
        }
    return ok;
}

// 3. Theorem at desk scale: five exact searches, expected optima frozen.
bool criterion3(std::string& msg) {
    struct Case {
        int n, s;
        std::uint64_t optimum;
        double limit_secs;
    };
    const Case cases[] = {
        {7, 2, 15, 60.0}, {8, 2, 21, 60.0}, {9, 2, 28, 60.0}, {10, 2, 36, 60.0},
        {9, 3, 35, 600.0},
    };
    bool ok = true;
    for (const Case& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        hx::SearchCertificate cert = hx::search_shifted_max(c.n, c.s);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.s) + ")";
        ok &= expect(cert.complete, tag + " incomplete", msg);
        ok &= expect(cert.optimum == c.optimum,
                     tag + " optimum " + std::to_string(cert.optimum) + " != " +
                         std::to_string(c.optimum), msg);
        ok &= expect(cert.theorem_holds.has_value() && *cert.theorem_holds,
                     tag + " theorem verdict not true", msg);
        ok &= expect(secs < c.limit_secs, tag + " exceeded runtime target", msg);
        try {
            hx::revalidate_certificate(cert);
        } catch (const hx::error& e) {
            ok &= expect(false, tag + " revalidation: " + e.what(), msg);
        }
    }
    // stretch goal, non-gating unless a completed run contradicts the bound
    hx::SearchCertificate stretch = hx::search_shifted_max(10, 3);
    if (stretch.complete)
        ok &= expect(stretch.optimum == 40 && stretch.theorem_holds == true,
                     "(10,3) stretch completed with a wrong verdict", msg);
    std::printf("  stretch (10,3): %s, optimum %llu\n",
                stretch.complete ? "complete" : "incomplete under default budget",
                static_cast<unsigned long long>(stretch.optimum));
    return ok;
}

// 4. Shifted restriction validity at the (6,2) boundary.
bool criterion4(std::string& msg) {
    hx::SearchCertificate shifted = hx::search_shifted_max(6, 2);
    hx::SearchCertificate full = hx::search_unrestricted_max(6, 2);
    bool ok = expect(shifted.complete && full.complete, "searches incomplete", msg);
    ok &= expect(full.optimum == shifted.optimum,
                 "unrestricted " + std::to_string(full.optimum) + " != shifted " +
                     std::to_string(shifted.optimum), msg);
    ok &= expect(shifted.optimum == 10 && shifted.theorem_holds == true,
                 "boundary (6,2) bound 10 not met exactly", msg);
    return ok;
}

// 5. Lemma suite, 10^3 seeded instances each; leq4 by full exhaustion.
bool criterion5(std::string& msg) {
    bool ok = true;
    for (hx::LemmaId id : hx::all_lemmas()) {
        hx::LemmaReport r = hx::run_lemma(id, 1000, 2026);
        ok &= expect(r.passed(), to_string(id) + ": " + std::to_string(r.failures.size()) +
                                     " failures", msg);
    }
    hx::Leq4Result l4 = hx::verify_leq4();
    ok &= expect(l4.pools_match && l4.pool_size == 8 && l4.max_size == 4,
                 "leq4 exhaustion: pool " + std::to_string(l4.pool_size) + ", max " +
                     std::to_string(l4.max_size), msg);
    return ok;
}

// 6. Oracle equivalence on 10^3 random instances per kernel.
bool criterion6(std::string& msg) {
    bool ok = true;
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = std::uniform_int_distribution<int>(4, 10)(rng);
        hx::Family f = ref::random_family(n, 3, 18, rng);
        int s = std::uniform_int_distribution<int>(1, 4)(rng);
        if (f.size() >= static_cast<std::size_t>(s)) {
            auto naive = ref::max_union_naive(f, s);
            auto mine = hx::max_union(f, s);
            ok &= expect(mine.size == naive.size, "max_union value mismatch", msg);
            int q = std::uniform_int_distribution<int>(3, 10)(rng);
            ok &= expect(hx::check_U(f, s, q).ok == ref::check_u_naive(f, s, q),
                         "check_U verdict mismatch", msg);
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 12)(rng);
        int k = std::uniform_int_distribution<int>(2, 3)(rng);
        hx::Family f = ref::random_family(n, k, 14, rng);
        ok &= expect(hx::matching_number(f).nu == ref::matching_number_naive(f).nu,
                     "matching_number mismatch", msg);
    }
    return ok;
}

// 7. Determinism: identical seeded runs give byte-identical normalized
// reports at 1 thread and at 8 threads.
bool criterion7(std::string& msg) {
    hx::RunConfig cfg;
    cfg.normalized = true;
    cfg.trials = 50;
    cfg.seed = 7;

    auto all_reports = [&]() {
        std::vector<std::string> out;
        hx::Family f2 = hx::make_F2(10, 3).family;
        out.push_back(
            hx::dump_report(hx::check_u_report(f2, 3, 7, hx::check_U(f2, 3, 7), 0, cfg), cfg));
        out.push_back(hx::dump_report(
            hx::nu_report(f2, hx::matching_number(f2), 0, cfg), cfg));
        out.push_back(hx::dump_report(
            hx::lemmas_report(hx::run_all_lemmas(cfg.trials, cfg.seed), cfg), cfg));
        out.push_back(hx::dump_report(
            hx::certificate_json(hx::search_shifted_max(7, 2), cfg), cfg));
        out.push_back(hx::dump_report(
            hx::certificate_json(hx::search_unrestricted_max(6, 2), cfg), cfg));
        return out;
    };

    hx::set_thread_limit(1);
    auto serial = all_reports();
    auto serial_again = all_reports();
    hx::set_thread_limit(8);
    auto parallel = all_reports();
    hx::set_thread_limit(0);

    bool ok = expect(serial == serial_again, "repeat run at 1 thread differs", msg);
    ok &= expect(serial == parallel, "8-thread run differs from 1-thread run", msg);
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 formula/enumeration agreement (2<=s<=5, 2s+2<=n<=14)", 1.0, criterion1},
        {"2 construction feasibility U(s,2s+1) across the grid", 30.0, criterion2},
        {"3 theorem at desk scale: (7,2),(8,2),(9,2),(10,2),(9,3)", 840.0, criterion3},
        {"4 shifted restriction validity at (6,2)", 300.0, criterion4},
        {"5 lemma suite, 10^3 instances each + leq4 exhaustion", 120.0, criterion5},
        {"6 oracle equivalence, 10^3 random instances", 120.0, criterion6},
        {"7 determinism of normalized reports across thread counts", 600.0, criterion7},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string msg;
        bool pass = false;
        try {
            pass = c.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.time_limit_secs) {
            pass = false;
            if (msg.empty())
                msg = "exceeded overall time limit";
        }
        std::printf("%s criterion %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", c.name.c_str(),
                    secs, msg.empty() ? "" : ": ", msg.c_str());
        std::fflush(stdout);
        if (!pass)
            ++failures;
    }
    return failures;
}
