#include "hx/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "hx/binom.hpp"
#include "hx/constructions.hpp"
#include "hx/io.hpp"
#include "hx/parallel.hpp"
#include "hx/properties.hpp"
#include "hx/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hx {

std::string to_string(LemmaId id) {
    switch (id) {
    case LemmaId::S_subgraph: return "S_subgraph";
    case LemmaId::S_matching: return "S_matching";
    case LemmaId::stable_preservation: return "stable_preservation";
    case LemmaId::shadow_stable: return "shadow_stable";
    case LemmaId::leq4: return "leq4";
    }
    throw invalid_argument_error("unknown lemma id");
}

LemmaId lemma_from_string(const std::string& name) {
    for (LemmaId id : all_lemmas())
        if (to_string(id) == name)
            return id;
    throw invalid_argument_error("unknown lemma id: " + name);
}

std::vector<LemmaId> all_lemmas() {
    return {LemmaId::S_subgraph, LemmaId::S_matching, LemmaId::stable_preservation,
            LemmaId::shadow_stable, LemmaId::leq4};
}

Graph gen_stable_graph(int n, int target_nu, std::uint64_t seed) {
    if (target_nu < 1 || 2 * target_nu > n - 2)
        throw invalid_parameters_error("gen_stable_graph requires 1 <= target_nu <= (n-2)/2");

    auto rng = make_rng(seed);
    std::vector<std::uint64_t> all_pairs;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            all_pairs.push_back(vertex_bit(a) | vertex_bit(b));

    const int max_edges = static_cast<int>(all_pairs.size());
    const int hi = std::min(max_edges, target_nu * (2 * target_nu + 1) + 2);
    int m0 = std::uniform_int_distribution<int>(target_nu, hi)(rng);

    std::vector<std::uint64_t> current = all_pairs;
    std::shuffle(current.begin(), current.end(), rng);
    current.resize(static_cast<std::size_t>(m0));

    for (int iter = 0; iter < 10000; ++iter) {
        Graph g = stabilize(Family::of_masks(n, 2, current));
        int nu = matching_number(g).nu;
        if (nu == target_nu)
            return g;
        current = g.masks();
        if (nu < target_nu) {
            // add a random absent pair; the complete graph has nu > target
            std::vector<std::uint64_t> absent;
            for (std::uint64_t p : all_pairs)
                if (!std::binary_search(current.begin(), current.end(), p))
                    absent.push_back(p);
            current.push_back(
                absent[std::uniform_int_distribution<std::size_t>(0, absent.size() - 1)(rng)]);
        } else {
            std::size_t victim =
                std::uniform_int_distribution<std::size_t>(0, current.size() - 1)(rng);
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(victim));
        }
    }
    throw generator_exhausted_error("gen_stable_graph: no stable graph with nu = " +
                                    std::to_string(target_nu) + " on [" + std::to_string(n) +
                                    "] after 10000 attempts");
}

std::optional<nlohmann::json> verify_S_subgraph(const Graph& g) {
    if (g.arity() != 2)
        throw invalid_arity_error("verify_S_subgraph requires a graph");
    if (!is_shifted(g))
        throw invalid_parameters_error("verify_S_subgraph requires a stable graph");
    const int n = g.ground_set();
    const int m = matching_number(g).nu;
    if (2 * m > n - 2)
        throw invalid_parameters_error("verify_S_subgraph requires nu(g) <= (n-2)/2");
    const int r = r_stat(g).r;
    Graph container = make_A_graph(r, n, m);
    if (is_subgraph(g, container))
        return std::nullopt;
    return nlohmann::json{{"lemma_id", "S_subgraph"},
                          {"instance", to_json(g)},
                          {"nu", m},
                          {"r", r},
                          {"reason", "stable graph not contained in A^r_{n,m}"}};
}

std::optional<nlohmann::json> verify_S_matching(const Graph& g) {
    if (g.arity() != 2)
        throw invalid_arity_error("verify_S_matching requires a graph");
    if (!is_shifted(g))
        throw invalid_parameters_error("verify_S_matching requires a stable graph");
    const int s = matching_number(g).nu;
    for (int i = 1; i <= s; ++i) {
        std::uint64_t pair = vertex_bit(i) | vertex_bit(2 * s - i + 1);
        if (!g.contains_mask(pair))
            return nlohmann::json{{"lemma_id", "S_matching"},
                                  {"instance", to_json(g)},
                                  {"nu", s},
                                  {"missing_pair", Edge::of_mask(pair).vertices()},
                                  {"reason", "expected matching pair absent"}};
    }
    return std::nullopt;
}

std::optional<nlohmann::json> verify_stable_preservation(const Family& f, int s, int q) {
    Family st = stabilize(f);
    auto fail = [&](const std::string& reason) {
        return nlohmann::json{{"lemma_id", "stable_preservation"},
                              {"instance", to_json(f)},
                              {"s", s},
                              {"q", q},
                              {"reason", reason}};
    };
    if (st.size() != f.size())
        return fail("stabilization changed the family size");
    if (!is_shifted(st))
        return fail("stabilization fixpoint is not shifted");
    if (check_U(f, s, q).ok && !check_U(st, s, q).ok)
        return fail("stabilization broke U(s,q)");
    return std::nullopt;
}

std::optional<nlohmann::json> verify_shadow_stable(const Family& f) {
    if (f.arity() != 3)
        throw invalid_arity_error("verify_shadow_stable requires a 3-uniform family");
    if (!is_shifted(f))
        throw invalid_parameters_error("verify_shadow_stable requires a stable family");
    if (is_shifted(shadow(f)))
        return std::nullopt;
    return nlohmann::json{{"lemma_id", "shadow_stable"},
                          {"instance", to_json(f)},
                          {"reason", "shadow of a stable family is not stable"}};
}

Leq4Result verify_leq4() {
    const int n = 6;
    // Pool, built two ways: transversal product and filter over C([6],3).
    std::vector<std::uint64_t> direct;
    for (int a : {1, 6})
        for (int b : {2, 5})
            for (int c : {3, 4})
                direct.push_back(vertex_bit(a) | vertex_bit(b) | vertex_bit(c));
    std::sort(direct.begin(), direct.end());

    std::vector<std::uint64_t> filtered;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                std::uint64_t e = vertex_bit(a) | vertex_bit(b) | vertex_bit(c);
                if ((e & (vertex_bit(1) | vertex_bit(6))) &&
                    (e & (vertex_bit(2) | vertex_bit(5))) &&
                    (e & (vertex_bit(3) | vertex_bit(4))))
                    filtered.push_back(e);
            }
    std::sort(filtered.begin(), filtered.end());

    Leq4Result out;
    out.pools_match = (direct == filtered);
    out.pool_size = static_cast<int>(filtered.size());

    const std::size_t pool = filtered.size();
    int max_size = 0;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << pool); ++sub) {
        std::vector<std::uint64_t> masks;
        for (std::size_t i = 0; i < pool; ++i)
            if (sub & (std::uint64_t{1} << i))
                masks.push_back(filtered[i]);
        if (masks.empty())
            continue;
        Family fam = Family::of_masks(n, 3, masks);
        if (matching_number(fam).nu == 1)
            max_size = std::max(max_size, static_cast<int>(fam.size()));
    }
    out.max_size = max_size;

    // Lexicographically least maximum achiever: combinations of pool indices
    // in lex order, first with matching number 1.
    std::vector<int> pick;
    auto lex_first = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == max_size) {
            std::vector<std::uint64_t> masks;
            for (int i : pick)
                masks.push_back(filtered[static_cast<std::size_t>(i)]);
            return matching_number(Family::of_masks(n, 3, masks)).nu == 1;
        }
        for (std::size_t i = from; i < pool; ++i) {
            pick.push_back(static_cast<int>(i));
            if (self(self, i + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    if (max_size > 0 && lex_first(lex_first, 0)) {
        std::vector<std::uint64_t> masks;
        for (int i : pick)
            masks.push_back(filtered[static_cast<std::size_t>(i)]);
        out.achiever = Family::of_masks(n, 3, masks);
    } else {
        out.achiever = Family(n, 3);
    }
    return out;
}

namespace {

std::optional<nlohmann::json> run_trial(LemmaId id, std::uint64_t master_seed,
                                        std::uint64_t trial) {
    auto rng = make_rng(trial_seed(master_seed, trial));
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    auto random_triple_family = [&](int n, int max_edges) {
        std::vector<std::uint64_t> triples;
        for (int a = 1; a <= n - 2; ++a)
            for (int b = a + 1; b <= n - 1; ++b)
                for (int c = b + 1; c <= n; ++c)
                    triples.push_back(vertex_bit(a) | vertex_bit(b) | vertex_bit(c));
        std::shuffle(triples.begin(), triples.end(), rng);
        int cnt = uniform(0, std::min<int>(max_edges, static_cast<int>(triples.size())));
        triples.resize(static_cast<std::size_t>(cnt));
        return Family::of_masks(n, 3, triples);
    };

    switch (id) {
    case LemmaId::S_subgraph:
    case LemmaId::S_matching: {
        int n = uniform(4, 12);
        int target = uniform(1, (n - 2) / 2);
        Graph g = gen_stable_graph(n, target, rng());
        auto fail = (id == LemmaId::S_subgraph) ? verify_S_subgraph(g) : verify_S_matching(g);
        if (fail) {
            (*fail)["params"] = {{"n", n}, {"target_nu", target}};
            return fail;
        }
        return std::nullopt;
    }
    case LemmaId::stable_preservation: {
        int n = uniform(4, 12);
        Family f = random_triple_family(n, 20);
        bool pair = uniform(0, 1) == 0;
        int s = pair ? 2 : 3;
        int q = 2 * s + 1;
        return verify_stable_preservation(f, s, q);
    }
    case LemmaId::shadow_stable: {
        int n = uniform(4, 12);
        Family f = stabilize(random_triple_family(n, 20));
        return verify_shadow_stable(f);
    }
    case LemmaId::leq4: {
        Leq4Result r = verify_leq4();
        if (r.pools_match && r.pool_size == 8 && r.max_size == 4)
            return std::nullopt;
        return nlohmann::json{{"lemma_id", "leq4"},
                              {"pool_size", r.pool_size},
                              {"pools_match", r.pools_match},
                              {"max_size", r.max_size},
                              {"reason", "exhaustion did not confirm max = 4"}};
    }
    }
    throw invalid_argument_error("unknown lemma id");
}

} // namespace

bool replay_failure(LemmaId id, const nlohmann::json& details) {
    switch (id) {
    case LemmaId::S_subgraph:
        return verify_S_subgraph(family_from_json(details.at("instance"))).has_value();
    case LemmaId::S_matching:
        return verify_S_matching(family_from_json(details.at("instance"))).has_value();
    case LemmaId::stable_preservation:
        return verify_stable_preservation(family_from_json(details.at("instance")),
                                          details.at("s").get<int>(),
                                          details.at("q").get<int>())
            .has_value();
    case LemmaId::shadow_stable:
        return verify_shadow_stable(family_from_json(details.at("instance"))).has_value();
    case LemmaId::leq4: {
        Leq4Result r = verify_leq4();
        return !(r.pools_match && r.pool_size == 8 && r.max_size == 4);
    }
    }
    throw invalid_argument_error("unknown lemma id");
}

LemmaReport run_lemma(LemmaId id, std::uint64_t trials, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    LemmaReport report;
    report.id = id;
    report.seed = seed;
    report.trials = (id == LemmaId::leq4) ? 1 : trials;

    std::vector<LemmaFailure> failures;
    std::string first_error;

    const std::int64_t count = static_cast<std::int64_t>(report.trials);
    const int threads = effective_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            auto fail = run_trial(id, seed, static_cast<std::uint64_t>(t));
            if (fail) {
#ifdef _OPENMP
#pragma omp critical(hx_lemma_failures)
#endif
                failures.push_back({static_cast<std::uint64_t>(t), *fail});
            }
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical(hx_lemma_failures)
#endif
            if (first_error.empty())
                first_error = e.what();
        }
    }
    if (!first_error.empty())
        throw generator_exhausted_error("lemma trial failed to run: " + first_error);

    std::sort(failures.begin(), failures.end(),
              [](const LemmaFailure& a, const LemmaFailure& b) { return a.trial < b.trial; });
    report.failures = std::move(failures);
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    return report;
}

std::vector<LemmaReport> run_all_lemmas(std::uint64_t trials, std::uint64_t seed) {
    std::vector<LemmaReport> out;
    for (LemmaId id : all_lemmas())
        out.push_back(run_lemma(id, trials, seed));
    return out;
}

} // namespace hx
