#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hx/family.hpp"

namespace hx {

enum class LemmaId { S_subgraph, S_matching, stable_preservation, shadow_stable, leq4 };

std::string to_string(LemmaId id);
LemmaId lemma_from_string(const std::string& name);
std::vector<LemmaId> all_lemmas();

// One verification run over `trials` independent seeded instances.
// Failures hold everything needed to replay the instance; a recorded
// failure must fail again when replayed.
struct LemmaFailure {
    std::uint64_t trial = 0;
    nlohmann::json details;
};

struct LemmaReport {
    LemmaId id{};
    std::uint64_t trials = 0;
    std::vector<LemmaFailure> failures;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

// Random stable graph with matching number exactly target_nu: stabilized
// random samples, edges added/removed between stabilizations until the
// matching number lands. Bounded retries; deterministic per seed.
// Requires 1 <= target_nu <= (n-2)/2.
Graph gen_stable_graph(int n, int target_nu, std::uint64_t seed);

// Each verifier returns nullopt on pass, else a replayable counterexample
// record. Inputs violating a stated hypothesis throw invalid_parameters.
std::optional<nlohmann::json> verify_S_subgraph(const Graph& g);
std::optional<nlohmann::json> verify_S_matching(const Graph& g);
std::optional<nlohmann::json> verify_stable_preservation(const Family& f, int s, int q);
std::optional<nlohmann::json> verify_shadow_stable(const Family& f);

// Exhaustive check on [6]: the 8 transversal triples of the matching
// {1,6},{2,5},{3,4}, all 2^8 subfamilies, max intersecting size must be 4.
struct Leq4Result {
    int pool_size = 0;
    int max_size = 0;
    Family achiever{6, 3};
    bool pools_match = false; // direct product vs filter over C([6],3)
};

Leq4Result verify_leq4();

// True when the recorded counterexample still fails its lemma.
bool replay_failure(LemmaId id, const nlohmann::json& details);

LemmaReport run_lemma(LemmaId id, std::uint64_t trials, std::uint64_t seed);
std::vector<LemmaReport> run_all_lemmas(std::uint64_t trials, std::uint64_t seed);

} // namespace hx
