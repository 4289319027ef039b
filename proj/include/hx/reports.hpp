#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hx/lemmas.hpp"
#include "hx/properties.hpp"
#include "hx/search.hpp"

namespace hx {

// Effective configuration of a run; echoed into every JSON report so runs
// are reproducible from their artifacts alone. Defaults are part of the
// interface and stay fixed across versions.
struct RunConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    std::uint64_t budget_nodes = 2'000'000'000ULL;
    double budget_secs = 300.0;
    std::string output_format = "text"; // "text" | "json"
    int threads = 0;                    // 0 = auto (HX_THREADS, then hardware)
    bool normalized = false;
};

nlohmann::json config_json(const RunConfig& cfg);

nlohmann::json check_u_report(const Family& f, int s, int q, const UCheckResult& result,
                              std::int64_t elapsed_ms, const RunConfig& cfg);
nlohmann::json nu_report(const Family& f, const MatchingWitness& result,
                         std::int64_t elapsed_ms, const RunConfig& cfg);
nlohmann::json rstat_report(const Graph& g, int nu, const StabilityStat& stat,
                            std::int64_t elapsed_ms, const RunConfig& cfg);
nlohmann::json stabilize_report(const Family& input, const Family& output,
                                std::int64_t elapsed_ms, const RunConfig& cfg);

// Exactly {"F1":...,"F2":...,"F3":...,"bound":...}.
nlohmann::json bound_report(int n, int s);

nlohmann::json lemma_report_json(const LemmaReport& report);
nlohmann::json lemmas_report(const std::vector<LemmaReport>& reports, const RunConfig& cfg);

nlohmann::json certificate_json(const SearchCertificate& cert, const RunConfig& cfg);
SearchCertificate certificate_from_json(const nlohmann::json& j);

// Parse + independent re-validation: the loaded witness is re-checked
// (shifted, U(s,2s+1), size = optimum) without trusting the producer.
SearchCertificate load_certificate(const std::filesystem::path& path);

// Strips run-volatile fields (elapsed_ms, nodes_explored, threads) so that
// reports from runs differing only in timing or thread count compare
// byte-identical.
nlohmann::json normalized_report(nlohmann::json j);

// Canonical serialization: sorted keys (nlohmann objects), compact, one
// trailing newline. Applies normalization when the config asks for it.
std::string dump_report(const nlohmann::json& j, const RunConfig& cfg);

} // namespace hx
