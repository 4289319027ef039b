#include "hx/reports.hpp"

#include "hx/io.hpp"

namespace hx {

namespace {
nlohmann::json edge_lists(const std::vector<Edge>& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const Edge& e : edges)
        out.push_back(e.vertices());
    return out;
}
} // namespace

nlohmann::json config_json(const RunConfig& cfg) {
    return {{"seed", cfg.seed},
            {"trials", cfg.trials},
            {"budget_nodes", cfg.budget_nodes},
            {"budget_secs", cfg.budget_secs},
            {"output_format", cfg.output_format},
            {"threads", cfg.threads}};
}

nlohmann::json check_u_report(const Family& f, int s, int q, const UCheckResult& result,
                              std::int64_t elapsed_ms, const RunConfig& cfg) {
    nlohmann::json witness;
    if (result.witness)
        witness = {{"edges", edge_lists(result.witness->edges)},
                   {"union_size", result.witness->union_size}};
    return {{"command", "check-u"}, {"config", config_json(cfg)},
            {"n", f.ground_set()},  {"k", f.arity()},
            {"s", s},               {"q", q},
            {"ok", result.ok},      {"witness", witness},
            {"elapsed_ms", elapsed_ms}};
}

nlohmann::json nu_report(const Family& f, const MatchingWitness& result,
                         std::int64_t elapsed_ms, const RunConfig& cfg) {
    return {{"command", "nu"},
            {"config", config_json(cfg)},
            {"n", f.ground_set()},
            {"k", f.arity()},
            {"nu", result.nu},
            {"witness", edge_lists(result.edges)},
            {"elapsed_ms", elapsed_ms}};
}

nlohmann::json rstat_report(const Graph& g, int nu, const StabilityStat& stat,
                            std::int64_t elapsed_ms, const RunConfig& cfg) {
    return {{"command", "r-stat"},
            {"config", config_json(cfg)},
            {"n", g.ground_set()},
            {"nu", nu},
            {"r", stat.r},
            {"elapsed_ms", elapsed_ms}};
}

nlohmann::json stabilize_report(const Family& input, const Family& output,
                                std::int64_t elapsed_ms, const RunConfig& cfg) {
    return {{"command", "stabilize"},
            {"config", config_json(cfg)},
            {"n", input.ground_set()},
            {"k", input.arity()},
            {"size", output.size()},
            {"shifted", is_shifted(output)},
            {"changed", !(input == output)},
            {"elapsed_ms", elapsed_ms}};
}

nlohmann::json bound_report(int n, int s) {
    SizeFormulas b = size_formulas(n, s);
    return {{"F1", b.f1}, {"F2", b.f2}, {"F3", b.f3}, {"bound", b.max()}};
}

nlohmann::json lemma_report_json(const LemmaReport& report) {
    nlohmann::json failures = nlohmann::json::array();
    for (const LemmaFailure& f : report.failures) {
        nlohmann::json entry = f.details;
        entry["trial"] = f.trial;
        failures.push_back(entry);
    }
    return {{"lemma_id", to_string(report.id)},
            {"trials", report.trials},
            {"failures", failures},
            {"seed", report.seed},
            {"elapsed_ms", report.elapsed_ms}};
}

nlohmann::json lemmas_report(const std::vector<LemmaReport>& reports, const RunConfig& cfg) {
    nlohmann::json list = nlohmann::json::array();
    bool ok = true;
    for (const LemmaReport& r : reports) {
        list.push_back(lemma_report_json(r));
        ok = ok && r.passed();
    }
    return {{"command", "lemmas"}, {"config", config_json(cfg)}, {"ok", ok}, {"reports", list}};
}

nlohmann::json certificate_json(const SearchCertificate& cert, const RunConfig& cfg) {
    nlohmann::json holds; // null = unknown (incomplete run)
    if (cert.theorem_holds)
        holds = *cert.theorem_holds;
    return {{"n", cert.n},
            {"s", cert.s},
            {"q", cert.q},
            {"optimum", cert.optimum},
            {"witness", to_json(cert.witness)},
            {"bound_breakdown",
             {cert.bound_breakdown.f1, cert.bound_breakdown.f2, cert.bound_breakdown.f3}},
            {"conjecture_bound", cert.bound_breakdown.max()},
            {"theorem_holds", holds},
            {"restricted_to_shifted", cert.restricted_to_shifted},
            {"complete", cert.complete},
            {"nodes_explored", cert.nodes_explored},
            {"elapsed_ms", cert.elapsed_ms},
            {"config", config_json(cfg)}};
}

SearchCertificate certificate_from_json(const nlohmann::json& j) {
    SearchCertificate cert;
    try {
        cert.n = j.at("n").get<int>();
        cert.s = j.at("s").get<int>();
        cert.q = j.at("q").get<int>();
        cert.optimum = j.at("optimum").get<std::uint64_t>();
        cert.witness = family_from_json(j.at("witness"));
        const auto& bb = j.at("bound_breakdown");
        if (!bb.is_array() || bb.size() != 3)
            throw io_error("certificate: bound_breakdown must have 3 entries");
        cert.bound_breakdown.f1 = bb[0].get<std::uint64_t>();
        cert.bound_breakdown.f2 = bb[1].get<std::uint64_t>();
        cert.bound_breakdown.f3 = bb[2].get<std::uint64_t>();
        if (!j.at("theorem_holds").is_null())
            cert.theorem_holds = j.at("theorem_holds").get<bool>();
        cert.restricted_to_shifted = j.at("restricted_to_shifted").get<bool>();
        cert.complete = j.at("complete").get<bool>();
        cert.nodes_explored = j.value("nodes_explored", std::uint64_t{0});
        cert.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

SearchCertificate load_certificate(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw io_error("cannot parse certificate " + path.string() + ": " + e.what());
    }
    SearchCertificate cert = certificate_from_json(j);
    revalidate_certificate(cert);
    return cert;
}

nlohmann::json normalized_report(nlohmann::json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        j.erase("nodes_explored");
        j.erase("threads");
        for (auto& [key, value] : j.items())
            value = normalized_report(value);
    } else if (j.is_array()) {
        for (auto& value : j)
            value = normalized_report(value);
    }
    return j;
}

std::string dump_report(const nlohmann::json& j, const RunConfig& cfg) {
    if (cfg.normalized)
        return normalized_report(j).dump() + "\n";
    return j.dump() + "\n";
}

} // namespace hx
