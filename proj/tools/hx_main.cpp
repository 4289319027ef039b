#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hx/constructions.hpp"
#include "hx/io.hpp"
#include "hx/lemmas.hpp"
#include "hx/parallel.hpp"
#include "hx/properties.hpp"
#include "hx/reports.hpp"
#include "hx/search.hpp"

namespace {

using hx::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;     // counterexample / verdict fail
constexpr int kExitUsage = 2;    // usage or IO error
constexpr int kExitBudget = 3;   // budget exhausted, incomplete result

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

hx::FamilyFormat pick_format(const std::string& path, const std::string& format) {
    if (format == "text")
        return hx::FamilyFormat::text;
    if (format == "json")
        return hx::FamilyFormat::json;
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json"
               ? hx::FamilyFormat::json
               : hx::FamilyFormat::text;
}

std::string edge_line(const std::vector<hx::Edge>& edges) {
    std::string out;
    for (const hx::Edge& e : edges) {
        if (!out.empty())
            out += " | ";
        std::string item;
        for (int v : e.vertices()) {
            if (!item.empty())
                item += ' ';
            item += std::to_string(v);
        }
        out += item;
    }
    return out;
}

int cmd_construct(const std::string& family, int n, int s, int p, int r, int k, int i, int m,
                  const std::string& out_path, const std::string& format) {
    hx::ConstructionSpec spec;
    spec.kind = hx::ConstructionSpec::kind_from_string(family);
    spec.n = n;
    spec.s = s;
    spec.p = p;
    spec.r = r;
    spec.k = k;
    spec.i = i;
    spec.m = m;
    hx::Construction c = spec.build();
    if (c.below_threshold)
        std::cerr << "warning: n = " << n << " is below the theorem threshold 2s+2 = "
                  << 2 * s + 2 << "; construction emitted anyway\n";
    hx::save_family(c.family, out_path, pick_format(out_path, format));
    std::cout << "wrote " << family << ": n=" << c.family.ground_set()
              << " k=" << c.family.arity() << " edges=" << c.family.size() << " -> "
              << out_path << "\n";
    return kExitOk;
}

int cmd_check_u(const std::string& input, int s, int q, bool as_json, const RunConfig& cfg) {
    Timer timer;
    hx::Family f = hx::load_family(input);
    hx::UCheckResult res = hx::check_U(f, s, q);
    if (as_json) {
        std::cout << hx::dump_report(hx::check_u_report(f, s, q, res, timer.elapsed_ms(), cfg),
                                     cfg);
    } else if (res.ok) {
        std::cout << "U(" << s << "," << q << ") holds for " << input << " (n=" << f.ground_set()
                  << ", " << f.size() << " edges)\n";
    } else {
        std::cout << "U(" << s << "," << q << ") FAILS: union " << res.witness->union_size
                  << " > " << q << " from " << edge_line(res.witness->edges) << "\n";
    }
    return res.ok ? kExitOk : kExitFail;
}

int cmd_nu(const std::string& input, bool as_json, const RunConfig& cfg) {
    Timer timer;
    hx::Family f = hx::load_family(input);
    hx::MatchingWitness res = hx::matching_number(f);
    if (as_json)
        std::cout << hx::dump_report(hx::nu_report(f, res, timer.elapsed_ms(), cfg), cfg);
    else
        std::cout << "nu = " << res.nu << "; witness: " << edge_line(res.edges) << "\n";
    return kExitOk;
}

int cmd_stabilize(const std::string& input, const std::string& out_path,
                  const std::string& format, bool as_json, const RunConfig& cfg) {
    Timer timer;
    hx::Family f = hx::load_family(input);
    hx::Family st = hx::stabilize(f);
    hx::save_family(st, out_path, pick_format(out_path, format));
    if (as_json)
        std::cout << hx::dump_report(hx::stabilize_report(f, st, timer.elapsed_ms(), cfg), cfg);
    else
        std::cout << "stabilized " << input << " -> " << out_path << " (size " << st.size()
                  << ", shifted)\n";
    return kExitOk;
}

int cmd_rstat(const std::string& input, bool as_json, const RunConfig& cfg) {
    Timer timer;
    hx::Graph g = hx::load_family(input);
    int nu = hx::matching_number(g).nu;
    hx::StabilityStat stat = hx::r_stat(g);
    if (as_json)
        std::cout << hx::dump_report(hx::rstat_report(g, nu, stat, timer.elapsed_ms(), cfg),
                                     cfg);
    else
        std::cout << "nu = " << nu << " r = " << stat.r << "\n";
    return kExitOk;
}

int cmd_lemmas(const std::string& only, bool as_json, const RunConfig& cfg) {
    std::vector<hx::LemmaReport> reports;
    if (only.empty()) {
        reports = hx::run_all_lemmas(cfg.trials, cfg.seed);
    } else {
        reports.push_back(hx::run_lemma(hx::lemma_from_string(only), cfg.trials, cfg.seed));
    }
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed();
    if (as_json) {
        std::cout << hx::dump_report(hx::lemmas_report(reports, cfg), cfg);
    } else {
        for (const auto& r : reports)
            std::cout << to_string(r.id) << ": " << r.trials << " trials, "
                      << r.failures.size() << " failures, " << r.elapsed_ms << " ms ["
                      << (r.passed() ? "PASS" : "FAIL") << "]\n";
    }
    return ok ? kExitOk : kExitFail;
}

int cmd_search(int n, int s, bool unrestricted, const std::string& cert_path, bool as_json,
               const RunConfig& cfg) {
    hx::SearchBudget budget{cfg.budget_nodes, cfg.budget_secs};
    hx::SearchCertificate cert = unrestricted ? hx::search_unrestricted_max(n, s, budget)
                                              : hx::search_shifted_max(n, s, budget);
    hx::revalidate_certificate(cert);
    nlohmann::json j = hx::certificate_json(cert, cfg);
    hx::write_file(cert_path, (cfg.normalized ? hx::normalized_report(j) : j).dump(2) + "\n");

    if (as_json) {
        std::cout << hx::dump_report(j, cfg);
    } else {
        std::cout << "n=" << cert.n << " s=" << cert.s << " optimum=" << cert.optimum
                  << " bound=" << cert.bound_breakdown.max() << " theorem_holds="
                  << (cert.theorem_holds ? (*cert.theorem_holds ? "true" : "false")
                                         : "unknown")
                  << (cert.complete ? "" : " INCOMPLETE (budget exhausted)")
                  << " nodes=" << cert.nodes_explored << " elapsed=" << cert.elapsed_ms
                  << "ms -> " << cert_path << "\n";
    }
    if (!cert.complete)
        return kExitBudget;
    if (cert.theorem_holds && !*cert.theorem_holds)
        return kExitFail;
    return kExitOk;
}

int cmd_bound(int n, int s) {
    std::cout << hx::bound_report(n, s).dump() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hx: extremal 3-graphs under the edge-union condition U(s,q): "
                 "constructions, checkers, stabilization, lemma suite, exact search"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--threads", cfg.threads,
                   "max worker threads (0 = auto: HX_THREADS env, then hardware)");

    std::function<int()> action;

    // construct
    {
        auto* c = app.add_subcommand("construct", "build a named family and write it to a file");
        auto family = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto s = std::make_shared<int>(-1);
        auto p = std::make_shared<int>(-1);
        auto r = std::make_shared<int>(-1);
        auto k = std::make_shared<int>(3);
        auto i = std::make_shared<int>(-1);
        auto m = std::make_shared<int>(-1);
        auto out = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("auto");
        c->add_option("--family", *family, "F1|F2|F3|Apr|Agraph")->required();
        c->add_option("--n", *n, "ground set size")->required();
        c->add_option("--s", *s, "matching parameter (F1/F2/F3)");
        c->add_option("--p", *p, "prefix size (Apr)");
        c->add_option("--r", *r, "required intersection (Apr)");
        c->add_option("--k", *k, "uniformity (Apr, default 3)");
        c->add_option("--i", *i, "spine size (Agraph)");
        c->add_option("--m", *m, "matching number (Agraph)");
        c->add_option("-o,--output", *out, "output file")->required();
        c->add_option("--format", *format, "auto|text|json (auto: by extension)");
        c->callback([=, &action]() {
            action = [=]() {
                return cmd_construct(*family, *n, *s, *p, *r, *k, *i, *m, *out, *format);
            };
        });
    }

    // check-u
    {
        auto* c = app.add_subcommand("check-u", "decide U(s,q); exit 1 with a witness if it fails");
        auto input = std::make_shared<std::string>();
        auto s = std::make_shared<int>(0);
        auto q = std::make_shared<int>(0);
        auto json = std::make_shared<bool>(false);
        auto norm = std::make_shared<bool>(false);
        c->add_option("--input", *input, "family file (text or JSON)")->required();
        c->add_option("--s", *s, "number of edges")->required();
        c->add_option("--q", *q, "union bound")->required();
        c->add_flag("--json", *json, "JSON report on stdout");
        c->add_flag("--normalized", *norm, "strip volatile fields from the report");
        c->callback([=, &action, &cfg]() {
            action = [=, &cfg]() {
                cfg.normalized = *norm;
                cfg.output_format = *json ? "json" : "text";
                return cmd_check_u(*input, *s, *q, *json, cfg);
            };
        });
    }

    // nu
    {
        auto* c = app.add_subcommand("nu", "exact matching number with witness");
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        auto norm = std::make_shared<bool>(false);
        c->add_option("--input", *input, "family file")->required();
        c->add_flag("--json", *json, "JSON report on stdout");
        c->add_flag("--normalized", *norm, "strip volatile fields from the report");
        c->callback([=, &action, &cfg]() {
            action = [=, &cfg]() {
                cfg.normalized = *norm;
                cfg.output_format = *json ? "json" : "text";
                return cmd_nu(*input, *json, cfg);
            };
        });
    }

    // stabilize
    {
        auto* c = app.add_subcommand("stabilize", "compress a family to a shifted one");
        auto input = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("auto");
        auto json = std::make_shared<bool>(false);
        auto norm = std::make_shared<bool>(false);
        c->add_option("--input", *input, "family file")->required();
        c->add_option("-o,--output", *out, "output file")->required();
        c->add_option("--format", *format, "auto|text|json");
        c->add_flag("--json", *json, "JSON report on stdout");
        c->add_flag("--normalized", *norm, "strip volatile fields from the report");
        c->callback([=, &action, &cfg]() {
            action = [=, &cfg]() {
                cfg.normalized = *norm;
                cfg.output_format = *json ? "json" : "text";
                return cmd_stabilize(*input, *out, *format, *json, cfg);
            };
        });
    }

    // r-stat
    {
        auto* c = app.add_subcommand("r-stat", "largest i with nu(g - [i]) = nu(g) - i");
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        auto norm = std::make_shared<bool>(false);
        c->add_option("--input", *input, "graph file (k = 2)")->required();
        c->add_flag("--json", *json, "JSON report on stdout");
        c->add_flag("--normalized", *norm, "strip volatile fields from the report");
        c->callback([=, &action, &cfg]() {
            action = [=, &cfg]() {
                cfg.normalized = *norm;
                cfg.output_format = *json ? "json" : "text";
                return cmd_rstat(*input, *json, cfg);
            };
        });
    }

    // lemmas
    {
        auto* c = app.add_subcommand("lemmas", "verify the lemma suite on seeded instances");
        auto only = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        auto norm = std::make_shared<bool>(false);
        c->add_option("--only", *only,
                      "S_subgraph|S_matching|stable_preservation|shadow_stable|leq4");
        c->add_option("--trials", cfg.trials, "trials per lemma (default 1000)");
        c->add_option("--seed", cfg.seed, "master RNG seed (default 1)");
        c->add_flag("--json", *json, "JSON report on stdout");
        c->add_flag("--normalized", *norm, "strip volatile fields from the report");
        c->callback([=, &action, &cfg]() {
            action = [=, &cfg]() {
                cfg.normalized = *norm;
                cfg.output_format = *json ? "json" : "text";
                return cmd_lemmas(*only, *json, cfg);
            };
        });
    }

    // search
    {
        auto* c = app.add_subcommand("search", "exact extremal search, certificate to JSON");
        auto n = std::make_shared<int>(0);
        auto s = std::make_shared<int>(0);
        auto unrestricted = std::make_shared<bool>(false);
        auto cert = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        auto norm = std::make_shared<bool>(false);
        c->add_option("--n", *n, "ground set size")->required();
        c->add_option("--s", *s, "union parameter; q = 2s+1")->required();
        c->add_flag("--unrestricted", *unrestricted,
                    "search ALL families (oracle; C(n,3) <= 20, s = 2 only)");
        c->add_option("--budget-nodes", cfg.budget_nodes, "node budget");
        c->add_option("--budget-secs", cfg.budget_secs, "wall-clock budget in seconds");
        c->add_option("--seed", cfg.seed, "echoed into the certificate config");
        c->add_option("--certificate", *cert, "output certificate JSON path")->required();
        c->add_flag("--json", *json, "certificate JSON also on stdout");
        c->add_flag("--normalized", *norm, "strip volatile fields from outputs");
        c->callback([=, &action, &cfg]() {
            action = [=, &cfg]() {
                cfg.normalized = *norm;
                cfg.output_format = *json ? "json" : "text";
                return cmd_search(*n, *s, *unrestricted, *cert, *json, cfg);
            };
        });
    }

    // bound
    {
        auto* c = app.add_subcommand("bound", "closed-form sizes of F1/F2/F3 and their max");
        auto n = std::make_shared<int>(0);
        auto s = std::make_shared<int>(0);
        c->add_option("--n", *n, "ground set size")->required();
        c->add_option("--s", *s, "union parameter")->required();
        c->callback([=, &action]() { action = [=]() { return cmd_bound(*n, *s); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    hx::set_thread_limit(cfg.threads);

    try {
        return action ? action() : kExitUsage;
    } catch (const hx::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
