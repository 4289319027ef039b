#include <doctest.h>

#include "hx/parallel.hpp"
#include "hx/properties.hpp"
#include "hx/reports.hpp"
#include "hx/search.hpp"
#include "reference.hpp"

using hx::SearchCertificate;

TEST_SUITE("search") {

TEST_CASE("boundary case (6,2): shifted equals unrestricted") {
    SearchCertificate shifted = hx::search_shifted_max(6, 2);
    SearchCertificate full = hx::search_unrestricted_max(6, 2);
    CHECK(shifted.complete);
    CHECK(full.complete);
    CHECK(shifted.optimum == 10);
    CHECK(full.optimum == shifted.optimum);
    CHECK(shifted.theorem_holds == true);
    CHECK(full.theorem_holds == true);
    hx::revalidate_certificate(shifted);
    hx::revalidate_certificate(full);
}

TEST_CASE("(7,2): optimum 15, witness is the full star") {
    SearchCertificate cert = hx::search_shifted_max(7, 2);
    CHECK(cert.complete);
    CHECK(cert.optimum == 15);
    CHECK(cert.theorem_holds == true);
    CHECK(cert.witness == hx::make_F1(7, 2).family);
    hx::revalidate_certificate(cert);
}

TEST_CASE("(9,3): optimum 35, witness is C([7],3)") {
    SearchCertificate cert = hx::search_shifted_max(9, 3);
    CHECK(cert.complete);
    CHECK(cert.optimum == 35);
    CHECK(cert.theorem_holds == true);
    CHECK(cert.witness == hx::make_F3(9, 3).family);
    hx::revalidate_certificate(cert);
}

TEST_CASE("monotonicity in n") {
    CHECK(hx::search_shifted_max(7, 2).optimum >= hx::search_shifted_max(6, 2).optimum);
    CHECK(hx::search_shifted_max(8, 2).optimum >= hx::search_shifted_max(7, 2).optimum);
}

TEST_CASE("search matches the unpruned down-set enumerator") {
    CHECK(hx::search_shifted_max(6, 2).optimum ==
          static_cast<std::uint64_t>(ref::max_shifted_u_naive(6, 2, 5)));
    CHECK(hx::search_shifted_max(7, 2).optimum ==
          static_cast<std::uint64_t>(ref::max_shifted_u_naive(7, 2, 5)));
    CHECK(hx::search_shifted_max(7, 3).optimum ==
          static_cast<std::uint64_t>(ref::max_shifted_u_naive(7, 3, 7)));
}

TEST_CASE("optimum and witness are thread-count invariant") {
    hx::RunConfig cfg;
    cfg.normalized = true;

    hx::set_thread_limit(1);
    SearchCertificate one = hx::search_shifted_max(8, 2);
    hx::set_thread_limit(8);
    SearchCertificate eight = hx::search_shifted_max(8, 2);
    hx::set_thread_limit(0);

    CHECK(one.optimum == 21);
    CHECK(eight.optimum == one.optimum);
    CHECK(eight.witness == one.witness);
    CHECK(hx::dump_report(hx::certificate_json(one, cfg), cfg) ==
          hx::dump_report(hx::certificate_json(eight, cfg), cfg));
}

TEST_CASE("budget exhaustion reports incomplete, never a verdict") {
    hx::SearchBudget tiny;
    tiny.max_seconds = 0.0; // deadline already passed at the first node
    SearchCertificate cert = hx::search_shifted_max(9, 3, tiny);
    CHECK(!cert.complete);
    CHECK(!cert.theorem_holds.has_value());
    CHECK(cert.optimum == 35); // seeded lower bound stands
    CHECK(cert.witness.size() == 35);
    hx::revalidate_certificate(cert);
}

TEST_CASE("unrestricted search guard") {
    CHECK_THROWS_AS(hx::search_unrestricted_max(7, 2), hx::invalid_parameters_error);
    CHECK_THROWS_AS(hx::search_unrestricted_max(6, 3), hx::invalid_parameters_error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(hx::search_shifted_max(10, 1), hx::invalid_parameters_error);
    CHECK_THROWS_AS(hx::search_shifted_max(4, 2), hx::invalid_parameters_error);
}

TEST_CASE("certificates survive the load path and re-validate") {
    hx::RunConfig cfg;
    SearchCertificate cert = hx::search_shifted_max(6, 2);
    nlohmann::json j = hx::certificate_json(cert, cfg);
    SearchCertificate loaded = hx::certificate_from_json(j);
    hx::revalidate_certificate(loaded);
    CHECK(loaded.optimum == cert.optimum);
    CHECK(loaded.witness == cert.witness);
    CHECK(loaded.theorem_holds == cert.theorem_holds);

    // tampering is caught without trusting the search
    nlohmann::json bad = j;
    bad["witness"]["edges"].erase(0);
    CHECK_THROWS_AS(hx::revalidate_certificate(hx::certificate_from_json(bad)), hx::error);

    nlohmann::json lied = j;
    lied["optimum"] = lied["optimum"].get<int>() + 1;
    CHECK_THROWS_AS(hx::revalidate_certificate(hx::certificate_from_json(lied)), hx::error);
}

TEST_CASE("witness re-validation catches a non-shifted witness") {
    hx::RunConfig cfg;
    SearchCertificate cert = hx::search_shifted_max(6, 2);
    nlohmann::json j = hx::certificate_json(cert, cfg);
    // replace the witness with a same-size family that is not shifted
    // (rotate labels: i -> i+1 mod 6, mapping the star at 1 elsewhere)
    auto edges = j["witness"]["edges"];
    nlohmann::json rotated = nlohmann::json::array();
    for (const auto& e : edges) {
        nlohmann::json edge = nlohmann::json::array();
        for (int v : e)
            edge.push_back(v % 6 + 1);
        rotated.push_back(edge);
    }
    j["witness"]["edges"] = rotated;
    bool threw = false;
    try {
        hx::revalidate_certificate(hx::certificate_from_json(j));
    } catch (const hx::error&) {
        threw = true;
    }
    CHECK(threw);
}

} // TEST_SUITE
