#include <doctest.h>

#include <set>

#include "edgereg/verifier.hpp"

using namespace edgereg;

TEST_CASE("instance seeds are distinct and stable") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(instance_seed(7, i));
    CHECK(seen.size() == 1000);
    CHECK(instance_seed(7, 3) == instance_seed(7, 3));
    CHECK(instance_seed(7, 3) != instance_seed(8, 3));
}

TEST_CASE("reports do not depend on the worker count") {
    ForestParams p;
    p.trials = 30;
    p.n_max = 10;
    CampaignOptions one, four;
    four.workers = 4;
    CHECK(verify_forest_theorem(p, one).to_json() == verify_forest_theorem(p, four).to_json());

    ImMonotoneParams ip;
    ip.trials = 20;
    ip.n_max = 9;
    ip.d_max = 3;
    CHECK(verify_im_monotone(ip, one).to_json() == verify_im_monotone(ip, four).to_json());
}

TEST_CASE("instance budget turns the rest into skipped rows") {
    ForestParams p;
    p.trials = 20;
    CampaignOptions o;
    o.max_instances = 5;
    const VerificationReport r = verify_forest_theorem(p, o);
    CHECK(r.skipped_count() > 0);
    for (std::size_t i : r.discrepancies()) CHECK_FALSE(r.instances()[i].skipped);
}

TEST_CASE("discrepancy indices point at disagreeing rows") {
    VerificationReport r("demo", 1);
    r.add({"a", "x", "1", "1", Provenance::PaperClaim, "m", true});
    r.add({"b", "x", "1", "2", Provenance::PaperClaim, "m", false});
    InstanceResult info{"c", "x", "1", "3", Provenance::PaperFormula, "m", false};
    info.gating = false;
    r.add(info);
    InstanceResult skip{"d", "x", "1", "", Provenance::DerivedOracle, "m", false, true};
    r.add(skip);
    CHECK(r.discrepancies() == std::vector<std::size_t>{1, 2});
    CHECK(r.gating_failures() == std::vector<std::size_t>{1});
    CHECK(r.skipped_count() == 1);
    CHECK_FALSE(r.passed());
    CHECK(r.to_json().find("\"runtime\"") == std::string::npos);
    r.set_elapsed_seconds(1.5);
    CHECK(r.to_json(true).find("\"elapsed_ms\": 1500") != std::string::npos);
}

TEST_CASE("sunflower campaign passes") { CHECK(verify_sunflower_example().passed()); }

TEST_CASE("path campaign passes on a small range") {
    PathFormulaParams p;
    p.n_max = 9;
    p.d_max = 3;
    p.homology_n_max = 8;
    p.homology_d_max = 3;
    const VerificationReport r = verify_path_formula(p);
    CHECK(r.passed());
    CHECK(r.discrepancies().empty());
}

TEST_CASE("cycle campaign: d = 1 mismatches are informational") {
    CycleTheoremParams p;
    p.n_max = 11;
    p.d_max = 2;
    const VerificationReport r = verify_cycle_theorem(p);
    CHECK(r.passed());
    std::set<std::string> info;
    for (std::size_t i : r.discrepancies()) info.insert(r.instances()[i].instance);
    CHECK(info == std::set<std::string>{"C_11^1", "C_8^1"});
}

TEST_CASE("conjecture campaign flags the double star") {
    const Graph g(6, {{1, 2}, {2, 4}, {2, 5}, {3, 4}, {4, 6}});
    const VerificationReport r = verify_conjecture(g, 0, "double-star");
    CHECK_FALSE(r.passed());
    CHECK(verify_conjecture(power(path(9), 1), 0, "path").passed());
}

TEST_CASE("critical battery at (2,2): regularity rows hold") {
    const VerificationReport r = verify_critical_case(2, 2);
    for (const auto& row : r.instances())
        if (row.check.rfind("reg", 0) == 0 && row.gating) CHECK_MESSAGE(row.agree, row.check);
}
