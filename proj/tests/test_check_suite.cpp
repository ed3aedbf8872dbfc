#include <catch2/catch_amalgamated.hpp>

#include <cstring>

#include "framequant/check_suite.hpp"

using namespace framequant;
using namespace framequant::checks;

TEST_CASE("suite passes at the default configuration and is deterministic") {
    SuiteConfig cfg; // d = 3, n_fock = 40, grid (6, 0.2), seed 7
    std::vector<CheckResult> first = run_check_suite(cfg);
    REQUIRE(!first.empty());

    for (const auto& r : first) {
        INFO(r.name << " residual " << r.residual << " tol " << r.tolerance);
        CHECK(r.pass);
    }

    // sorted by name for stable report assembly
    for (std::size_t i = 1; i < first.size(); ++i) {
        CHECK(first[i - 1].name < first[i].name);
    }

    // identical config + seed reproduces every residual bit for bit
    std::vector<CheckResult> second = run_check_suite(cfg);
    REQUIRE(second.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(std::memcmp(&first[i].residual, &second[i].residual, sizeof(double)) == 0);
    }
}

TEST_CASE("tolerance overrides flip individual checks") {
    SuiteConfig cfg;
    cfg.grid_spacing = 0.4; // keep this test light; finite-group checks suffice
    cfg.tolerance_overrides["grouprep.orthogonality"] = 1e-30;

    std::vector<CheckResult> results = run_check_suite(cfg);
    bool found = false;
    for (const auto& r : results) {
        if (r.name == "grouprep.orthogonality") {
            found = true;
            CHECK(r.tolerance == 1e-30);
            CHECK(!r.pass);
        }
    }
    CHECK(found);
}

TEST_CASE("configuration validation") {
    SuiteConfig bad_d;
    bad_d.d = 4;
    CHECK_THROWS_AS(run_check_suite(bad_d), std::invalid_argument);

    SuiteConfig bad_grid;
    bad_grid.grid_spacing = 0.7; // 2L/h not an even integer
    CHECK_THROWS_AS(run_check_suite(bad_grid), std::invalid_argument);

    SuiteConfig bad_fock;
    bad_fock.n_fock = 1;
    CHECK_THROWS_AS(run_check_suite(bad_fock), std::invalid_argument);
}
