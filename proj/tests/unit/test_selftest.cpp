#include "doctest.h"

#include "initrep/selftest.hpp"

using namespace initrep;

TEST_CASE("selftest sweep passes on a small range") {
    SelftestReport report = run_selftest(12, 3);
    CHECK(report.passed);
    CHECK(report.checks.size() == 8);
    for (const auto& c : report.checks) {
        CHECK(c.passed);
        CHECK(c.cases > 0);
        CHECK(c.counterexample.empty());
    }
}

TEST_CASE("trivial bounds") {
    SelftestReport report = run_selftest(0, 1);
    CHECK(report.passed);
}

TEST_CASE("bounds beyond the cap are rejected") {
    CHECK_THROWS_AS(run_selftest(61, 2), CapExceeded);
    CHECK_THROWS_AS(run_selftest(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(run_selftest(5, 0), std::invalid_argument);
}
