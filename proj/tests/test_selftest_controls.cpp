#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "hyperanalytic/selftest.hpp"

using namespace hyperanalytic::selftest;

TEST_CASE("every criterion passes on the reference configuration", "[selftest]") {
    std::ostringstream log;
    const auto results = run_all({}, &log);
    REQUIRE(results.size() == 8);
    for (const auto& r : results) {
        INFO(format_line(r));
        CHECK(r.passed);
    }
    CHECK(all_passed(results));
    CHECK(log.str().find("PASS  [1]") != std::string::npos);
}

TEST_CASE("a conjugated complex-FFT route fails the equivalence criterion", "[selftest]") {
    Options opts;
    opts.conjugate_fft_route = true;
    const auto r = cross_method_equivalence(opts);
    CHECK_FALSE(r.passed);
    CHECK(format_line(r).rfind("FAIL  [1]", 0) == 0);
    CHECK(cross_method_equivalence({}).passed);
}

TEST_CASE("results do not depend on the seed", "[selftest]") {
    Options opts;
    opts.seed = 12345;
    CHECK(all_passed(run_all(opts)));
}
