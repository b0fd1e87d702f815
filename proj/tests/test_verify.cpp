#include <doctest.h>

#include "core/verify.hpp"

#include <stdexcept>

using namespace altdes;

TEST_CASE("suite names are stable") {
    const auto names = verify_suite_names();
    REQUIRE(names.size() == 6);
    CHECK(names.front() == "oracle");
    CHECK(names.back() == "all");
}

TEST_CASE("clamped suites pass quickly") {
    VerifyOptions opts;
    opts.n_max = 5;

    for (const auto& suite : {"oracle", "recurrences", "series-identities"}) {
        const auto results = verify_suite(suite, opts);
        CHECK(!results.empty());
        for (const auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.pass);
            CHECK(!r.ref.empty());
        }
    }
}

TEST_CASE("all concatenates every suite") {
    VerifyOptions opts;
    opts.n_max = 4;
    const auto all = verify_suite("all", opts);
    std::size_t sum = 0;
    for (const auto& suite : {"oracle", "recurrences", "series-identities", "ncsf", "qt"})
        sum += verify_suite(suite, opts).size();
    CHECK(all.size() == sum);
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(verify_suite("nope", VerifyOptions{}), std::domain_error);
}

TEST_CASE("seed changes the sampled weights but not the outcome") {
    VerifyOptions opts;
    opts.n_max = 4;
    opts.seed = 7;
    for (const auto& r : verify_suite("ncsf", opts)) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}
