#include <doctest.h>

#include "core/errors.hpp"
#include "core/recurrences.hpp"

#include <stdexcept>

using namespace altdes;

TEST_CASE("coupled recurrence reproduces the short run table") {
    const auto t = fg_recurrence(8);
    const BigInt f_expected[] = {1, 1, 2, 4, 13, 50, 229, 1238, 7614};
    for (int n = 0; n <= 8; ++n) CHECK(t.f[n] == f_expected[n]);
    CHECK(t.g[0] == 1);
    CHECK(t.g[3] == 3);
    CHECK(t.g[5] == 34);
    CHECK(t.g[6] == 70);
    CHECK_THROWS_AS(fg_recurrence(-1), std::domain_error);
    CHECK_THROWS_AS(fg_recurrence(201), ResourceError);
}

TEST_CASE("parity split supports complementary index sets") {
    const auto s = split_recurrence(9);
    const auto t = fg_recurrence(9);
    for (int n = 0; n <= 9; ++n) {
        CHECK(s.f1[n] + s.f2[n] == t.f[n]);
        CHECK(s.g1[n] + s.g2[n] == t.g[n]);
        if (n % 2 == 0) {
            CHECK(s.f1[n] == 0);
            CHECK(s.g1[n] == 0);
        } else {
            CHECK(s.f2[n] == 0);
            CHECK(s.g2[n] == 0);
        }
    }
}

TEST_CASE("closed forms satisfy the differential system") {
    const auto rep = ode_residuals(12);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    CHECK(rep.order == 12);
}

TEST_CASE("last run refinement") {
    const auto cd = cd_tables(8);
    const BigInt c_expected[] = {0, 1, 1, 3, 9, 34, 159, 853, 5249};
    const BigInt d_expected[] = {0, 0, 1, 1, 4, 16, 70, 385, 2365};
    for (int n = 0; n <= 8; ++n) {
        CHECK(cd.c[n] == c_expected[n]);
        CHECK(cd.d[n] == d_expected[n]);
    }
    CHECK(cd.trig_matches_quotient);

    const auto t = fg_recurrence(8);
    for (int n = 1; n <= 8; ++n) CHECK(cd.c[n] + cd.d[n] == t.f[n]);
}
