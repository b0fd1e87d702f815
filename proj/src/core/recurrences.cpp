#include "core/recurrences.hpp"

#include "core/errors.hpp"
#include "core/series_catalog.hpp"

#include <stdexcept>

namespace altdes {

namespace {

constexpr int kIntTableLimit = 200;

void check_table_bound(int n_max) {
    if (n_max < 0) throw std::domain_error("negative index");
    if (n_max > kIntTableLimit)
        throw ResourceError("table length capped at " + std::to_string(kIntTableLimit));
}

}  // namespace

FgTables fg_recurrence(int n_max) {
    check_table_bound(n_max);
    FgTables t;
    t.f.assign(n_max + 1, BigInt(0));
    t.g.assign(n_max + 1, BigInt(0));
    t.f[0] = 1;
    t.g[0] = 1;
    for (int n = 0; n < n_max; ++n) {
        const BigInt& tail = n % 2 == 0 ? t.f[n] : t.g[n];
        BigInt fsum = 0;
        for (int k = 0; 2 * k <= n - 1; ++k)
            fsum += binomial(n, 2 * k) * t.f[2 * k] * t.f[n - 2 * k];
        t.f[n + 1] = fsum + tail;
        BigInt gsum = 0;
        for (int k = 0; 2 * k <= n - 2; ++k)
            gsum += binomial(n, 2 * k) * t.f[2 * k] * (t.f[n - 2 * k] - t.g[n - 2 * k]);
        t.g[n + 1] = gsum + tail;
    }
    return t;
}

SplitTables split_recurrence(int n_max) {
    check_table_bound(n_max);
    SplitTables t;
    t.f1.assign(n_max + 1, BigInt(0));
    t.f2.assign(n_max + 1, BigInt(0));
    t.g1.assign(n_max + 1, BigInt(0));
    t.g2.assign(n_max + 1, BigInt(0));
    t.f2[0] = 1;
    t.g2[0] = 1;
    for (int n = 0; n < n_max; ++n) {
        BigInt s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        for (int k = 0; k <= n - 1; ++k) {
            const BigInt base = binomial(n, k) * t.f2[k];
            s1 += base * t.f2[n - k];
            s2 += base * t.f1[n - k];
            s3 += base * (t.f2[n - k] - t.g2[n - k]);
        }
        for (int k = 0; k <= n - 2; ++k)
            s4 += binomial(n, k) * t.f2[k] * (t.f1[n - k] - t.g1[n - k]);
        t.f1[n + 1] = s1 + t.f2[n];
        t.f2[n + 1] = s2 + t.g1[n];
        t.g1[n + 1] = s3 + t.f2[n];
        t.g2[n + 1] = s4 + t.g1[n];
    }
    return t;
}

OdeReport ode_residuals(int order) {
    if (order < 1) throw std::domain_error("order must be positive");
    OdeReport rep;
    rep.order = order;
    const auto f1 = named_series("F1", order);
    const auto f2 = named_series("F2", order);
    const auto g1 = named_series("G1", order);
    const auto g2 = named_series("G2", order);
    const auto check = [&](const char* label, const RatSeries& lhs,
                           const RatSeries& rhs) {
        if (!(lhs == rhs)) rep.failures.push_back(label);
    };
    check("F1' = F2^2", f1.derivative(), f2 * f2);
    check("F2' = F1*F2 + G1", f2.derivative(), f1 * f2 + g1);
    check("G1' = F2*(F2 - G2) + F2", g1.derivative(), f2 * (f2 - g2) + f2);
    check("G2' = F2*(F1 - G1) + G1", g2.derivative(), f2 * (f1 - g1) + g1);
    rep.ok = rep.failures.empty();
    return rep;
}

CdTables cd_tables(int n_max) {
    if (n_max < 0) throw std::domain_error("negative index");
    const auto cq = named_series("C_quotient", n_max);
    const auto dq = named_series("D_quotient", n_max);
    CdTables t;
    t.c.reserve(n_max + 1);
    t.d.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        t.c.push_back(rat_to_bigint(cq.egf_coeff(n)));
        t.d.push_back(rat_to_bigint(dq.egf_coeff(n)));
    }
    t.trig_matches_quotient =
        cq == named_series("C_trig", n_max) && dq == named_series("D_trig", n_max);
    return t;
}

}  // namespace altdes
