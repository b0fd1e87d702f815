#include "core/verify.hpp"

#include "core/composition.hpp"
#include "core/counts.hpp"
#include "core/ncsf.hpp"
#include "core/numbers.hpp"
#include "core/oracle.hpp"
#include "core/permutation.hpp"
#include "core/poly.hpp"
#include "core/recurrences.hpp"
#include "core/series.hpp"
#include "core/series_catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace altdes {

namespace {

using Checks = std::vector<CheckResult>;

struct Ctx {
    VerifyOptions opts;

    int clamp(int dflt) const {
        return opts.n_max <= 0 ? dflt : std::min(dflt, opts.n_max);
    }
};

void add(Checks& out, std::string name, std::string ref, bool pass,
         std::string detail) {
    out.push_back({std::move(name), std::move(ref), pass, std::move(detail)});
}

std::string str(const BigInt& v) { return v.str(); }

std::string bounds(int n) { return "n <= " + std::to_string(n); }

constexpr long long kFrozenF[] = {1,    1,     2,      4,       13,      50,     229,
                                  1238, 7614, 52706, 405581, 3432022, 31684445};
constexpr long long kFrozenC[] = {0,    1,    1,     3,      9,       34,      159,
                                  853, 5249, 36369, 279711, 2367212, 21854625};
constexpr long long kFrozenD[] = {0,    0,    1,     1,      4,       16,     70,
                                  385, 2365, 16337, 125870, 1064810, 9829820};
constexpr long long kFrozenE[] = {1,    1,    1,    2,     5,      16,     61,
                                  272, 1385, 7936, 50521, 353792, 2702765};

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng), den(rng));
}

Poly1 length_poly(const std::map<Composition, BigInt>& dist, int shift) {
    Poly1 out;
    for (const auto& [L, count] : dist)
        out = out + Poly1::monomial(L.length() + shift, Rat(count));
    return out;
}

// prod_{i=lo}^{hi} (1 - t^(dt) q^i) inside the capped ring
Poly2 poch(int tcap, int qcap, int dt, int lo, int hi) {
    Poly2 acc = Poly2::constant(tcap, qcap, Rat(1));
    for (int i = lo; i <= hi; ++i)
        acc = acc * (Poly2::constant(tcap, qcap, Rat(1)) -
                     Poly2::monomial(tcap, qcap, dt, i));
    return acc;
}

Poly2 joint_poly(int n, DescentKind kind, int tcap, int qcap) {
    const auto counts = joint_distribution(n, kind);
    Poly2 out(tcap, qcap);
    for (std::size_t k = 0; k < counts.size(); ++k)
        for (std::size_t m = 0; m < counts[k].size(); ++m)
            if (counts[k][m] != 0)
                out = out + Poly2::monomial(tcap, qcap, static_cast<int>(k),
                                            static_cast<int>(m),
                                            Rat(BigInt(counts[k][m])));
    return out;
}

std::vector<Rat> short_run_weights(int n_max) {
    std::vector<Rat> w(n_max + 1, Rat(0));
    if (n_max >= 1) w[1] = 1;
    if (n_max >= 2) w[2] = 1;
    return w;
}

// ---------------------------------------------------------------- oracle --

void oracle_checks(const Ctx& c, Checks& out) {
    {
        const int hi = c.clamp(9);
        const auto e = euler_numbers(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            if (BigInt(count_alternating(n)) != e[n] ||
                BigInt(count_reverse_alternating(n)) != e[n]) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        add(out, "zigzag-oracle", "zigzag-count", ok, detail);
    }
    {
        const auto e = euler_numbers(12);
        const auto s = named_series("sec_plus_tan", 12);
        bool ok = true;
        std::string detail = bounds(12);
        for (int n = 0; n <= 12 && ok; ++n) {
            if (s.egf_coeff(n) != Rat(e[n])) {
                ok = false;
                detail = "coefficient mismatch at n=" + std::to_string(n);
            }
        }
        add(out, "zigzag-egf", "zigzag-egf", ok, detail);
    }
    {
        const int hi = c.clamp(10);
        const auto fg = fg_recurrence(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const BigInt direct(count_valleys_even_peaks_odd(n));
            const BigInt via_runs(count_alt_runs_below(n, 3));
            if (direct != fg.f[n] || via_runs != fg.f[n]) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n) + ": table " +
                         str(fg.f[n]) + ", placement scan " + str(direct) +
                         ", run scan " + str(via_runs);
            }
        }
        add(out, "short-run-oracle", "valley-even-peak-odd", ok, detail);
    }
    {
        const int hi = c.clamp(9);
        const auto fg = fg_recurrence(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            if (BigInt(count_valleys_even_peaks_odd_final_ascent(n)) != fg.g[n]) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        add(out, "final-ascent-oracle", "final-ascent-refinement", ok, detail);
    }
    {
        const int hi = c.clamp(9);
        const auto cd = cd_tables(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            if (BigInt(count_short_runs_by_last(n, 1)) != cd.c[n] ||
                BigInt(count_short_runs_by_last(n, 2)) != cd.d[n]) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        add(out, "last-run-oracle", "last-run-refinement", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            for_each_permutation(n, [&](const Permutation& p) {
                if (!ok) return;
                const auto q = p.complement();
                if (q.complement() != p) {
                    ok = false;
                    detail = "complement not involutive at n=" + std::to_string(n);
                    return;
                }
                if (n >= 1) {
                    const auto sp = statistics(p);
                    const auto sq = statistics(q);
                    if (sp.des + sq.des != n - 1 || sp.altdes + sq.altdes != n - 1) {
                        ok = false;
                        detail = "descent complement identity fails at n=" +
                                 std::to_string(n);
                    }
                }
            });
        }
        add(out, "complement-symmetry", "complement-involution", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            for_each_permutation(n, [&](const Permutation& p) {
                if (!ok) return;
                const auto s = statistics(p);
                const long maj =
                    std::accumulate(s.descent_set.begin(), s.descent_set.end(), 0L);
                const long altmaj = std::accumulate(s.alt_descent_set.begin(),
                                                    s.alt_descent_set.end(), 0L);
                const auto runs = alternating_runs(p);
                std::vector<int> lens;
                std::vector<int> glued;
                for (const auto& r : runs) {
                    lens.push_back(static_cast<int>(r.size()));
                    glued.insert(glued.end(), r.begin(), r.end());
                }
                const bool run_ok =
                    (n == 0 || static_cast<int>(runs.size()) == s.altdes + 1) &&
                    glued == p.word() &&
                    Composition(lens) == alt_descent_composition(p);
                const auto dc = descent_composition(p);
                if (maj != s.maj || altmaj != s.altmaj ||
                    s.des != static_cast<int>(s.descent_set.size()) ||
                    s.altdes != static_cast<int>(s.alt_descent_set.size()) ||
                    !run_ok || dc.to_subset() != s.descent_set ||
                    Composition::from_subset(dc.to_subset(), n) != dc) {
                    ok = false;
                    detail = "statistic mismatch at n=" + std::to_string(n);
                }
            });
        }
        add(out, "statistics-consistency", "run-statistics", ok, detail);
    }
    {
        const int hi = c.clamp(8);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const auto dist = composition_distribution(n, DescentKind::plain);
            BigInt total = 0;
            for (const auto& L : compositions_of(n)) {
                const auto it = dist.find(L);
                const BigInt seen = it == dist.end() ? BigInt(0) : it->second;
                const BigInt formula = L.empty() ? BigInt(1) : descent_class_size(L);
                if (seen != formula) {
                    ok = false;
                    detail = "class " + L.to_string() + " of n=" + std::to_string(n) +
                             ": counted " + str(seen) + ", formula " + str(formula);
                    break;
                }
                total += seen;
            }
            if (ok && total != factorial(n)) {
                ok = false;
                detail = "classes of n=" + std::to_string(n) + " do not fill n!";
            }
        }
        add(out, "descent-class-oracle", "descent-class-size", ok, detail);
    }
    {
        const int hi = c.clamp(8);
        const auto e = euler_numbers(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const auto dist = composition_distribution(n, DescentKind::alternating);
            BigInt total = 0;
            for (const auto& L : compositions_of(n)) {
                const auto it = dist.find(L);
                const BigInt seen = it == dist.end() ? BigInt(0) : it->second;
                const BigInt formula =
                    L.empty() ? BigInt(1) : alt_descent_class_size(L);
                if (seen != formula) {
                    ok = false;
                    detail = "class " + L.to_string() + " of n=" + std::to_string(n) +
                             ": counted " + str(seen) + ", formula " + str(formula);
                    break;
                }
                total += seen;
            }
            if (ok && total != factorial(n)) {
                ok = false;
                detail = "classes of n=" + std::to_string(n) + " do not fill n!";
            }
            if (ok && n >= 1 &&
                alt_descent_class_size(Composition({n})) != e[n]) {
                ok = false;
                detail = "one-part class of n=" + std::to_string(n) +
                         " is not the zigzag count";
            }
        }
        add(out, "alt-descent-class-oracle", "alternating-descent-class-size", ok,
            detail);
    }
    {
        const int hi = c.clamp(8);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 1; n <= hi && ok; ++n) {
            for (const auto& L : compositions_of(n)) {
                BigInt plain = 0, alt = 0;
                for (const auto& K : L.coarsenings()) {
                    plain += descent_class_size(K);
                    alt += alt_descent_class_size(K);
                }
                if (plain != multinomial(L) || alt != euler_multinomial(L)) {
                    ok = false;
                    detail = "containment sum fails for " + L.to_string();
                    break;
                }
            }
        }
        add(out, "class-containment", "coarsening-containment", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        const auto polys = eulerian_polys(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const auto dist = composition_distribution(n, DescentKind::plain);
            const Poly1 expected =
                n == 0 ? Poly1(Rat(1)) : length_poly(dist, 0);
            if (polys[n] != expected) {
                ok = false;
                detail = "polynomial mismatch at n=" + std::to_string(n);
            }
            if (ok && polys[n].eval(Rat(1)) != Rat(factorial(n))) {
                ok = false;
                detail = "row sum is not n! at n=" + std::to_string(n);
            }
        }
        add(out, "descent-polynomial-oracle", "descent-polynomial", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        const auto polys = alt_eulerian_polys(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const auto dist = composition_distribution(n, DescentKind::alternating);
            const Poly1 expected =
                n == 0 ? Poly1(Rat(1)) : length_poly(dist, 0);
            if (polys[n] != expected) {
                ok = false;
                detail = "polynomial mismatch at n=" + std::to_string(n);
            }
            if (ok && polys[n].eval(Rat(1)) != Rat(factorial(n))) {
                ok = false;
                detail = "row sum is not n! at n=" + std::to_string(n);
            }
        }
        add(out, "alt-descent-polynomial-oracle", "alternating-descent-polynomial",
            ok, detail);
    }
}

// ----------------------------------------------------------- recurrences --

void recurrence_checks(const Ctx& c, Checks& out) {
    {
        const auto fg = fg_recurrence(12);
        bool ok = true;
        std::string detail = bounds(12);
        for (int n = 0; n <= 12 && ok; ++n) {
            if (fg.f[n] != BigInt(kFrozenF[n])) {
                ok = false;
                detail = "f(" + std::to_string(n) + ") = " + str(fg.f[n]) +
                         ", expected " + std::to_string(kFrozenF[n]);
            }
        }
        add(out, "f-frozen-table", "short-run-sequence", ok, detail);
    }
    {
        const auto e = euler_numbers(12);
        bool ok = true;
        std::string detail = bounds(12);
        for (int n = 0; n <= 12 && ok; ++n) {
            if (e[n] != BigInt(kFrozenE[n])) {
                ok = false;
                detail = "zigzag(" + std::to_string(n) + ") = " + str(e[n]);
            }
        }
        add(out, "zigzag-frozen-table", "zigzag-sequence", ok, detail);
    }
    {
        const auto cd = cd_tables(12);
        bool ok = cd.trig_matches_quotient;
        std::string detail = bounds(12);
        if (!ok) detail = "trigonometric and quotient series disagree";
        for (int n = 0; n <= 12 && ok; ++n) {
            if (cd.c[n] != BigInt(kFrozenC[n]) || cd.d[n] != BigInt(kFrozenD[n])) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        add(out, "cd-frozen-table", "last-run-sequences", ok, detail);
    }
    {
        const int hi = 20;
        const auto fg = fg_recurrence(hi);
        const auto sp = split_recurrence(hi);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const bool odd = n % 2 == 1;
            if (sp.f1[n] + sp.f2[n] != fg.f[n] || sp.g1[n] + sp.g2[n] != fg.g[n] ||
                sp.f1[n] != (odd ? fg.f[n] : BigInt(0)) ||
                sp.g1[n] != (odd ? fg.g[n] : BigInt(0))) {
                ok = false;
                detail = "split disagrees at n=" + std::to_string(n);
            }
        }
        add(out, "parity-split", "parity-split-recurrence", ok, detail);
    }
    {
        const int hi = 20;
        const auto fg = fg_recurrence(hi);
        const auto sp = split_recurrence(hi);
        const auto f1 = named_series("F1", hi);
        const auto f2 = named_series("F2", hi);
        const auto g1 = named_series("G1", hi);
        const auto g2 = named_series("G2", hi);
        const auto f = named_series("F_closed", hi);
        const auto cq = named_series("C_quotient", hi);
        const auto dq = named_series("D_quotient", hi);
        bool ok = f == f1 + f2;
        std::string detail = bounds(hi);
        if (!ok) detail = "parity components do not sum to the closed form";
        if (ok && !(cq + dq == f - RatSeries::one(hi))) {
            ok = false;
            detail = "last-run components do not sum to the closed form";
        }
        for (int n = 0; n <= hi && ok; ++n) {
            if (f1.egf_coeff(n) != Rat(sp.f1[n]) || f2.egf_coeff(n) != Rat(sp.f2[n]) ||
                g1.egf_coeff(n) != Rat(sp.g1[n]) || g2.egf_coeff(n) != Rat(sp.g2[n]) ||
                f.egf_coeff(n) != Rat(fg.f[n]) ||
                (g1 + g2).egf_coeff(n) != Rat(fg.g[n])) {
                ok = false;
                detail = "series and tables disagree at n=" + std::to_string(n);
            }
        }
        add(out, "split-series-alignment", "parity-split-series", ok, detail);
    }
    {
        const auto rep = ode_residuals(25);
        std::string detail = "order " + std::to_string(rep.order);
        if (!rep.ok) {
            detail = "failing equations:";
            for (const auto& fxi : rep.failures) detail += " [" + fxi + "]";
        }
        add(out, "ode-system", "first-order-system", rep.ok, detail);
    }
    {
        const int hi = 12;
        const int oracle_hi = c.clamp(10);
        const auto fg = fg_recurrence(hi);
        const auto sp = split_recurrence(hi);
        const auto closed = named_series("F_closed", hi);
        const auto recip = named_series("F_reciprocal", hi);
        const auto pair = run_weight_identity<Rat>(short_run_weights(hi), hi);
        const auto ribbon = pair.rhs.phi_hat();
        bool ok = true;
        std::string detail = bounds(hi) + ", oracle " + bounds(oracle_hi);
        for (int n = 0; n <= hi && ok; ++n) {
            const Rat expected(fg.f[n]);
            if (Rat(sp.f1[n] + sp.f2[n]) != expected ||
                closed.egf_coeff(n) != expected || recip.egf_coeff(n) != expected ||
                ribbon.egf_coeff(n) != expected) {
                ok = false;
                detail = "routes disagree at n=" + std::to_string(n);
            }
            if (ok && n <= oracle_hi &&
                BigInt(count_valleys_even_peaks_odd(n)) != fg.f[n]) {
                ok = false;
                detail = "enumeration disagrees at n=" + std::to_string(n);
            }
        }
        add(out, "short-run-routes", "short-run-count", ok, detail);
    }
    {
        const int hi = 12;
        const auto fg = fg_recurrence(hi);
        const auto cd = cd_tables(hi);
        std::vector<Rat> w = short_run_weights(hi);
        std::vector<Rat> v1(hi + 1, Rat(0)), v2(hi + 1, Rat(0));
        v1[1] = 1;
        v2[2] = 1;
        const auto c_pair = last_run_weight_identity<Rat>(w, v1, hi);
        const auto d_pair = last_run_weight_identity<Rat>(w, v2, hi);
        const auto c_img = c_pair.rhs.phi_hat();
        const auto d_img = d_pair.rhs.phi_hat();
        bool ok = cd.trig_matches_quotient;
        std::string detail = bounds(hi);
        if (!ok) detail = "trigonometric route disagrees";
        for (int n = 0; n <= hi && ok; ++n) {
            if (c_img.egf_coeff(n) != Rat(cd.c[n]) ||
                d_img.egf_coeff(n) != Rat(cd.d[n])) {
                ok = false;
                detail = "ribbon route disagrees at n=" + std::to_string(n);
            }
            if (ok && n >= 1) {
                const BigInt& expected = n % 2 == 1 ? cd.c[n] : cd.d[n];
                if (fg.g[n] != expected) {
                    ok = false;
                    detail = "final-ascent parity fails at n=" + std::to_string(n);
                }
            }
            if (ok && n >= 1 && cd.c[n] + cd.d[n] != fg.f[n]) {
                ok = false;
                detail = "last-run refinement does not add up at n=" +
                         std::to_string(n);
            }
        }
        add(out, "last-run-routes", "last-run-count", ok, detail);
    }
}

// ----------------------------------------------------- series identities --

void series_checks(const Ctx& c, Checks& out) {
    {
        const auto e = named_series("sec_plus_tan", 30);
        const bool ok = e.multisect(3, 0) - e.multisect(3, 1) ==
                        named_series("euler_trisection_num", 30);
        add(out, "trisection-split", "index-trisection", ok, "order 30");
    }
    {
        const bool ok = named_series("F_closed", 30) == named_series("F_reciprocal", 30);
        add(out, "closed-form-match", "reciprocal-form", ok, "order 30");
    }
    {
        const bool ok = named_series("F_closed", 25) ==
                        named_series("F1", 25) + named_series("F2", 25);
        add(out, "parity-sum", "parity-sum", ok, "order 25");
    }
    {
        const bool ok =
            named_series("C_quotient", 25) + named_series("D_quotient", 25) ==
            named_series("F_closed", 25) - RatSeries::one(25);
        add(out, "last-run-sum", "last-run-sum", ok, "order 25");
    }
    {
        const bool ok = named_series("C_quotient", 25) == named_series("C_trig", 25) &&
                        named_series("D_quotient", 25) == named_series("D_trig", 25);
        add(out, "trig-quotient-match", "trigonometric-forms", ok, "order 25");
    }
    {
        const auto e = named_series("sec_plus_tan", 24);
        const bool ok =
            e.multisect(3, 0) + e.multisect(3, 1) + e.multisect(3, 2) == e &&
            e.multisect(2, 0) + e.multisect(2, 1) == e;
        add(out, "multisection-partition", "multisection", ok, "order 24");
    }
    {
        bool ok = true;
        std::string detail = "order 20";
        for (const char* name : {"sec_plus_tan", "F_closed", "cos"}) {
            const auto s = named_series(name, 20);
            if (!(s * s.reciprocal() == RatSeries::one(20))) {
                ok = false;
                detail = std::string("inverse fails for ") + name;
            }
        }
        add(out, "series-inverse", "series-inverse", ok, detail);
    }
    {
        std::mt19937_64 rng(c.opts.seed);
        bool ok = true;
        std::string detail = "3 random triples, order 8";
        for (int trial = 0; trial < 3 && ok; ++trial) {
            RatSeries a(8), b(8), d(8);
            for (int n = 0; n <= 8; ++n) {
                a.set_coeff(n, random_rat(rng));
                b.set_coeff(n, random_rat(rng));
                d.set_coeff(n, random_rat(rng));
            }
            if (!(a * (b + d) == a * b + a * d) || !((a * b) * d == a * (b * d)) ||
                !(a * b == b * a)) {
                ok = false;
                detail = "ring law fails on trial " + std::to_string(trial);
            }
            RatSeries u(8);
            u.set_coeff(0, Rat(1));
            for (int n = 1; n <= 8; ++n) u.set_coeff(n, a.coeff(n));
            if (ok && !(u * u.reciprocal() == RatSeries::one(8))) {
                ok = false;
                detail = "inverse fails on trial " + std::to_string(trial);
            }
        }
        add(out, "series-ring-laws", "ring-axioms", ok, detail);
    }
}

// ------------------------------------------------------------------ ncsf --

NcsfElement<Rat> random_element(std::mt19937_64& rng, int degree) {
    NcsfElement<Rat> e(NcsfBasis::h, degree);
    for (int n = 0; n <= degree; ++n)
        for (const auto& L : compositions_of(n))
            e.add_term(L, random_rat(rng));
    return e;
}

void ncsf_checks(const Ctx& c, Checks& out) {
    {
        std::mt19937_64 rng(c.opts.seed);
        bool ok = true;
        std::string detail = "3 random elements, degree 6";
        for (int trial = 0; trial < 3 && ok; ++trial) {
            const auto e = random_element(rng, 6);
            if (!(e.to_basis(NcsfBasis::r).to_basis(NcsfBasis::h).terms() ==
                  e.terms())) {
                ok = false;
                detail = "round trip fails on trial " + std::to_string(trial);
            }
        }
        add(out, "basis-roundtrip", "basis-change", ok, detail);
    }
    {
        bool ok = true;
        std::string detail = bounds(6);
        for (int n = 0; n <= 6 && ok; ++n) {
            for (const auto& L : compositions_of(n)) {
                NcsfElement<Rat> h(NcsfBasis::h, 6);
                h.add_term(L, Rat(1));
                const auto r = h.to_basis(NcsfBasis::r);
                const auto co = L.coarsenings();
                if (r.terms().size() != co.size()) {
                    ok = false;
                    detail = "support of " + L.to_string() + " is wrong";
                    break;
                }
                for (const auto& K : co) {
                    if (r.coeff(K) != Rat(1) || !K.coarsens(L)) {
                        ok = false;
                        detail = "transition at " + L.to_string() + " -> " +
                                 K.to_string();
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        add(out, "basis-triangularity", "coarsening-transition", ok, detail);
    }
    {
        std::mt19937_64 rng(c.opts.seed + 1);
        bool ok = true;
        std::string detail = "3 random pairs, degree 5";
        for (int trial = 0; trial < 3 && ok; ++trial) {
            const auto a = random_element(rng, 5);
            const auto b = random_element(rng, 5);
            const auto ab = a * b;
            if (!(ab.phi() == a.phi() * b.phi()) ||
                !(ab.phi_hat() == a.phi_hat() * b.phi_hat())) {
                ok = false;
                detail = "specialization is not multiplicative on trial " +
                         std::to_string(trial);
            }
        }
        add(out, "specialization-homomorphism", "algebra-map", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        bool ok = true;
        std::string detail = bounds(hi);
        for (int n = 1; n <= hi && ok; ++n) {
            for (const auto& L : compositions_of(n)) {
                NcsfElement<Rat> r(NcsfBasis::r, hi);
                r.add_term(L, Rat(1));
                const Rat plain = r.phi().egf_coeff(n);
                const Rat alt = r.phi_hat().egf_coeff(n);
                if (plain != Rat(descent_class_size(L)) ||
                    alt != Rat(alt_descent_class_size(L))) {
                    ok = false;
                    detail = "image of class " + L.to_string() + " is wrong";
                    break;
                }
            }
        }
        add(out, "ribbon-image", "ribbon-class-size", ok, detail);
    }
    {
        std::mt19937_64 rng(c.opts.seed + 2);
        auto u = random_element(rng, 6);
        u.add_term(Composition{}, Rat(1) - u.coeff(Composition{}));
        const auto inv = u.invert();
        const auto unit = NcsfElement<Rat>::one(NcsfBasis::h, 6);
        const bool ok = (u * inv == unit) && (inv * u == unit);
        add(out, "inverse-two-sided", "graded-inverse", ok, "degree 6");
    }
    {
        NcsfElement<Rat> base(NcsfBasis::h, 8);
        base.add_term(Composition{}, Rat(1));
        base.add_term(Composition({1}), Rat(-1));
        NcsfElement<Rat> geo(NcsfBasis::h, 8);
        for (int n = 0; n <= 8; ++n)
            geo.add_term(Composition(std::vector<int>(n, 1)), Rat(1));
        const bool ok = base.invert() == geo;
        add(out, "geometric-inverse", "geometric-series", ok, "degree 8");
    }
    {
        std::mt19937_64 rng(c.opts.seed + 3);
        bool ok = true;
        std::string detail = "5 random weight vectors, degree 10";
        for (int trial = 0; trial < 5 && ok; ++trial) {
            std::vector<Rat> w(11);
            for (auto& x : w) x = random_rat(rng);
            if (!run_weight_identity<Rat>(w, 10).equal()) {
                ok = false;
                detail = "identity fails on trial " + std::to_string(trial);
            }
        }
        add(out, "runs-random-weights", "runs-theorem", ok, detail);
    }
    {
        std::mt19937_64 rng(c.opts.seed + 4);
        bool ok = true;
        std::string detail = "5 random weight vectors, degree 10";
        for (int trial = 0; trial < 5 && ok; ++trial) {
            std::vector<Rat> w(11), v(11);
            for (auto& x : w) x = random_rat(rng);
            for (auto& x : v) x = random_rat(rng);
            if (!last_run_weight_identity<Rat>(w, v, 10).equal()) {
                ok = false;
                detail = "identity fails on trial " + std::to_string(trial);
            }
        }
        add(out, "last-run-random-weights", "last-run-theorem", ok, detail);
    }
    {
        const int hi = 12;
        const auto fg = fg_recurrence(hi);
        const auto pair = run_weight_identity<Rat>(short_run_weights(hi), hi);
        bool ok = pair.equal();
        std::string detail = "degree 12";
        if (!ok) detail = "identity fails";
        const auto img = pair.rhs.phi_hat();
        for (int n = 0; n <= hi && ok; ++n) {
            if (img.egf_coeff(n) != Rat(fg.f[n])) {
                ok = false;
                detail = "image disagrees with the table at n=" + std::to_string(n);
            }
        }
        add(out, "short-run-specialization", "runs-theorem-short", ok, detail);
    }
    {
        const int hi = 12;
        const int oracle_hi = c.clamp(8);
        const auto e = euler_numbers(hi);
        bool ok = true;
        std::string detail = "m in {2,3}, degree 12, oracle " + bounds(oracle_hi);
        for (int m = 2; m <= 3 && ok; ++m) {
            std::vector<Rat> w(hi + 1, Rat(0));
            w[m] = 1;
            const auto pair = run_weight_identity<Rat>(w, hi);
            if (!pair.equal()) {
                ok = false;
                detail = "identity fails for m=" + std::to_string(m);
                break;
            }
            RatSeries alternating_blocks(hi);
            for (int k = 0; m * k <= hi; ++k)
                alternating_blocks.set_coeff(
                    m * k, Rat(k % 2 == 0 ? e[m * k] : -e[m * k]) /
                               Rat(factorial(m * k)));
            const auto img = pair.rhs.phi_hat();
            if (!(img == alternating_blocks.reciprocal())) {
                ok = false;
                detail = "image is not the signed block reciprocal for m=" +
                         std::to_string(m);
                break;
            }
            for (int n = 0; n <= oracle_hi; ++n) {
                const Rat expected =
                    n % m == 0 ? Rat(BigInt(count_alt_runs_exactly(n, m))) : Rat(0);
                if (n >= 1 && img.egf_coeff(n) != expected) {
                    ok = false;
                    detail = "enumeration disagrees at n=" + std::to_string(n) +
                             ", m=" + std::to_string(m);
                    break;
                }
            }
        }
        add(out, "equal-parts-specialization", "runs-theorem-equal-parts", ok,
            detail);
    }
    {
        const int hi = 12;
        std::vector<Rat> w = short_run_weights(hi);
        std::vector<Rat> v1(hi + 1, Rat(0)), v2(hi + 1, Rat(0));
        v1[1] = 1;
        v2[2] = 1;
        const auto cp = last_run_weight_identity<Rat>(w, v1, hi);
        const auto dp = last_run_weight_identity<Rat>(w, v2, hi);
        bool ok = cp.equal() && dp.equal();
        std::string detail = "degree 12";
        if (!ok) detail = "identity fails";
        if (ok && !(cp.rhs.phi_hat() == named_series("C_quotient", hi) &&
                    dp.rhs.phi_hat() == named_series("D_quotient", hi))) {
            ok = false;
            detail = "images disagree with the quotient series";
        }
        add(out, "last-run-cd-specialization", "last-run-theorem-cd", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        std::vector<Poly1> w(hi + 1, Poly1(Rat(0)));
        for (int n = 1; n <= hi; ++n) w[n] = Poly1::monomial(1);
        const auto pair = run_weight_identity<Poly1>(w, hi, Poly1());
        bool ok = pair.equal();
        std::string detail = bounds(hi);
        if (!ok) detail = "identity fails";
        const auto plain = pair.rhs.phi();
        const auto alt = pair.rhs.phi_hat();
        const auto ep = eulerian_polys(hi);
        const auto ap = alt_eulerian_polys(hi);
        for (int n = 1; n <= hi && ok; ++n) {
            if (plain.egf_coeff(n) != ep[n] || alt.egf_coeff(n) != ap[n]) {
                ok = false;
                detail = "run-count polynomial disagrees at n=" + std::to_string(n);
            }
        }
        add(out, "run-count-specialization", "runs-theorem-counting", ok, detail);
    }
}

// -------------------------------------------------------------------- qt --

void qt_checks(const Ctx& c, Checks& out) {
    constexpr int kT = 7, kQ = 12;
    {
        const int hi = c.clamp(5);
        const auto sum = sec_tan_qproduct_sum(hi, kT, kQ);
        bool ok = true;
        std::string detail = bounds(hi) + ", t-degree 7, q-degree 12";
        for (int n = 0; n <= hi && ok; ++n) {
            const Poly2 lhs = sum.egf_coeff(n) * poch(kT, kQ, 1, 0, n);
            if (!(lhs == joint_poly(n, DescentKind::alternating, kT, kQ))) {
                ok = false;
                detail = "joint distribution mismatch at n=" + std::to_string(n);
            }
        }
        add(out, "joint-distribution", "descent-major-joint", ok, detail);
    }
    {
        const int hi = c.clamp(5);
        const auto prod = sec_tan_qproduct(hi, kQ);
        bool ok = true;
        std::string detail = bounds(hi) + ", q-degree 12";
        for (int n = 0; n <= hi && ok; ++n) {
            const Poly2 lhs = prod.egf_coeff(n) * poch(0, kQ, 0, 1, n);
            Poly2 rhs(0, kQ);
            const auto counts = joint_distribution(n, DescentKind::alternating);
            for (std::size_t k = 0; k < counts.size(); ++k)
                for (std::size_t m = 0; m < counts[k].size(); ++m)
                    if (counts[k][m] != 0)
                        rhs = rhs + Poly2::monomial(0, kQ, 0, static_cast<int>(m),
                                                    Rat(BigInt(counts[k][m])));
            if (!(lhs == rhs)) {
                ok = false;
                detail = "major index distribution mismatch at n=" +
                         std::to_string(n);
            }
        }
        add(out, "major-index-product", "major-index-product", ok, detail);
    }
    {
        const int hi = c.clamp(7);
        const auto sum = sec_tan_power_sum(hi, kT);
        const auto ap = alt_eulerian_polys(hi);
        const Poly1 one_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});
        bool ok = true;
        std::string detail = bounds(hi) + ", t-degree 7";
        for (int n = 0; n <= hi && ok; ++n) {
            const Poly1 prod = sum.egf_coeff(n) * one_minus_t.pow(n + 1);
            Poly1 expected;
            const auto dist = composition_distribution(n, DescentKind::alternating);
            for (const auto& [L, count] : dist)
                expected = expected + Poly1::monomial(L.descents(), Rat(count));
            for (int i = 0; i <= kT; ++i) {
                if (prod.coeff(i) != expected.coeff(i)) {
                    ok = false;
                    detail = "descent count mismatch at n=" + std::to_string(n);
                    break;
                }
            }
            if (ok && n >= 1 && !(Poly1::monomial(1) * expected == ap[n])) {
                ok = false;
                detail = "descent polynomial shift fails at n=" + std::to_string(n);
            }
        }
        add(out, "descent-count-specialization", "joint-distribution-at-q-one", ok,
            detail);
    }
    {
        const int hi = 5;
        const auto prod = qmaj_left_product(hi, 0, kQ).to_basis(NcsfBasis::r);
        bool ok = true;
        std::string detail = bounds(hi) + ", q-degree 12";
        for (int n = 0; n <= hi && ok; ++n) {
            const Poly2 clear = poch(0, kQ, 0, 1, n);
            for (const auto& L : compositions_of(n)) {
                const Poly2 lhs = prod.coeff(L) * clear;
                const Poly2 rhs = Poly2::monomial(
                    0, kQ, 0, static_cast<int>(L.major_index()));
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = "ribbon coefficient of " + L.to_string() + " is wrong";
                    break;
                }
            }
        }
        add(out, "major-index-ribbon", "major-index-ribbon", ok, detail);
    }
    {
        const int hi = 5;
        const auto sum = t_weighted_qmaj_products(hi, kT, kQ).to_basis(NcsfBasis::r);
        bool ok = true;
        std::string detail = bounds(hi) + ", t-degree 7, q-degree 12";
        for (int n = 0; n <= hi && ok; ++n) {
            const Poly2 clear = poch(kT, kQ, 1, 0, n);
            for (const auto& L : compositions_of(n)) {
                const Poly2 lhs = sum.coeff(L) * clear;
                const Poly2 rhs =
                    Poly2::monomial(kT, kQ, L.descents(),
                                    static_cast<int>(L.major_index()));
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = "ribbon coefficient of " + L.to_string() + " is wrong";
                    break;
                }
            }
        }
        add(out, "descent-major-ribbon", "descent-major-ribbon", ok, detail);
    }
    {
        const int hi = 5;
        const auto lhs = t_weighted_qmaj_products(hi, kT, kQ).phi_hat();
        const auto rhs = sec_tan_qproduct_sum(hi, kT, kQ);
        const bool ok = lhs == rhs;
        add(out, "specialization-bridge", "zigzag-bridge", ok,
            bounds(hi) + ", t-degree 7, q-degree 12");
    }
    {
        const auto p =
            h_series_at_qpow(3, 0, 3, 1) * h_series_at_qpow(3, 0, 3, 0);
        const Poly2 one_c = Poly2::constant(0, 3, Rat(1));
        const bool ok =
            p.coeff(Composition({3})) == one_c + Poly2::monomial(0, 3, 0, 3) &&
            p.coeff(Composition({1, 2})) == Poly2::monomial(0, 3, 0, 1) &&
            p.coeff(Composition({2, 1})) == Poly2::monomial(0, 3, 0, 2) &&
            p.coeff(Composition({1, 1, 1})) == Poly2(0, 3);
        add(out, "product-order-pin", "leftward-product", ok,
            "two factors, degree 3");
    }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"oracle", "recurrences", "series-identities", "ncsf", "qt", "all"};
}

std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyOptions& opts) {
    if (opts.n_max < 0) throw std::domain_error("negative bound");
    const Ctx c{opts};
    Checks out;
    bool matched = false;
    const bool all = suite == "all";
    if (all || suite == "oracle") {
        oracle_checks(c, out);
        matched = true;
    }
    if (all || suite == "recurrences") {
        recurrence_checks(c, out);
        matched = true;
    }
    if (all || suite == "series-identities") {
        series_checks(c, out);
        matched = true;
    }
    if (all || suite == "ncsf") {
        ncsf_checks(c, out);
        matched = true;
    }
    if (all || suite == "qt") {
        qt_checks(c, out);
        matched = true;
    }
    if (!matched) throw std::domain_error("unknown verify suite: " + suite);
    return out;
}

}  // namespace altdes
