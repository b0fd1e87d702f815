// Acceptance gate: every release criterion in one binary, one line each.
// Exit status is nonzero as soon as any criterion fails.

#include "core/asymptotics.hpp"
#include "core/composition.hpp"
#include "core/counts.hpp"
#include "core/ncsf.hpp"
#include "core/numbers.hpp"
#include "core/oracle.hpp"
#include "core/permutation.hpp"
#include "core/poly.hpp"
#include "core/recurrences.hpp"
#include "core/series_catalog.hpp"
#include "core/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace altdes;

namespace {

int g_failures = 0;

// empty string = pass; anything else is the first discrepancy found
using Body = std::string (*)();

void run(int id, const char* label, double budget_seconds, Body body) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    try {
        note = body();
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (note.empty() && budget_seconds > 0 && secs > budget_seconds)
        note = "exceeded " + std::to_string(budget_seconds) + "s budget";
    if (!note.empty()) ++g_failures;
    std::printf("[%s] criterion %-2d (%6.2fs): %s%s%s\n",
                note.empty() ? "PASS" : "FAIL", id, secs, label,
                note.empty() ? "" : " - ", note.c_str());
    std::fflush(stdout);
}

std::string selected_checks(const std::string& suite,
                            const std::vector<std::string>& names) {
    const auto results = verify_suite(suite, VerifyOptions{});
    std::size_t found = 0;
    for (const auto& r : results) {
        if (std::find(names.begin(), names.end(), r.name) == names.end()) continue;
        ++found;
        if (!r.pass) return r.name + ": " + r.detail;
    }
    if (found != names.size()) return "check set incomplete in suite " + suite;
    return {};
}

std::vector<Rat> short_run_weights(int n_max) {
    std::vector<Rat> w(n_max + 1, Rat(0));
    if (n_max >= 1) w[1] = 1;
    if (n_max >= 2) w[2] = 1;
    return w;
}

std::string criterion_short_run_routes() {
    const int n_hi = 12, oracle_hi = 10;
    const auto fg = fg_recurrence(n_hi);
    const auto sp = split_recurrence(n_hi);
    const auto closed = named_series("F_closed", n_hi);
    const auto recip = named_series("F_reciprocal", n_hi);
    const auto pr = run_weight_identity<Rat>(short_run_weights(n_hi), n_hi);
    if (!pr.equal()) return "run-weight identity sides differ";
    const auto ribbon = pr.lhs.phi_hat();
    for (int n = 0; n <= n_hi; ++n) {
        const BigInt f = fg.f[n];
        if (sp.f1[n] + sp.f2[n] != f) return "parity split differs at n=" + std::to_string(n);
        if (rat_to_bigint(closed.egf_coeff(n)) != f)
            return "closed form differs at n=" + std::to_string(n);
        if (rat_to_bigint(recip.egf_coeff(n)) != f)
            return "reciprocal form differs at n=" + std::to_string(n);
        if (rat_to_bigint(ribbon.egf_coeff(n)) != f)
            return "ribbon image differs at n=" + std::to_string(n);
    }
    for (int n = 0; n <= oracle_hi; ++n)
        if (BigInt(count_valleys_even_peaks_odd(n)) != fg.f[n])
            return "oracle differs at n=" + std::to_string(n);
    return {};
}

std::string criterion_last_run_routes() {
    const int n_hi = 12, oracle_hi = 9;
    const auto fg = fg_recurrence(n_hi);
    const auto cd = cd_tables(n_hi);
    if (!cd.trig_matches_quotient) return "trigonometric forms differ from quotients";

    const auto w = short_run_weights(n_hi);
    std::vector<Rat> v1(n_hi + 1, Rat(0)), v2(n_hi + 1, Rat(0));
    v1[1] = 1;
    v2[2] = 1;
    const auto pc = last_run_weight_identity<Rat>(w, v1, n_hi);
    const auto pd = last_run_weight_identity<Rat>(w, v2, n_hi);
    if (!pc.equal() || !pd.equal()) return "last-run identity sides differ";
    const auto c_series = pc.lhs.phi_hat();
    const auto d_series = pd.lhs.phi_hat();

    for (int n = 0; n <= n_hi; ++n) {
        if (rat_to_bigint(c_series.egf_coeff(n)) != cd.c[n])
            return "ribbon route for c differs at n=" + std::to_string(n);
        if (rat_to_bigint(d_series.egf_coeff(n)) != cd.d[n])
            return "ribbon route for d differs at n=" + std::to_string(n);
        if (n >= 1 && cd.c[n] + cd.d[n] != fg.f[n])
            return "c+d misses f at n=" + std::to_string(n);
        if (n >= 1 && fg.g[n] != (n % 2 == 1 ? cd.c[n] : cd.d[n]))
            return "final-ascent parity fails at n=" + std::to_string(n);
    }
    for (int n = 0; n <= oracle_hi; ++n) {
        if (BigInt(count_short_runs_by_last(n, 1)) != cd.c[n])
            return "oracle differs from c at n=" + std::to_string(n);
        if (BigInt(count_short_runs_by_last(n, 2)) != cd.d[n])
            return "oracle differs from d at n=" + std::to_string(n);
    }
    return {};
}

std::string criterion_ode() {
    const auto rep = ode_residuals(25);
    if (!rep.ok) return rep.failures.empty() ? "residual found" : rep.failures.front();
    return {};
}

std::string criterion_series_identities() {
    const auto e = named_series("sec_plus_tan", 30);
    if (!(e.multisect(3, 0) - e.multisect(3, 1) ==
          named_series("euler_trisection_num", 30)))
        return "index trisection fails at order 30";
    if (!(named_series("F_closed", 30) == named_series("F_reciprocal", 30)))
        return "closed and reciprocal forms differ at order 30";
    return {};
}

std::string criterion_class_sizes() {
    for (int n = 1; n <= 8; ++n) {
        const auto plain = composition_distribution(n, DescentKind::plain);
        const auto alt = composition_distribution(n, DescentKind::alternating);
        for (const auto& L : compositions_of(n)) {
            const auto pit = plain.find(L);
            const BigInt pc = pit == plain.end() ? BigInt(0) : pit->second;
            if (pc != descent_class_size(L))
                return "descent class " + L.to_string() + " miscounted";
            const auto ait = alt.find(L);
            const BigInt ac = ait == alt.end() ? BigInt(0) : ait->second;
            if (ac != alt_descent_class_size(L))
                return "alternating class " + L.to_string() + " miscounted";

            BigInt plain_sum = 0, alt_sum = 0;
            for (const auto& K : L.coarsenings()) {
                plain_sum += descent_class_size(K);
                alt_sum += alt_descent_class_size(K);
            }
            if (plain_sum != multinomial(L))
                return "containment fails at " + L.to_string();
            if (alt_sum != euler_multinomial(L))
                return "alternating containment fails at " + L.to_string();
        }
    }
    return {};
}

std::string criterion_weight_theorems() {
    return selected_checks("ncsf", {"runs-random-weights", "last-run-random-weights",
                                    "short-run-specialization",
                                    "equal-parts-specialization",
                                    "run-count-specialization"});
}

std::string criterion_descent_polynomials() {
    const auto a = eulerian_polys(7);
    const auto b = alt_eulerian_polys(7);
    if (!(a[0] == Poly1(Rat(1))) || !(b[0] == Poly1(Rat(1)))) return "index 0 is not 1";
    for (int n = 1; n <= 7; ++n) {
        for (const auto kind : {DescentKind::plain, DescentKind::alternating}) {
            const auto counts = joint_distribution(n, kind);
            Poly1 poly;
            for (std::size_t k = 0; k < counts.size(); ++k) {
                BigInt row = 0;
                for (const auto m : counts[k]) row += m;
                poly = poly + Poly1::monomial(static_cast<int>(k) + 1, Rat(row));
            }
            const Poly1& expected = kind == DescentKind::plain ? a[n] : b[n];
            if (!(poly == expected))
                return std::string(kind == DescentKind::plain ? "plain" : "alternating") +
                       " polynomial differs at n=" + std::to_string(n);
        }
    }
    return {};
}

std::string criterion_qt_identities() {
    return selected_checks("qt", {"joint-distribution", "major-index-product",
                                  "descent-count-specialization", "major-index-ribbon",
                                  "descent-major-ribbon", "specialization-bridge"});
}

std::string criterion_asymptotics() {
    constexpr long double kAlpha = 1.299828316221154957399L;
    constexpr long double kBeta = 0.769332370683528279388L;
    constexpr long double kGamma = 3.279075713702353378149L;
    constexpr long double kDelta = 0.304963985985829999720L;
    constexpr long double kSecRe = -2.058295120929813019625L;
    constexpr long double kSecIm = 2.552598427357723766306L;

    const auto rep = locate_zeros(1e-10);
    if (std::fabs(rep.alpha - kAlpha) > 1e-12L) return "alpha digits drifted";
    if (std::fabs(rep.beta - kBeta) > 1e-12L) return "beta digits drifted";
    if (std::fabs(rep.gamma - kGamma) > 1e-12L) return "gamma digits drifted";
    if (std::fabs(rep.delta - kDelta) > 1e-12L) return "delta digits drifted";
    if (std::fabs(rep.secondary.real() - kSecRe) > 1e-10L ||
        std::fabs(rep.secondary.imag() - kSecIm) > 1e-10L)
        return "secondary zero drifted";
    if (std::fabs(rep.u_prime_closed + 0.5L) > 1e-6L)
        return "closed-form derivative misses -1/2";
    if (std::fabs(rep.u_prime_diff + 0.5L) > 1e-6L)
        return "difference-quotient derivative misses -1/2";
    if (rep.zeros_inside_gamma != 1) return "winding count is not 1";

    const auto table = error_table(40, 1e-10);
    if (table.rows.size() != 41) return "table is short";
    for (const auto& row : table.rows)
        if (row.n >= 5 && !(row.ratio <= 10.0L))
            return "error ratio diverges at n=" + std::to_string(row.n);
    if (!(table.max_ratio <= 10.0L) || !(table.last_ratio <= 10.0L))
        return "error ratio exceeds 10";
    return {};
}

std::string criterion_structural() {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& L : compositions_of(n)) {
            if (!(Composition::from_subset(L.to_subset(), n) == L))
                return "subset roundtrip fails at " + L.to_string();
            if (!L.empty()) {
                const auto cs = L.coarsenings();
                if (cs.size() != (std::size_t{1} << (L.length() - 1)))
                    return "coarsening count wrong at " + L.to_string();
                for (const auto& K : cs)
                    if (!K.coarsens(L)) return "coarsening order broken at " + L.to_string();
            }
        }
    }

    for (int n = 0; n <= 6; ++n) {
        for (const auto& L : compositions_of(n)) {
            NcsfElement<Rat> r(NcsfBasis::r, 6);
            r.add_term(L, Rat(1));
            if (!(r.to_basis(NcsfBasis::h).to_basis(NcsfBasis::r).terms() == r.terms()))
                return "basis roundtrip fails at " + L.to_string();
        }
        for_each_permutation(n, [](const Permutation& p) {
            const auto st = statistics(p);
            if (!(p.complement().complement() == p))
                throw std::runtime_error("complement is not an involution");
            if (p.size() > 0) {
                if (alt_descent_composition(p).to_subset() != st.alt_descent_set)
                    throw std::runtime_error("alternating descent set mismatch");
                if (descent_composition(p).major_index() != st.maj)
                    throw std::runtime_error("major index mismatch");
            }
            const auto sc = statistics(p.complement());
            if (sc.valleys != st.peaks)
                throw std::runtime_error("complement does not swap peaks and valleys");
        });
    }

    auto e = NcsfElement<Rat>::one(NcsfBasis::h, 6);
    e.add_term(Composition(std::vector<int>{1}), Rat(1));
    e.add_term(Composition(std::vector<int>{2}), Rat(-3));
    if (!(e.invert().invert() == e)) return "graded inverse is not involutive";
    if (!(e * e.invert() == NcsfElement<Rat>::one(NcsfBasis::h, 6)))
        return "graded inverse fails on the right";

    const auto f = named_series("F_closed", 15);
    if (!(f.reciprocal().reciprocal() == f)) return "series reciprocal roundtrip fails";
    return {};
}

}  // namespace

int main() {
    run(1, "short-run count agrees across six routes (n <= 12)", 60.0,
        criterion_short_run_routes);
    run(2, "last-run refinement agrees across routes and the oracle", 0,
        criterion_last_run_routes);
    run(3, "closed forms satisfy the differential system (order 25)", 0,
        criterion_ode);
    run(4, "trisection and reciprocal identities hold (order 30)", 0,
        criterion_series_identities);
    run(5, "class sizes match enumeration and containment (n <= 8)", 90.0,
        criterion_class_sizes);
    run(6, "run-weight theorems hold for sampled and special weights", 0,
        criterion_weight_theorems);
    run(7, "descent polynomials match enumeration (n <= 7)", 0,
        criterion_descent_polynomials);
    run(8, "joint distribution identities hold in the degree box (n <= 5)", 180.0,
        criterion_qt_identities);
    run(9, "singularity data and error ratios within tolerance", 10.0,
        criterion_asymptotics);
    run(10, "structural roundtrips are exact", 0, criterion_structural);

    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
