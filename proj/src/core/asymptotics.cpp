#include "core/asymptotics.hpp"

#include "core/errors.hpp"
#include "core/recurrences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace altdes {

namespace {

using CLD = std::complex<long double>;

constexpr long double kDiskRadius = 8.0L;
constexpr int kTermCap = 160;

struct Pieces {
    CLD c1;  // cos(z/2)
    CLD s1;  // sin(z/2)
    CLD c2;  // cosh(sqrt3 z/2)
    CLD s2;  // sqrt3 sinh(sqrt3 z/2)
};

// Maclaurin evaluation in u = z/2; term ratios fall below 1/2 once
// (2k+1)(2k+2) > 2*max(1,3)*|u|^2, so the tail is geometric inside the disk
Pieces eval_pieces(CLD z) {
    if (std::abs(z) > kDiskRadius)
        throw NumericError("argument outside the evaluation disk");
    const CLD u = z / 2.0L;
    const CLD u2 = u * u;
    Pieces p{CLD(0), CLD(0), CLD(0), CLD(0)};
    CLD tc1(1), ts1 = u, tc2(1), ts2 = 3.0L * u;
    const long double eps = 1e-22L;
    for (int k = 0; k < kTermCap; ++k) {
        p.c1 += tc1;
        p.s1 += ts1;
        p.c2 += tc2;
        p.s2 += ts2;
        const long double mag = std::max(std::max(std::abs(tc1), std::abs(ts1)),
                                         std::max(std::abs(tc2), std::abs(ts2)));
        if (mag < eps) return p;
        const long double a = (2.0L * k + 1) * (2.0L * k + 2);
        const long double b = (2.0L * k + 2) * (2.0L * k + 3);
        tc1 *= -u2 / a;
        ts1 *= -u2 / b;
        tc2 *= 3.0L * u2 / a;
        ts2 *= 3.0L * u2 / b;
    }
    throw NumericError("series evaluation did not converge");
}

CLD eval_D(const Pieces& p) { return 3.0L * p.c1 - p.s2; }
CLD eval_N(const Pieces& p) { return 3.0L * p.s1 + 3.0L * p.c2; }

CLD eval_U(CLD z) {
    const auto p = eval_pieces(z);
    return eval_D(p) / eval_N(p);
}

// U = D/N with D' = -N/2 gives U' = -1/2 - D N'/N^2 and
// N' = (3/2)(cos(z/2) + sqrt3 sinh(sqrt3 z/2))
CLD eval_U_prime(CLD z) {
    const auto p = eval_pieces(z);
    const CLD n = eval_N(p);
    return CLD(-0.5L) - 1.5L * eval_D(p) * (p.c1 + p.s2) / (n * n);
}

// Newton step for zeros of D; D'/D = -N/(2D) so the step is +2D/N
CLD newton_step(CLD z) {
    const auto p = eval_pieces(z);
    return 2.0L * eval_D(p) / eval_N(p);
}

long double real_D(long double x) { return eval_D(eval_pieces(CLD(x))).real(); }

long double find_alpha(long double tol, int& iterations) {
    long double lo = 1.0L, hi = 2.0L;
    if (!(real_D(lo) > 0 && real_D(hi) < 0))
        throw NumericError("dominant zero not bracketed in [1,2]");
    long double x = 1.3L;
    iterations = 0;
    for (int i = 0; i < 60; ++i) {
        ++iterations;
        const long double step = newton_step(CLD(x)).real();
        long double next = x + step;
        if (next <= lo || next >= hi) next = (lo + hi) / 2;
        if (real_D(next) > 0)
            lo = next;
        else
            hi = next;
        if (std::abs(next - x) < tol * std::abs(next)) return next;
        x = next;
    }
    throw NumericError("dominant zero iteration did not converge");
}

std::vector<CLD> find_complex_zeros(long double tol) {
    std::vector<CLD> zeros;
    const long double pi = std::numbers::pi_v<long double>;
    for (int i = 0; i < 8; ++i) {
        const long double r = 1.6L + 0.45L * i;
        for (int j = 0; j < 8; ++j) {
            const long double theta = (j + 0.5L) * pi / 4;
            CLD z = std::polar(r, theta);
            bool ok = false;
            for (int it = 0; it < 80; ++it) {
                if (std::abs(z) > kDiskRadius - 0.5L) break;
                const CLD step = newton_step(z);
                z += step;
                if (std::abs(step) < tol * std::max(1.0L, std::abs(z))) {
                    ok = true;
                    break;
                }
            }
            if (!ok) continue;
            bool dup = false;
            for (const auto& w : zeros)
                if (std::abs(w - z) < 1e-6L) dup = true;
            if (!dup) zeros.push_back(z);
        }
    }
    return zeros;
}

int winding_count(long double radius) {
    constexpr int kSteps = 8192;
    const long double pi = std::numbers::pi_v<long double>;
    long double total = 0;
    long double prev = std::arg(eval_D(eval_pieces(CLD(radius))));
    for (int k = 1; k <= kSteps; ++k) {
        const long double theta = 2 * pi * k / kSteps;
        const long double cur =
            std::arg(eval_D(eval_pieces(std::polar(radius, theta))));
        long double d = cur - prev;
        while (d > pi) d -= 2 * pi;
        while (d < -pi) d += 2 * pi;
        total += d;
        prev = cur;
    }
    return static_cast<int>(std::llround(total / (2 * pi)));
}

}  // namespace

ZeroReport locate_zeros(double tol) {
    if (!(tol > 0) || tol < 1e-30)
        throw std::domain_error("tolerance must be positive");
    const long double t = std::max<long double>(tol, 1e-19L);
    ZeroReport rep;
    rep.alpha = find_alpha(t, rep.newton_iterations);
    rep.beta = 1.0L / rep.alpha;

    const auto zeros = find_complex_zeros(t);
    bool found = false;
    for (const auto& z : zeros) {
        if (z.imag() < 0.1L) continue;  // keep one of each conjugate pair
        if (std::abs(z) < rep.alpha + 0.1L) continue;
        if (!found || std::abs(z) < std::abs(rep.secondary)) {
            rep.secondary = z;
            found = true;
        }
    }
    if (!found) throw NumericError("no subdominant zero located");
    rep.gamma = std::abs(rep.secondary);
    rep.delta = 1.0L / rep.gamma;

    rep.u_prime_closed = eval_U_prime(CLD(rep.alpha)).real();
    const long double h = 1e-6L;
    rep.u_prime_diff =
        (eval_U(CLD(rep.alpha + h)) - eval_U(CLD(rep.alpha - h))).real() / (2 * h);
    rep.residue_factor = 1.0L / rep.u_prime_closed;
    rep.zeros_inside_gamma = winding_count(rep.gamma - 0.01L);
    return rep;
}

ErrorTable error_table(int n_max, double tol) {
    if (n_max < 0) throw std::domain_error("negative index");
    const auto rep = locate_zeros(tol);
    const auto tables = fg_recurrence(n_max);
    ErrorTable out;
    long double beta_pow = 1.0L;   // becomes beta^(n+1) after the update below
    long double delta_pow = 1.0L;  // delta^n
    for (int n = 0; n <= n_max; ++n) {
        beta_pow *= rep.beta;
        if (n > 0) delta_pow *= rep.delta;
        ErrorRow row;
        row.n = n;
        row.exact = rat_to_long_double(Rat(tables.f[n]) / Rat(factorial(n)));
        row.estimate = 2.0L * beta_pow;
        row.abs_err = std::abs(row.exact - row.estimate);
        row.ratio = row.abs_err / delta_pow;
        if (n >= 5) {
            out.max_ratio = std::max(out.max_ratio, row.ratio);
            out.last_ratio = row.ratio;
        }
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace altdes
