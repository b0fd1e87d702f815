#include "core/series_catalog.hpp"

#include "core/counts.hpp"
#include "core/errors.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace altdes {

namespace {

void check_order(int order) {
    if (order < 0) throw std::domain_error("negative truncation order");
    if (order > kMaxSeriesOrder)
        throw ResourceError("series order capped at " + std::to_string(kMaxSeriesOrder));
}

Rat pow_rat(const Rat& a, int e) {
    Rat p(1);
    for (int i = 0; i < e; ++i) p *= a;
    return p;
}

RatSeries constant_series(int order, const Rat& c) {
    RatSeries s(order);
    s.set_coeff(0, c);
    return s;
}

// coefficients E_n/n! of sec x + tan x, by residue class mod 3 with signs:
// keep[r] = +1, keep[r'] = -1, everything else zero
RatSeries euler_residue_series(int order, int plus, int minus) {
    const auto e = euler_numbers(order);
    RatSeries s(order);
    for (int n = 0; n <= order; ++n) {
        if (n % 3 == plus)
            s.set_coeff(n, Rat(e[n]) / Rat(factorial(n)));
        else if (n % 3 == minus && n > 0)
            s.set_coeff(n, -Rat(e[n]) / Rat(factorial(n)));
    }
    return s;
}

}  // namespace

RatSeries series_sin(int order, const Rat& a) {
    check_order(order);
    RatSeries s(order);
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        Rat c = pow_rat(a, 2 * k + 1) / Rat(factorial(2 * k + 1));
        s.set_coeff(2 * k + 1, k % 2 == 0 ? c : -c);
    }
    return s;
}

RatSeries series_cos(int order, const Rat& a) {
    check_order(order);
    RatSeries s(order);
    for (int k = 0; 2 * k <= order; ++k) {
        Rat c = pow_rat(a, 2 * k) / Rat(factorial(2 * k));
        s.set_coeff(2 * k, k % 2 == 0 ? c : -c);
    }
    return s;
}

RatSeries series_cosh_sqrt3(int order, const Rat& s) {
    check_order(order);
    RatSeries out(order);
    for (int k = 0; 2 * k <= order; ++k)
        out.set_coeff(2 * k,
                      pow_rat(Rat(3), k) * pow_rat(s, 2 * k) / Rat(factorial(2 * k)));
    return out;
}

RatSeries series_sqrt3_sinh_sqrt3(int order, const Rat& s) {
    check_order(order);
    RatSeries out(order);
    for (int k = 0; 2 * k + 1 <= order; ++k)
        out.set_coeff(2 * k + 1, pow_rat(Rat(3), k + 1) * pow_rat(s, 2 * k + 1) /
                                     Rat(factorial(2 * k + 1)));
    return out;
}

RatSeries series_exp(int order) {
    check_order(order);
    RatSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, Rat(1) / Rat(factorial(n)));
    return s;
}

namespace {

RatSeries sec_plus_tan(int order) {
    const auto one = constant_series(order, Rat(1));
    return (one + series_sin(order, Rat(1))) * series_cos(order, Rat(1)).reciprocal();
}

// shared denominator of the closed forms below: 3cos(x/2) - sqrt3*sinh(sqrt3*x/2)
RatSeries half_angle_denominator(int order) {
    return series_cos(order, Rat(1, 2)).scalar_mul(Rat(3)) -
           series_sqrt3_sinh_sqrt3(order, Rat(1, 2));
}

// denominator of the parity-split closed forms: 3cos x + 4 - cosh(sqrt3*x)
RatSeries split_denominator(int order) {
    return series_cos(order, Rat(1)).scalar_mul(Rat(3)) + constant_series(order, Rat(4)) -
           series_cosh_sqrt3(order, Rat(1));
}

RatSeries build(const std::string& name, int order) {
    const Rat half(1, 2);
    if (name == "sin_half") return series_sin(order, half);
    if (name == "cos_half") return series_cos(order, half);
    if (name == "sqrt3_sinh_half") return series_sqrt3_sinh_sqrt3(order, half);
    if (name == "cosh_sqrt3_half") return series_cosh_sqrt3(order, half);
    if (name == "cos") return series_cos(order, Rat(1));
    if (name == "cosh_sqrt3") return series_cosh_sqrt3(order, Rat(1));
    if (name == "sec_plus_tan") return sec_plus_tan(order);
    if (name == "euler_trisection_num") return euler_residue_series(order, 0, 1);

    if (name == "F_closed") {
        const auto num = (series_sin(order, half) + series_cosh_sqrt3(order, half))
                             .scalar_mul(Rat(3));
        return num * half_angle_denominator(order).reciprocal();
    }
    if (name == "F_reciprocal")
        return euler_residue_series(order, 0, 1).reciprocal();

    if (name == "F1") {
        const auto num = series_sqrt3_sinh_sqrt3(order, Rat(1)) +
                         series_sin(order, Rat(1)).scalar_mul(Rat(3));
        return num * split_denominator(order).reciprocal();
    }
    if (name == "F2") {
        const auto num =
            (series_sin(order, half) * series_sqrt3_sinh_sqrt3(order, half))
                .scalar_mul(Rat(2)) +
            (series_cos(order, half) * series_cosh_sqrt3(order, half)).scalar_mul(Rat(6));
        return num * split_denominator(order).reciprocal();
    }
    if (name == "G1") {
        const auto num =
            (series_cos(order, half) * series_sqrt3_sinh_sqrt3(order, half))
                .scalar_mul(Rat(4));
        return num * split_denominator(order).reciprocal();
    }
    if (name == "G2") {
        const auto num =
            (series_cos(order, half) * series_cosh_sqrt3(order, half)).scalar_mul(Rat(6)) +
            (series_sin(order, half) * series_sqrt3_sinh_sqrt3(order, half))
                .scalar_mul(Rat(2)) +
            constant_series(order, Rat(2)) -
            series_cosh_sqrt3(order, Rat(1)).scalar_mul(Rat(2));
        return num * split_denominator(order).reciprocal();
    }

    if (name == "C_quotient")
        return euler_residue_series(order, 1, 2) *
               euler_residue_series(order, 0, 1).reciprocal();
    if (name == "D_quotient")
        return euler_residue_series(order, 2, 0) *
               euler_residue_series(order, 0, 1).reciprocal();
    if (name == "C_trig")
        return series_sqrt3_sinh_sqrt3(order, half).scalar_mul(Rat(2)) *
               half_angle_denominator(order).reciprocal();
    if (name == "D_trig") {
        const auto num = (series_sin(order, half) - series_cos(order, half) +
                          series_cosh_sqrt3(order, half))
                             .scalar_mul(Rat(3)) -
                         series_sqrt3_sinh_sqrt3(order, half);
        return num * half_angle_denominator(order).reciprocal();
    }
    throw std::domain_error("unknown series name: " + name);
}

const std::map<std::string, std::string> kAliases = {
    {"F", "F_closed"},         {"C", "C_quotient"},  {"D", "D_quotient"},
    {"C_series", "C_quotient"}, {"D_series", "D_quotient"},
};

const std::vector<std::string> kNames = {
    "sin_half",        "cos_half",   "sqrt3_sinh_half", "cosh_sqrt3_half",
    "cos",             "cosh_sqrt3", "sec_plus_tan",    "euler_trisection_num",
    "F_closed",        "F_reciprocal", "F1",            "F2",
    "G1",              "G2",         "C_quotient",      "C_trig",
    "D_quotient",      "D_trig",
};

}  // namespace

std::vector<std::string> named_series_names() { return kNames; }

bool is_named_series(const std::string& name) {
    if (kAliases.count(name)) return true;
    for (const auto& n : kNames)
        if (n == name) return true;
    return false;
}

RatSeries named_series(const std::string& name, int order) {
    check_order(order);
    const auto alias = kAliases.find(name);
    return build(alias == kAliases.end() ? name : alias->second, order);
}

namespace {

// (1-t)/(1-t*W((1-t)x)) = 1/(1 - t*sum_{n>=1} w_n (1-t)^(n-1) x^n) for any
// EGF-style weight column w_n/n!; the shared factor of (1-t) cancels because
// W has constant term 1
std::vector<Poly1> descent_polys(int n_max, const std::vector<Rat>& w_over_nfact) {
    if (n_max < 0) throw std::domain_error("negative index");
    if (n_max > 30) throw ResourceError("descent polynomial order capped at 30");
    const Poly1 one_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});
    TruncatedSeries<Poly1> den(n_max, Poly1());
    den.set_coeff(0, Poly1(Rat(1)));
    for (int n = 1; n <= n_max; ++n) {
        const Poly1 c = one_minus_t.pow(n - 1) * Poly1::monomial(1, -w_over_nfact[n]);
        den.set_coeff(n, c);
    }
    const auto inv = den.reciprocal();
    std::vector<Poly1> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back(inv.coeff(n) * Rat(factorial(n)));
    return out;
}

}  // namespace

std::vector<Poly1> eulerian_polys(int n_max) {
    std::vector<Rat> w(n_max + 1);
    for (int n = 0; n <= n_max; ++n) w[n] = Rat(1) / Rat(factorial(n));
    return descent_polys(n_max, w);
}

std::vector<Poly1> alt_eulerian_polys(int n_max) {
    const auto e = euler_numbers(n_max < 0 ? 0 : n_max);
    std::vector<Rat> w(n_max + 1);
    for (int n = 0; n <= n_max; ++n) w[n] = Rat(e[n]) / Rat(factorial(n));
    return descent_polys(n_max, w);
}

namespace {

// E(x q^j) with coefficients as monomials q^(jn) E_n/n!
Poly2Series sec_tan_factor(int n_max, const Poly2& proto, int j,
                           const std::vector<BigInt>& e) {
    Poly2Series f(n_max, proto);
    for (int n = 0; n <= n_max; ++n)
        f.set_coeff(n, Poly2::monomial(proto.tcap(), proto.qcap(), 0, j * n,
                                       Rat(e[n]) / Rat(factorial(n))));
    return f;
}

void check_tq(int n_max, int t_deg, int q_deg) {
    if (n_max < 0 || t_deg < 0 || q_deg < 0) throw std::domain_error("negative bound");
    if (n_max > 8 || t_deg > 16 || q_deg > 64)
        throw ResourceError("bivariate truncation caps exceeded");
}

}  // namespace

Poly2Series sec_tan_qproduct_sum(int n_max, int t_deg, int q_deg) {
    check_tq(n_max, t_deg, q_deg);
    const Poly2 proto(t_deg, q_deg);
    const auto e = euler_numbers(n_max);
    Poly2Series prefix = sec_tan_factor(n_max, proto, 0, e);
    Poly2Series sum = prefix;
    for (int k = 1; k <= t_deg; ++k) {
        prefix = prefix * sec_tan_factor(n_max, proto, k, e);
        sum = sum + prefix.scalar_mul(Poly2::monomial(t_deg, q_deg, k, 0));
    }
    return sum;
}

Poly2Series sec_tan_qproduct(int n_max, int q_deg) {
    check_tq(n_max, 0, q_deg);
    const Poly2 proto(0, q_deg);
    const auto e = euler_numbers(n_max);
    Poly2Series acc = Poly2Series::one(n_max, proto);
    for (int j = 0; j <= q_deg; ++j) acc = acc * sec_tan_factor(n_max, proto, j, e);
    return acc;
}

Poly1Series sec_tan_power_sum(int n_max, int t_deg) {
    if (n_max < 0 || t_deg < 0) throw std::domain_error("negative bound");
    if (n_max > 10 || t_deg > 16) throw ResourceError("truncation caps exceeded");
    const auto base = lift_series(sec_plus_tan(n_max), Poly1());
    Poly1Series prefix = base;
    Poly1Series sum = prefix;
    for (int k = 1; k <= t_deg; ++k) {
        prefix = prefix * base;
        sum = sum + prefix.scalar_mul(Poly1::monomial(k));
    }
    return sum;
}

}  // namespace altdes
