#pragma once

#include "core/poly.hpp"
#include "core/series.hpp"

#include <string>
#include <vector>

namespace altdes {

inline constexpr int kMaxSeriesOrder = 60;

using Poly2Series = TruncatedSeries<Poly2>;

// Maclaurin series with exact rational coefficients. The hyperbolic pieces
// absorb one factor of sqrt(3) so that every stored coefficient is rational:
// sqrt3_sinh(s) below is sqrt(3)*sinh(sqrt(3) s x), whose x^(2k+1) coefficient
// is 3^(k+1) s^(2k+1)/(2k+1)!.
RatSeries series_sin(int order, const Rat& a);   // sin(a x)
RatSeries series_cos(int order, const Rat& a);   // cos(a x)
RatSeries series_cosh_sqrt3(int order, const Rat& s);        // cosh(sqrt(3) s x)
RatSeries series_sqrt3_sinh_sqrt3(int order, const Rat& s);  // sqrt(3) sinh(sqrt(3) s x)
RatSeries series_exp(int order);                 // e^x

// catalog names accepted by named_series (aliases F, C, D, C_series and
// D_series resolve to the closed and quotient forms respectively)
std::vector<std::string> named_series_names();
bool is_named_series(const std::string& name);
RatSeries named_series(const std::string& name, int order);

// polynomials counting permutations of n letters by descents, exponent
// des + 1 for n >= 1; index 0 holds the constant 1
std::vector<Poly1> eulerian_polys(int n_max);
// same with alternating descents
std::vector<Poly1> alt_eulerian_polys(int n_max);

// E(x) = sec x + tan x throughout.

// sum_{k=0}^{t_deg} t^k prod_{j=0}^{k} E(x q^j), x-order n_max, coefficients
// capped at t^t_deg q^q_deg
Poly2Series sec_tan_qproduct_sum(int n_max, int t_deg, int q_deg);

// prod_{j=0}^{q_deg} E(x q^j); factors beyond j = q_deg cannot touch the
// kept q-degrees, so the finite product is exact below the cap
Poly2Series sec_tan_qproduct(int n_max, int q_deg);

// sum_{k=0}^{t_deg} t^k E(x)^{k+1} over Q[t]
Poly1Series sec_tan_power_sum(int n_max, int t_deg);

}  // namespace altdes
