#pragma once

#include "core/numbers.hpp"

#include <complex>
#include <vector>

namespace altdes {

// Pole analysis of the exponential generating function N(z)/D(z) with
//   D(z) = 3 cos(z/2) - sqrt3 sinh(sqrt3 z/2)
//   N(z) = 3 sin(z/2) + 3 cosh(sqrt3 z/2)
// D' = -N/2, so every simple zero of D is a pole of N/D with residue -2,
// and the coefficient estimate from the dominant zero alpha is 2 beta^(n+1)
// with beta = 1/alpha.
struct ZeroReport {
    long double alpha = 0;     // smallest positive zero of D
    long double beta = 0;      // 1/alpha
    std::complex<long double> secondary;  // next zero by modulus, upper half plane
    long double gamma = 0;     // |secondary|
    long double delta = 0;     // 1/gamma
    long double u_prime_closed = 0;  // (D/N)'(alpha), closed form
    long double u_prime_diff = 0;    // same, centered difference
    long double residue_factor = 0;  // 1/(D/N)'(alpha)
    int zeros_inside_gamma = 0;      // winding count of D on |z| = gamma - 1/100
    int newton_iterations = 0;
};

ZeroReport locate_zeros(double tol);

struct ErrorRow {
    int n = 0;
    long double exact = 0;     // f(n)/n!
    long double estimate = 0;  // 2 beta^(n+1)
    long double abs_err = 0;
    long double ratio = 0;     // abs_err / delta^n
};

// tabulates the estimate error against the subdominant scale delta^n; the
// ratio column staying bounded is the numeric signature of the delta^n
// error term
struct ErrorTable {
    std::vector<ErrorRow> rows;
    long double max_ratio = 0;   // over n >= 5
    long double last_ratio = 0;
};

ErrorTable error_table(int n_max, double tol);

}  // namespace altdes
