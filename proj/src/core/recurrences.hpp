#pragma once

#include "core/numbers.hpp"

#include <string>
#include <vector>

namespace altdes {

// f(n) counts permutations of n whose alternating runs all have length < 3;
// g(n) counts those that also end with a plain ascent.  Both satisfy coupled
// convolution recurrences driven by the even-index slices.
struct FgTables {
    std::vector<BigInt> f;
    std::vector<BigInt> g;
};

FgTables fg_recurrence(int n_max);

// parity refinement: f = f1 + f2 and g = g1 + g2, where the split tracks the
// final-run shape needed to extend by one letter
struct SplitTables {
    std::vector<BigInt> f1;
    std::vector<BigInt> f2;
    std::vector<BigInt> g1;
    std::vector<BigInt> g2;
};

SplitTables split_recurrence(int n_max);

// residual check of the first-order system
//   F1' = F2^2
//   F2' = F1 F2 + G1
//   G1' = F2 (F2 - G2) + F2
//   G2' = F2 (F1 - G1) + G1
// against the closed-form series, through coefficient order - 1
struct OdeReport {
    int order = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

OdeReport ode_residuals(int order);

// c(n) and d(n) refine f(n) by the length of the final alternating run
// (1 or 2, so c + d = f for n >= 1); integer tables read off the quotient
// series, plus a flag recording that the trigonometric closed forms produce
// the same series
struct CdTables {
    std::vector<BigInt> c;
    std::vector<BigInt> d;
    bool trig_matches_quotient = false;
};

CdTables cd_tables(int n_max);

}  // namespace altdes
