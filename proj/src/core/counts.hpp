#pragma once

#include "core/composition.hpp"
#include "core/numbers.hpp"

#include <vector>

namespace altdes {

// E_0..E_n, the zigzag numbers 1,1,1,2,5,16,61,...: E_n counts the
// alternating permutations of n letters and sec x + tan x is their
// exponential generating function. Computed by the boustrophedon triangle.
std::vector<BigInt> euler_numbers(int n);

BigInt multinomial(const Composition& L);

// multinomial(L) times the product of the Euler numbers of the parts
BigInt euler_multinomial(const Composition& L);

// number of permutations of L.weight() letters whose descent composition is
// exactly L, by inclusion-exclusion over coarsenings
BigInt descent_class_size(const Composition& L);

// same for the alternating descent composition
BigInt alt_descent_class_size(const Composition& L);

}  // namespace altdes
