#pragma once

#include "core/composition.hpp"
#include "core/numbers.hpp"
#include "core/permutation.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace altdes {

// Brute-force enumeration of S_n. Everything here exists to check the exact
// machinery against raw counting, so it stays deliberately naive; the limit
// keeps n! enumerations from running away. Callers may raise it explicitly.
inline constexpr int kOracleLimit = 10;

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int limit = kOracleLimit);

enum class DescentKind { plain, alternating };

// distribution of (alternating) descent compositions over S_n
std::map<Composition, BigInt> composition_distribution(int n, DescentKind kind,
                                                       int limit = kOracleLimit);

// counts[k][m] = permutations with k (alternating) descents and (alternating)
// major index m
std::vector<std::vector<std::uint64_t>> joint_distribution(int n, DescentKind kind,
                                                           int limit = kOracleLimit);

std::uint64_t count_alternating(int n, int limit = kOracleLimit);
std::uint64_t count_reverse_alternating(int n, int limit = kOracleLimit);

// all valleys in even positions and all peaks in odd positions
std::uint64_t count_valleys_even_peaks_odd(int n, int limit = kOracleLimit);
// mirror class: all peaks even, all valleys odd
std::uint64_t count_peaks_even_valleys_odd(int n, int limit = kOracleLimit);
// the above, restricted to permutations ending with an ascent (every
// permutation of fewer than two letters counts)
std::uint64_t count_valleys_even_peaks_odd_final_ascent(int n, int limit = kOracleLimit);

// every alternating run shorter than bound
std::uint64_t count_alt_runs_below(int n, int bound, int limit = kOracleLimit);
// every alternating run of length exactly m
std::uint64_t count_alt_runs_exactly(int n, int m, int limit = kOracleLimit);
// alternating runs all shorter than 3 and the last run of length `last`
std::uint64_t count_short_runs_by_last(int n, int last, int limit = kOracleLimit);

}  // namespace altdes
