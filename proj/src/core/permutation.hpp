#pragma once

#include "core/composition.hpp"

#include <vector>

namespace altdes {

// One-line permutation of {1,...,n}. Positions are 1-based throughout; the
// boundary positions 1 and n are never peaks or valleys.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    int at(int pos) const { return word_[pos - 1]; }
    const std::vector<int>& word() const { return word_; }

    // pi_i -> n+1-pi_i; swaps descents and ascents, peaks and valleys
    Permutation complement() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

struct StatProfile {
    std::vector<int> descent_set;      // i with pi_i > pi_{i+1}
    std::vector<int> alt_descent_set;  // descent at odd i or ascent at even i
    std::vector<int> peaks;            // interior i with pi_{i-1} < pi_i > pi_{i+1}
    std::vector<int> valleys;
    int des = 0;
    int altdes = 0;
    long maj = 0;
    long altmaj = 0;
};

StatProfile statistics(const Permutation& p);

// maximal segments containing no alternating descent; a permutation of n >= 1
// letters with k alternating descents has k+1 of them
std::vector<std::vector<int>> alternating_runs(const Permutation& p);

Composition descent_composition(const Permutation& p);
Composition alt_descent_composition(const Permutation& p);

bool is_alternating(const Permutation& p);          // pi1 > pi2 < pi3 > ...
bool is_reverse_alternating(const Permutation& p);  // pi1 < pi2 > pi3 < ...

}  // namespace altdes
