#pragma once

#include <string>
#include <vector>

namespace altdes {

// Composition of n >= 0: an ordered tuple of positive parts. The empty tuple
// is the unique composition of 0. Compositions of n correspond to subsets of
// {1,...,n-1} through partial sums; merging adjacent parts corresponds to
// shrinking the subset, which is how the coarsening order is realized here.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition from_subset(const std::vector<int>& subset, int n);
    std::vector<int> to_subset() const;

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // number of descents of any permutation with this descent composition
    int descents() const { return parts_.empty() ? 0 : length() - 1; }
    // sum of the partial sums, i.e. (k-1)*L1 + (k-2)*L2 + ... + L(k-1)
    long major_index() const;

    // every composition obtained by merging runs of adjacent parts,
    // 2^(length-1) of them for a nonempty composition (itself included)
    std::vector<Composition> coarsenings() const;

    // true when *this can be obtained from finer by merging adjacent parts
    bool coarsens(const Composition& finer) const;

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend bool operator<(const Composition& a, const Composition& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// all 2^(n-1) compositions of n
std::vector<Composition> compositions_of(int n);

}  // namespace altdes
