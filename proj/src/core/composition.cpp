#include "core/composition.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altdes {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::domain_error("composition parts must be positive");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_subset(const std::vector<int>& subset, int n) {
    if (n < 0) throw std::domain_error("composition weight must be nonnegative");
    std::vector<int> parts;
    parts.reserve(subset.size() + 1);
    int prev = 0;
    for (int s : subset) {
        if (s <= prev || s >= n)
            throw std::domain_error("subset must increase strictly within 1..n-1");
        parts.push_back(s - prev);
        prev = s;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::vector<int> Composition::to_subset() const {
    std::vector<int> subset;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        subset.push_back(acc);
    }
    return subset;
}

long Composition::major_index() const {
    long maj = 0;
    const long k = length();
    for (long i = 0; i + 1 < k; ++i) maj += (k - 1 - i) * parts_[i];
    return maj;
}

std::vector<Composition> Composition::coarsenings() const {
    if (parts_.empty()) return {Composition()};
    const int boundaries = length() - 1;
    if (boundaries > 24) throw ResourceError("composition has too many parts");
    std::vector<Composition> out;
    out.reserve(static_cast<size_t>(1) << boundaries);
    for (unsigned long mask = 0; mask < (1ul << boundaries); ++mask) {
        std::vector<int> merged;
        int acc = 0;
        for (int i = 0; i < length(); ++i) {
            acc += parts_[i];
            if (i == length() - 1 || ((mask >> i) & 1)) {
                merged.push_back(acc);
                acc = 0;
            }
        }
        out.push_back(Composition(std::move(merged)));
    }
    return out;
}

bool Composition::coarsens(const Composition& finer) const {
    if (weight_ != finer.weight_) return false;
    const auto mine = to_subset();
    const auto theirs = finer.to_subset();
    return std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end());
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::domain_error("weight must be nonnegative");
    if (n > 24) throw ResourceError("too many compositions requested");
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    out.reserve(static_cast<size_t>(1) << (n - 1));
    std::vector<int> subset;
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        subset.clear();
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) subset.push_back(i);
        out.push_back(Composition::from_subset(subset, n));
    }
    return out;
}

}  // namespace altdes
