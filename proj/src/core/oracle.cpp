#include "core/oracle.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace altdes {

namespace {

void check_size(int n, int limit) {
    if (n < 0) throw std::domain_error("negative permutation size");
    if (n > limit)
        throw ResourceError("oracle enumeration capped at n = " + std::to_string(limit));
}

// walks S_n in lexicographic order without constructing Permutation objects
template <class Fn>
void scan(int n, int limit, Fn fn) {
    check_size(n, limit);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

bool alt_descent_at(const std::vector<int>& w, int i) {  // position i, 1-based
    const bool desc = w[i - 1] > w[i];
    return (i % 2 == 1) ? desc : !desc;
}

bool valleys_even_peaks_odd(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 2; i < n; ++i) {
        if (w[i - 2] < w[i - 1] && w[i - 1] > w[i] && i % 2 == 0) return false;
        if (w[i - 2] > w[i - 1] && w[i - 1] < w[i] && i % 2 == 1) return false;
    }
    return true;
}

bool peaks_even_valleys_odd(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 2; i < n; ++i) {
        if (w[i - 2] < w[i - 1] && w[i - 1] > w[i] && i % 2 == 1) return false;
        if (w[i - 2] > w[i - 1] && w[i - 1] < w[i] && i % 2 == 0) return false;
    }
    return true;
}

// run lengths are the gaps between alternating descents
template <class OnRun>
bool scan_alt_runs(const std::vector<int>& w, OnRun on_run) {
    const int n = static_cast<int>(w.size());
    int cur = 0;
    for (int i = 1; i <= n; ++i) {
        ++cur;
        if (i < n && alt_descent_at(w, i)) {
            if (!on_run(cur)) return false;
            cur = 0;
        }
    }
    return cur == 0 || on_run(cur);
}

}  // namespace

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int limit) {
    scan(n, limit, [&](const std::vector<int>& w) { fn(Permutation(w)); });
}

std::map<Composition, BigInt> composition_distribution(int n, DescentKind kind,
                                                       int limit) {
    check_size(n, limit);
    const int bits = n > 0 ? n - 1 : 0;
    std::vector<std::uint64_t> buckets(static_cast<size_t>(1) << bits, 0);
    scan(n, limit, [&](const std::vector<int>& w) {
        unsigned long mask = 0;
        for (int i = 1; i < n; ++i) {
            const bool hit = kind == DescentKind::plain ? w[i - 1] > w[i]
                                                        : alt_descent_at(w, i);
            if (hit) mask |= 1ul << (i - 1);
        }
        ++buckets[mask];
    });
    std::map<Composition, BigInt> out;
    std::vector<int> subset;
    for (size_t mask = 0; mask < buckets.size(); ++mask) {
        if (!buckets[mask]) continue;
        subset.clear();
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) subset.push_back(i);
        out[Composition::from_subset(subset, n)] = buckets[mask];
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> joint_distribution(int n, DescentKind kind,
                                                           int limit) {
    check_size(n, limit);
    const int max_maj = n * (n - 1) / 2;
    std::vector<std::vector<std::uint64_t>> counts(
        n > 0 ? n : 1, std::vector<std::uint64_t>(max_maj + 1, 0));
    scan(n, limit, [&](const std::vector<int>& w) {
        int k = 0;
        int m = 0;
        for (int i = 1; i < n; ++i) {
            const bool hit = kind == DescentKind::plain ? w[i - 1] > w[i]
                                                        : alt_descent_at(w, i);
            if (hit) {
                ++k;
                m += i;
            }
        }
        ++counts[k][m];
    });
    return counts;
}

std::uint64_t count_alternating(int n, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        for (int i = 1; i < n; ++i) {
            const bool desc = w[i - 1] > w[i];
            if ((i % 2 == 1) ? !desc : desc) return;
        }
        ++total;
    });
    return total;
}

std::uint64_t count_reverse_alternating(int n, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        for (int i = 1; i < n; ++i) {
            const bool desc = w[i - 1] > w[i];
            if ((i % 2 == 1) ? desc : !desc) return;
        }
        ++total;
    });
    return total;
}

std::uint64_t count_valleys_even_peaks_odd(int n, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        if (valleys_even_peaks_odd(w)) ++total;
    });
    return total;
}

std::uint64_t count_peaks_even_valleys_odd(int n, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        if (peaks_even_valleys_odd(w)) ++total;
    });
    return total;
}

std::uint64_t count_valleys_even_peaks_odd_final_ascent(int n, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        if (n >= 2 && w[n - 2] > w[n - 1]) return;
        if (valleys_even_peaks_odd(w)) ++total;
    });
    return total;
}

std::uint64_t count_alt_runs_below(int n, int bound, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        if (scan_alt_runs(w, [&](int len) { return len < bound; })) ++total;
    });
    return total;
}

std::uint64_t count_alt_runs_exactly(int n, int m, int limit) {
    if (m <= 0) throw std::domain_error("run length must be positive");
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        if (scan_alt_runs(w, [&](int len) { return len == m; })) ++total;
    });
    return total;
}

std::uint64_t count_short_runs_by_last(int n, int last, int limit) {
    std::uint64_t total = 0;
    scan(n, limit, [&](const std::vector<int>& w) {
        int last_len = 0;
        const bool ok = scan_alt_runs(w, [&](int len) {
            last_len = len;
            return len < 3;
        });
        if (ok && n > 0 && last_len == last) ++total;
    });
    return total;
}

}  // namespace altdes
