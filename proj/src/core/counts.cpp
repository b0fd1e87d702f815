#include "core/counts.hpp"

#include <algorithm>
#include <stdexcept>

namespace altdes {

std::vector<BigInt> euler_numbers(int n) {
    if (n < 0) throw std::domain_error("negative index");
    std::vector<BigInt> e;
    e.reserve(n + 1);
    e.push_back(1);
    std::vector<BigInt> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1);
        next[0] = 0;
        for (int k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
        e.push_back(next[m]);
        row = std::move(next);
    }
    return e;
}

BigInt multinomial(const Composition& L) {
    BigInt r = factorial(L.weight());
    for (int p : L.parts()) r /= factorial(p);
    return r;
}

BigInt euler_multinomial(const Composition& L) {
    int maxp = 0;
    for (int p : L.parts()) maxp = std::max(maxp, p);
    const auto e = euler_numbers(maxp);
    BigInt r = multinomial(L);
    for (int p : L.parts()) r *= e[p];
    return r;
}

namespace {

template <class Term>
BigInt signed_coarsening_sum(const Composition& L, Term term) {
    if (L.empty()) throw std::domain_error("composition must be nonempty");
    BigInt total = 0;
    for (const auto& K : L.coarsenings()) {
        const BigInt t = term(K);
        total += ((L.length() - K.length()) % 2 == 0) ? t : -t;
    }
    return total;
}

}  // namespace

BigInt descent_class_size(const Composition& L) {
    return signed_coarsening_sum(L, multinomial);
}

BigInt alt_descent_class_size(const Composition& L) {
    return signed_coarsening_sum(L, euler_multinomial);
}

}  // namespace altdes
