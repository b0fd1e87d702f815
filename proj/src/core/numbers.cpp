#include "core/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace altdes {

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    static std::vector<BigInt> cache{1};
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    return cache[n];
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt num = 1;
    for (int i = 0; i < k; ++i) num *= n - i;
    return num / factorial(k);
}

std::string rat_to_string(const Rat& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt rat_to_bigint(const Rat& r) {
    if (denominator(r) != 1)
        throw std::domain_error("not an integer: " + rat_to_string(r));
    return numerator(r);
}

long double rat_to_long_double(const Rat& r) {
    return r.convert_to<long double>();
}

}  // namespace altdes
