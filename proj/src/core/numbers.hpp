#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace altdes {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// "p" when the denominator is 1, "p/q" otherwise
std::string rat_to_string(const Rat& r);

// throws std::domain_error unless the value is an integer
BigInt rat_to_bigint(const Rat& r);

long double rat_to_long_double(const Rat& r);

}  // namespace altdes
