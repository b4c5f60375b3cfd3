#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace bcm {

/// Arbitrary-precision signed integer. Values past 10^200 show up in the
/// identity suites, so a fixed-width type is not an option.
using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Full row C(n, 0), C(n, 1), ..., C(n, n).
std::vector<BigInt> binomial_row(long n);

/// 0!, 1!, ..., n!.
std::vector<BigInt> factorial_table(long n);

/// base^exp, exp >= 0. Throws std::domain_error for negative exponents.
BigInt pow_int(const BigInt& base, long exp);

/// True iff x is a perfect square; on success *root (if given) gets sqrt(x).
bool is_perfect_square(const BigInt& x, BigInt* root = nullptr);

}  // namespace bcm
