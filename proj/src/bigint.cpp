#include "bcm/bigint.hpp"

#include <stdexcept>

namespace bcm {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral at every step: after multiplying by (n-k+i) the
    // product is divisible by i.
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<BigInt> binomial_row(long n) {
    if (n < 0) throw std::domain_error("binomial_row: n must be nonnegative");
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long k = 0; k < n; ++k) {
        row[k + 1] = row[k] * (n - k) / (k + 1);
    }
    return row;
}

std::vector<BigInt> factorial_table(long n) {
    if (n < 0) throw std::domain_error("factorial_table: n must be nonnegative");
    std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (long i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    return fact;
}

BigInt pow_int(const BigInt& base, long exp) {
    if (exp < 0) throw std::domain_error("pow_int: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

bool is_perfect_square(const BigInt& x, BigInt* root) {
    if (x < 0) return false;
    BigInt r = boost::multiprecision::sqrt(x);
    if (r * r != x) return false;
    if (root) *root = r;
    return true;
}

}  // namespace bcm
