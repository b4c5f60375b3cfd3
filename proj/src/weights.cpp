#include "bcm/weights.hpp"

#include "bcm/bigint.hpp"

#include <stdexcept>

namespace bcm {

namespace {

void validate(const Rational& q, int k, long n_max) {
    if (q.sign() <= 0) throw std::domain_error("weights: q must be positive");
    if (k < 1) throw std::domain_error("weights: k must be at least 1");
    if (n_max < 0) throw std::domain_error("weights: n_max must be nonnegative");
}

}  // namespace

WeightTable weights_recursive(const Rational& q, int k, long n_max) {
    validate(q, k, n_max);
    std::vector<Rational> w(static_cast<std::size_t>(n_max) + 1, Rational(1));
    for (int level = 2; level <= k; ++level) {
        std::vector<Rational> next(w.size());
        for (long n = 0; n <= n_max; ++n) {
            std::vector<BigInt> row = binomial_row(2 * n);
            Rational sum(0);
            Rational qj(1);
            for (long j = 0; j <= n; ++j) {
                sum += Rational(row[static_cast<std::size_t>(2 * j)]) * qj * w[static_cast<std::size_t>(j)];
                qj *= q;
            }
            next[static_cast<std::size_t>(n)] = std::move(sum);
        }
        w = std::move(next);
    }
    return WeightTable{q, k, std::move(w)};
}

WeightTable weights_series_oracle(const Rational& q, int k, long n_max) {
    validate(q, k, n_max);
    const std::size_t len = static_cast<std::size_t>(n_max) + 1;
    std::vector<BigInt> fact = factorial_table(2 * n_max);

    // prod[i] = ordinary coefficient of t^{2i} in the running product.
    std::vector<Rational> prod(len, Rational(0));
    prod[0] = Rational(1);
    for (int factor = 0; factor < k; ++factor) {
        // cosh(lambda^factor t) = sum_i q^{factor*i} t^{2i} / (2i)!
        std::vector<Rational> coef(len);
        Rational qpow(1);
        Rational qstep = q.pow(factor);
        for (std::size_t i = 0; i < len; ++i) {
            coef[i] = qpow / Rational(fact[2 * i]);
            qpow *= qstep;
        }
        std::vector<Rational> next(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i) {
            if (prod[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < len; ++j) next[i + j] += prod[i] * coef[j];
        }
        prod = std::move(next);
    }

    std::vector<Rational> w(len);
    for (std::size_t n = 0; n < len; ++n) w[n] = prod[n] * Rational(fact[2 * n]);
    return WeightTable{q, k, std::move(w)};
}

VerificationReport theta_genfun_check(const Rational& q, int k, long n_max) {
    if (k < 2) throw std::domain_error("theta_genfun_check: k must be at least 2");
    WeightTable upper = weights_series_oracle(q, k, n_max);
    WeightTable lower = weights_series_oracle(q, k - 1, n_max);

    VerificationReport report;
    report.identity = "theta-genfun(q=" + q.str() + ",k=" + std::to_string(k) + ")";
    report.n_min = 0;
    report.n_max = n_max;
    for (long n = 0; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        Rational rhs(0);
        Rational qj(1);
        for (long j = 0; j <= n; ++j) {
            rhs += Rational(row[static_cast<std::size_t>(2 * j)]) * qj * lower.w[static_cast<std::size_t>(j)];
            qj *= q;
        }
        const Rational& lhs = upper.w[static_cast<std::size_t>(n)];
        if (lhs != rhs) report.failures.push_back({n, lhs.str(), rhs.str()});
    }
    return report;
}

}  // namespace bcm
