#include "bcm/moments.hpp"

#include "bcm/bigint.hpp"
#include "bcm/sequences.hpp"
#include "bcm/weights.hpp"

#include <stdexcept>

namespace bcm {

namespace {

void validate_q(const Rational& q, long n_max) {
    if (!(Rational(1) < q)) throw std::domain_error("moments: q must exceed 1");
    if (n_max < 0) throw std::domain_error("moments: n_max must be nonnegative");
}

// Shared shape of every recursion here: m_{2n} = prefactor_n * sum_{j<n}
// C(2n,2j) m_{2j} * weight(n-j, j). Bottom-up, each entry computed once.
template <typename Prefactor, typename Weight>
std::vector<Rational> run_recursion(long n_max, Prefactor prefactor, Weight weight) {
    std::vector<Rational> m(static_cast<std::size_t>(n_max) + 1, Rational(1));
    for (long n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        Rational sum(0);
        for (long j = 0; j < n; ++j) {
            sum += Rational(row[static_cast<std::size_t>(2 * j)]) * m[static_cast<std::size_t>(j)] * weight(n - j, j);
        }
        m[static_cast<std::size_t>(n)] = prefactor(n) * sum;
    }
    return m;
}

}  // namespace

MomentTable moments_basic(const Rational& q, long n_max) {
    validate_q(q, n_max);
    auto m = run_recursion(
        n_max,
        [&](long n) { return Rational(1) / (q.pow(n) - Rational(1)); },
        [](long, long) { return Rational(1); });
    return MomentTable{q, MomentMethod::Basic, 1, std::move(m)};
}

MomentTable moments_lambda4(const Rational& q, long n_max) {
    validate_q(q, n_max);
    // inner[g] = sum_{l=0..g} C(2g,2l) q^l; the printed inner sum runs to
    // 2g, but C(2g,2l) = 0 past l = g, so the effective limit is g.
    std::vector<Rational> inner(static_cast<std::size_t>(n_max) + 1, Rational(1));
    for (long g = 1; g <= n_max; ++g) {
        std::vector<BigInt> row = binomial_row(2 * g);
        Rational sum(0);
        Rational ql(1);
        for (long l = 0; l <= g; ++l) {
            sum += Rational(row[static_cast<std::size_t>(2 * l)]) * ql;
            ql *= q;
        }
        inner[static_cast<std::size_t>(g)] = std::move(sum);
    }
    auto m = run_recursion(
        n_max,
        [&](long n) { return Rational(1) / (q.pow(2 * n) - Rational(1)); },
        [&](long gap, long) { return inner[static_cast<std::size_t>(gap)]; });
    return MomentTable{q, MomentMethod::Lambda4, 2, std::move(m)};
}

MomentTable moments_general_k(const Rational& q, int k, long n_max) {
    validate_q(q, n_max);
    if (k < 1) throw std::domain_error("moments: k must be at least 1");
    WeightTable wt = weights_recursive(q, k, n_max);
    auto m = run_recursion(
        n_max,
        [&](long n) { return Rational(1) / (q.pow(k * n) - Rational(1)); },
        [&](long gap, long) { return wt.w[static_cast<std::size_t>(gap)]; });
    return MomentTable{q, MomentMethod::GeneralK, k, std::move(m)};
}

MomentTable moments_euler_inverse(const Rational& q, long n_max) {
    validate_q(q, n_max);
    auto m = run_recursion(
        n_max,
        [&](long n) { return Rational(-1) / (q.pow(n) - Rational(1)); },
        [&](long gap, long j) { return Rational(euler_even(gap)) * q.pow(j); });
    return MomentTable{q, MomentMethod::EulerInverse, 0, std::move(m)};
}

MomentTable moments_uniform_closed(long n_max) {
    if (n_max < 0) throw std::domain_error("moments: n_max must be nonnegative");
    std::vector<Rational> m(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) m[static_cast<std::size_t>(n)] = Rational(BigInt(1), BigInt(2 * n + 1));
    return MomentTable{Rational(4), MomentMethod::UniformClosed, 0, std::move(m)};
}

MomentTable moments_silver_closed(long n_max) {
    if (n_max < 0) throw std::domain_error("moments: n_max must be nonnegative");
    std::vector<Rational> m(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n)
        m[static_cast<std::size_t>(n)] = Rational(pell(2 * n + 2), BigInt((2 * n + 2)) * (2 * n + 1));
    return MomentTable{Rational(2), MomentMethod::SilverClosed, 0, std::move(m)};
}

MomentTable moments_silver_tau(long n_max) {
    if (n_max < 0) throw std::domain_error("moments: n_max must be nonnegative");
    auto m = run_recursion(
        n_max,
        [](long n) { return Rational(1) / (Rational(4).pow(n) - Rational(1)); },
        [](long gap, long) { return tau(2 * gap); });
    return MomentTable{Rational(2), MomentMethod::SilverTau, 0, std::move(m)};
}

MomentTable moments_silver_binomial(long n_max) {
    if (n_max < 0) throw std::domain_error("moments: n_max must be nonnegative");
    std::vector<Rational> m(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        Rational sum(0);
        BigInt two_j = 1;
        for (long j = 0; j <= n; ++j) {
            sum += Rational(row[static_cast<std::size_t>(2 * j)] * two_j,
                            BigInt((2 * n - 2 * j + 1)) * (2 * j + 1));
            two_j *= 2;
        }
        m[static_cast<std::size_t>(n)] = std::move(sum);
    }
    return MomentTable{Rational(2), MomentMethod::SilverBinomial, 0, std::move(m)};
}

std::string_view moment_method_token(MomentMethod method) {
    switch (method) {
        case MomentMethod::Basic: return "bezp";
        case MomentMethod::Lambda4: return "l4";
        case MomentMethod::GeneralK: return "general";
        case MomentMethod::EulerInverse: return "euler";
        case MomentMethod::UniformClosed: return "uniform";
        case MomentMethod::SilverClosed: return "silver";
        case MomentMethod::SilverTau: return "silver-tau";
        case MomentMethod::SilverBinomial: return "silver-binomial";
    }
    return "bezp";
}

}  // namespace bcm
