#include "bcm/selfsim.hpp"

#include "bcm/bigint.hpp"
#include "bcm/moments.hpp"
#include "bcm/quadratic.hpp"
#include "bcm/sequences.hpp"

#include <cassert>
#include <stdexcept>

namespace bcm {

Compositions::Compositions(long n, int k) : n_(n), done_(false) {
    if (n < 0 || k < 1) throw std::domain_error("Compositions: need n >= 0, k >= 1");
    parts_.assign(static_cast<std::size_t>(k), 0);
    parts_[0] = n;
}

void Compositions::next() {
    if (done_) return;
    // Move one unit from the first positive slot to its right neighbour and
    // reset everything before it onto slot 0.
    std::size_t t = 0;
    while (t < parts_.size() && parts_[t] == 0) ++t;
    if (t + 1 >= parts_.size()) {  // all mass in the last slot (or n == 0)
        done_ = true;
        return;
    }
    long v = parts_[t];
    parts_[t] = 0;
    parts_[0] = v - 1;
    parts_[t + 1] += 1;
}

VerificationReport verify_selfsim_k(const Rational& q, int k, long n_max) {
    if (k < 2) throw std::domain_error("verify_selfsim_k: k must be at least 2");
    MomentTable base = moments_basic(q, n_max);
    MomentTable sub = moments_basic(q.pow(k), n_max);
    std::vector<BigInt> fact = factorial_table(2 * n_max);

    std::vector<Rational> qpow(static_cast<std::size_t>((k - 1) * n_max) + 1, Rational(1));
    for (std::size_t e = 1; e < qpow.size(); ++e) qpow[e] = qpow[e - 1] * q;

    VerificationReport report;
    report.identity = "selfsim-k(q=" + q.str() + ",k=" + std::to_string(k) + ")";
    report.n_min = 0;
    report.n_max = n_max;
    for (long n = 0; n <= n_max; ++n) {
        Rational rhs(0);
        BigInt visited = 0;
        for (Compositions comp(n, k); !comp.done(); comp.next()) {
            const std::vector<long>& parts = comp.parts();
            BigInt denom = 1;
            long exponent = 0;
            Rational mprod(1);
            for (std::size_t pos = 0; pos < parts.size(); ++pos) {
                denom *= fact[static_cast<std::size_t>(2 * parts[pos])];
                exponent += static_cast<long>(pos) * parts[pos];
                mprod *= sub.m[static_cast<std::size_t>(parts[pos])];
            }
            rhs += Rational(fact[static_cast<std::size_t>(2 * n)] / denom) *
                   qpow[static_cast<std::size_t>(exponent)] * mprod;
            ++visited;
        }
        assert(visited == binomial(n + k - 1, k - 1));
        const Rational& lhs = base.m[static_cast<std::size_t>(n)];
        if (lhs != rhs) report.failures.push_back({n, lhs.str(), rhs.str()});
    }
    return report;
}

VerificationReport verify_selfsim_k2(const Rational& q, long n_max) {
    MomentTable base = moments_basic(q, n_max);
    MomentTable sub = moments_basic(q * q, n_max);

    VerificationReport report;
    report.identity = "selfsim-k2(q=" + q.str() + ")";
    report.n_min = 0;
    report.n_max = n_max;
    for (long n = 0; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        Rational rhs(0);
        Rational qj(1);
        for (long j = 0; j <= n; ++j) {
            rhs += Rational(row[static_cast<std::size_t>(2 * j)]) * qj *
                   sub.m[static_cast<std::size_t>(j)] * sub.m[static_cast<std::size_t>(n - j)];
            qj *= q;
        }
        const Rational& lhs = base.m[static_cast<std::size_t>(n)];
        if (lhs != rhs) report.failures.push_back({n, lhs.str(), rhs.str()});
    }
    return report;
}

VerificationReport verify_selfsim_k3(const Rational& q, long n_max) {
    MomentTable base = moments_basic(q, n_max);
    MomentTable sub = moments_basic(q.pow(3), n_max);
    std::vector<BigInt> fact = factorial_table(2 * n_max);

    VerificationReport report;
    report.identity = "selfsim-k3(q=" + q.str() + ")";
    report.n_min = 0;
    report.n_max = n_max;
    for (long n = 0; n <= n_max; ++n) {
        Rational rhs(0);
        for (long i = 0; i <= n; ++i) {
            for (long j = 0; i + j <= n; ++j) {
                BigInt multinom = fact[static_cast<std::size_t>(2 * n)] /
                                  (fact[static_cast<std::size_t>(2 * i)] * fact[static_cast<std::size_t>(2 * j)] *
                                   fact[static_cast<std::size_t>(2 * (n - i - j))]);
                rhs += Rational(multinom) * q.pow(i + 2 * j) * sub.m[static_cast<std::size_t>(j)] *
                       sub.m[static_cast<std::size_t>(i)] * sub.m[static_cast<std::size_t>(n - i - j)];
            }
        }
        const Rational& lhs = base.m[static_cast<std::size_t>(n)];
        if (lhs != rhs) report.failures.push_back({n, lhs.str(), rhs.str()});
    }
    return report;
}

std::vector<VerificationReport> verify_remark_q9(long n_max) {
    MomentTable mt = moments_basic(Rational(9), n_max);

    VerificationReport first{"q9-binomial-sum", 1, n_max, {}};
    VerificationReport second{"q9-power-sum", 1, n_max, {}};
    for (long n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        Rational lhs1 = Rational(pow_int(BigInt(9), n)) * mt.m[static_cast<std::size_t>(n)];
        Rational lhs2 = Rational(pow_int(BigInt(81), n)) * mt.m[static_cast<std::size_t>(n)];
        Rational rhs1(0);
        Rational rhs2(0);
        for (long j = 0; j <= n; ++j) {
            Rational cm = Rational(row[static_cast<std::size_t>(2 * j)]) * mt.m[static_cast<std::size_t>(j)];
            rhs1 += cm;
            rhs2 += cm * (Rational(2).pow(4 * (n - j) - 1) + Rational(2).pow(2 * (n - j) - 1));
        }
        if (lhs1 != rhs1) first.failures.push_back({n, lhs1.str(), rhs1.str()});
        if (lhs2 != rhs2) second.failures.push_back({n, lhs2.str(), rhs2.str()});
    }
    return {std::move(first), std::move(second)};
}

std::vector<VerificationReport> verify_remark_q5(long n_max) {
    MomentTable mt = moments_basic(Rational(5), n_max);

    VerificationReport first{"q5-binomial-sum", 1, n_max, {}};
    VerificationReport second{"q5-lucas-sum", 1, n_max, {}};
    for (long n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        Rational lhs1 = Rational(pow_int(BigInt(5), n)) * mt.m[static_cast<std::size_t>(n)];
        Rational lhs2 = Rational(pow_int(BigInt(25), n)) * mt.m[static_cast<std::size_t>(n)];
        Rational rhs1(0);
        Rational rhs2(0);
        for (long j = 0; j <= n; ++j) {
            Rational cm = Rational(row[static_cast<std::size_t>(2 * j)]) * mt.m[static_cast<std::size_t>(j)];
            rhs1 += cm;
            rhs2 += cm * Rational(pow_int(BigInt(4), n - j)) * Rational(lucas(2 * (n - j)), 2);
        }
        if (lhs1 != rhs1) first.failures.push_back({n, lhs1.str(), rhs1.str()});
        if (lhs2 != rhs2) second.failures.push_back({n, lhs2.str(), rhs2.str()});
    }
    return {std::move(first), std::move(second)};
}

std::vector<VerificationReport> verify_euler_binomial_identities(long n_max) {
    VerificationReport first{"odd-binomial-power-sum", 1, n_max, {}};
    VerificationReport second{"odd-binomial-euler-sum", 1, n_max, {}};
    for (long n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n + 1);
        BigInt lhs1 = pow_int(BigInt(4), n);
        BigInt rhs1 = 0;
        BigInt rhs2 = 0;
        BigInt four_j = 1;
        for (long j = 0; j <= n; ++j) {
            const BigInt& c = row[static_cast<std::size_t>(2 * j + 1)];
            rhs1 += c;
            rhs2 += c * four_j * euler_even(n - j);
            four_j *= 4;
        }
        if (lhs1 != rhs1) first.failures.push_back({n, lhs1.str(), rhs1.str()});
        if (rhs2 != 1) second.failures.push_back({n, "1", rhs2.str()});
    }
    return {std::move(first), std::move(second)};
}

std::vector<VerificationReport> verify_pell_identities(long n_max) {
    VerificationReport pn{"pell-from-binomials", 1, n_max, {}};
    VerificationReport qn{"pell-lucas-from-binomials", 1, n_max, {}};
    VerificationReport spn{"pell-self-sum", 1, n_max, {}};
    VerificationReport spqn{"pell-lucas-convolution", 1, n_max, {}};
    VerificationReport ssilv{"silver-binomial-sum", 1, n_max, {}};

    const QuadRational delta_sq = delta_power(2);  // 3 + 2*sqrt(2)
    for (long n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row = binomial_row(2 * n);
        std::vector<BigInt> row_next = binomial_row(2 * n + 2);

        BigInt sum_pn = 0;
        BigInt sum_qn = 0;
        BigInt sum_spn = 0;
        BigInt sum_spqn = 0;
        QuadRational sum_silver;  // zero in Q(sqrt(2))
        BigInt two_j = 1;
        QuadRational delta_2j(Rational(1), Rational(0), 2);
        for (long j = 0; j <= n; ++j) {
            sum_pn += row_next[static_cast<std::size_t>(2 * j + 1)] * two_j;
            const BigInt& c = row[static_cast<std::size_t>(2 * j)];
            sum_qn += c * two_j;
            sum_spn += c * pell(2 * j);
            sum_spqn += c * pell(2 * j) * pell_lucas(2 * (n - j));
            sum_silver += QuadRational(Rational(c), Rational(0), 2) * delta_2j;
            two_j *= 2;
            delta_2j *= delta_sq;
        }

        BigInt lhs_pn = pell(2 * n + 2);
        if (lhs_pn != sum_pn) pn.failures.push_back({n, lhs_pn.str(), sum_pn.str()});

        BigInt lhs_qn = pell_lucas(2 * n);
        BigInt rhs_qn = 2 * sum_qn;
        if (lhs_qn != rhs_qn) qn.failures.push_back({n, lhs_qn.str(), rhs_qn.str()});

        BigInt lhs_spn = (BigInt(1) << static_cast<unsigned>(n - 1)) * pell(2 * n);
        if (lhs_spn != sum_spn) spn.failures.push_back({n, lhs_spn.str(), sum_spn.str()});

        BigInt lhs_spqn = (BigInt(1) << static_cast<unsigned>(2 * n - 1)) * pell(2 * n);
        if (lhs_spqn != sum_spqn) spqn.failures.push_back({n, lhs_spqn.str(), sum_spqn.str()});

        // 2^{n-2} is 1/2 at n = 1; the identity holds with that reading.
        QuadRational rhs_silver(
            Rational(2).pow(n - 1) + Rational(2).pow(n - 2) * Rational(pell_lucas(2 * n)),
            Rational(2).pow(n - 1) * Rational(pell(2 * n)), 2);
        if (sum_silver != rhs_silver) ssilv.failures.push_back({n, sum_silver.str(), rhs_silver.str()});
    }
    return {std::move(pn), std::move(qn), std::move(spn), std::move(spqn), std::move(ssilv)};
}

}  // namespace bcm
