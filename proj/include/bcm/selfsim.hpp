#pragma once

#include "bcm/rational.hpp"
#include "bcm/report.hpp"

#include <vector>

namespace bcm {

/// Iterates every tuple (i_0, ..., i_{k-1}) of nonnegative integers with
/// sum n, odometer style (no recursion). Exactly C(n+k-1, k-1) tuples are
/// visited.
class Compositions {
public:
    Compositions(long n, int k);

    const std::vector<long>& parts() const noexcept { return parts_; }
    bool done() const noexcept { return done_; }
    void next();

private:
    std::vector<long> parts_;
    long n_;
    bool done_;
};

/// Checks the k-fold self-similarity expansion: S(lambda) splits into k
/// independent scaled copies of S(lambda^k), so
///
///   m_{2n}(lambda) = sum_{i_1+...+i_k = n} (2n)!/prod (2i_j)! *
///                    q^{i_2 + 2 i_3 + ... + (k-1) i_k} *
///                    prod_j m_{2 i_j}(lambda^k),
///
/// where the table at lambda^k lives at parameter q^k. Exact comparison for
/// every n <= n_max. Requires q > 1, k >= 2.
VerificationReport verify_selfsim_k(const Rational& q, int k, long n_max);

/// k = 2 fast path: m_{2n}(lambda) = sum_j C(2n,2j) q^j m_{2j}(lambda^2)
/// m_{2n-2j}(lambda^2). Must coincide with verify_selfsim_k(q, 2, n).
VerificationReport verify_selfsim_k2(const Rational& q, long n_max);

/// k = 3 fast path with the double sum over i + j <= n and factor q^{i+2j}.
VerificationReport verify_selfsim_k3(const Rational& q, long n_max);

/// The two lambda = 3 (q = 9) identities:
///   9^n  m_2n(3) = sum_{j=0..n} C(2n,2j) m_2j(3)
///   81^n m_2n(3) = sum_{j=0..n} C(2n,2j) m_2j(3) (2^{4(n-j)-1} + 2^{2(n-j)-1})
/// The j = n term of the second sum is 2^{-1} + 2^{-1}; everything is
/// evaluated in exact rationals, so no special case is needed.
std::vector<VerificationReport> verify_remark_q9(long n_max);

/// The two lambda = sqrt(5) (q = 5) identities:
///   5^n  m_2n = sum_{j=0..n} C(2n,2j) m_2j
///   25^n m_2n = sum_{j=0..n} C(2n,2j) m_2j 4^{n-j} L_{2(n-j)} / 2
std::vector<VerificationReport> verify_remark_q5(long n_max);

/// The binomial/Euler pair:
///   4^n = sum_{j=0..n} C(2n+1,2j+1)
///   1   = sum_{j=0..n} C(2n+1,2j+1) 4^j E_{2(n-j)}
std::vector<VerificationReport> verify_euler_binomial_identities(long n_max);

/// The five Pell / Pell-Lucas / silver-ratio identities, indexed n = 1..n_max:
///   P_{2n+2}      = sum_j C(2n+2,2j+1) 2^j
///   Q_{2n}        = 2 sum_j C(2n,2j) 2^j
///   2^{n-1} P_{2n}  = sum_j C(2n,2j) P_{2j}
///   2^{2n-1} P_{2n} = sum_j C(2n,2j) P_{2j} Q_{2(n-j)}
///   sum_j C(2n,2j) (1+sqrt 2)^{2j} = 2^{n-1} + 2^{n-2} Q_{2n}
///                                    + 2^{n-1} sqrt(2) P_{2n}
/// The first four run in exact integers, the last in Q(sqrt(2)).
std::vector<VerificationReport> verify_pell_identities(long n_max);

}  // namespace bcm
