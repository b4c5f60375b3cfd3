#pragma once

#include "bcm/rational.hpp"

#include <string_view>
#include <vector>

namespace bcm {

/// How a moment table was produced. All routes must agree exactly; keeping
/// the tag around lets reports and the CLI say which route they used.
enum class MomentMethod {
    Basic,         // one-step recursion, denominator q^n - 1
    Lambda4,       // two-factor recursion, denominator q^{2n} - 1
    GeneralK,      // k-factor recursion, denominator q^{kn} - 1
    EulerInverse,  // inverse recursion through Euler numbers
    UniformClosed,  // q = 4 closed form 1/(2n+1)
    SilverClosed,   // q = 2 closed form P_{2n+2}/((2n+2)(2n+1))
    SilverTau,      // q = 2 recursion with tau weights
    SilverBinomial, // q = 2 non-recursive binomial sum
};

/// Even moments m_{2n} = E S(lambda)^{2n} of the Bernoulli convolution
/// S(lambda) = sum_{n>=1} lambda^{-n} X_n with fair +/-1 signs, held as exact
/// rationals in q = lambda^2 (every recursion touches lambda only through
/// even powers, so irrational lambda with rational square stays exact).
///
/// m[n] is m_{2n}; odd moments vanish by symmetry and are not stored.
/// Invariants: m_0 = 1, every entry positive, m_2 = 1/(q-1).
struct MomentTable {
    Rational q;
    MomentMethod method = MomentMethod::Basic;
    int k = 0;  // meaningful for GeneralK
    std::vector<Rational> m;

    long n_max() const noexcept { return static_cast<long>(m.size()) - 1; }
};

/// m_{2n} = (1/(q^n - 1)) sum_{j=0..n-1} C(2n,2j) m_{2j}.
/// Requires q > 1 (the variance 1/(q-1) diverges at q = 1); throws
/// std::domain_error otherwise.
MomentTable moments_basic(const Rational& q, long n_max);

/// m_{2n} = (1/(q^{2n} - 1)) sum_{j=0..n-1} C(2n,2j) m_{2j} *
///          sum_{l=0..n-j} C(2(n-j),2l) q^l.
/// Same values as moments_basic by a different route.
MomentTable moments_lambda4(const Rational& q, long n_max);

/// m_{2n} = (1/(q^{kn} - 1)) sum_{j=0..n-1} C(2n,2j) m_{2j} W^{(k)}_{2(n-j)},
/// consuming the weight table for this q and k. Any k >= 1 gives the same
/// values; k = 1 and k = 2 reduce to the two recursions above.
MomentTable moments_general_k(const Rational& q, int k, long n_max);

/// m_{2n} = (-1/(q^n - 1)) sum_{j=0..n-1} C(2n,2j) q^j E_{2(n-j)} m_{2j},
/// the inverse of the basic recursion through Euler numbers.
MomentTable moments_euler_inverse(const Rational& q, long n_max);

/// q = 4 (lambda = 2, uniform on [-1,1]): m_{2n} = 1/(2n+1).
MomentTable moments_uniform_closed(long n_max);

/// q = 2 (lambda = sqrt(2)): m_{2n} = P_{2n+2} / ((2n+2)(2n+1)) via Pell
/// numbers.
MomentTable moments_silver_closed(long n_max);

/// q = 2 via the tau-weighted recursion
///   m_{2n} = (1/(4^n - 1)) sum_{j=0..n-1} C(2n,2j) m_{2j} tau_{2(n-j)}.
MomentTable moments_silver_tau(long n_max);

/// q = 2 by the non-recursive convolution with the uniform moments:
///   m_{2n} = sum_{j=0..n} C(2n,2j) 2^j / ((2n-2j+1)(2j+1)).
MomentTable moments_silver_binomial(long n_max);

std::string_view moment_method_token(MomentMethod method);

}  // namespace bcm
