#pragma once

#include "bcm/rational.hpp"
#include "bcm/report.hpp"

#include <vector>

namespace bcm {

/// Table of the even cosh-product derivatives
///
///   W^{(k)}_{2n} = (d/dt)^{2n} prod_{j=0..k-1} cosh(lambda^j t)  at t = 0,
///
/// stored as exact rationals in q = lambda^2 (only even powers of lambda
/// occur). w[n] holds the (2n)-th derivative; odd derivatives vanish.
/// Every entry is a polynomial in q with nonnegative integer coefficients,
/// so all values are positive for q > 0; W^{(1)}_{2n} = 1 and W^{(k)}_0 = 1.
struct WeightTable {
    Rational q;
    int k = 1;
    std::vector<Rational> w;

    long n_max() const noexcept { return static_cast<long>(w.size()) - 1; }
};

/// Builds the table by the binomial recursion
///   W^{(k)}_{2n} = sum_{j=0..n} C(2n,2j) q^j W^{(k-1)}_{2j},  W^{(1)} = 1.
/// Requires k >= 1 and q > 0 (throws std::domain_error).
WeightTable weights_recursive(const Rational& q, int k, long n_max);

/// Independent route: multiplies the k truncated even power series of
/// cosh(lambda^j t) with exact rational coefficients in q and reads off
/// (2n)! times the t^{2n} coefficient. Same preconditions.
WeightTable weights_series_oracle(const Rational& q, int k, long n_max);

/// Coefficient-level check of the generating-function relation
/// Theta_k(t) = Theta_{k-1}(lambda t) * cosh(t): verifies, per n up to n_max,
/// that the series-built W^{(k)}_{2n} equals sum_j C(2n,2j) q^j W^{(k-1)}_{2j}
/// with W^{(k-1)} also series-built. Requires k >= 2.
VerificationReport theta_genfun_check(const Rational& q, int k, long n_max);

}  // namespace bcm
