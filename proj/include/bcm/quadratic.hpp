#pragma once

#include "bcm/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace bcm {

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// d is a runtime field (>= 2, square-free) so one type serves every radical;
/// mixing operands with different d throws rather than coercing. Since d is
/// never a perfect square, a + b*sqrt(d) == 0 iff a == 0 and b == 0, which
/// also makes division by any nonzero element well defined.
class QuadRational {
public:
    /// Zero element of Q(sqrt(2)).
    QuadRational() : a_(0), b_(0), d_(2) {}
    /// Throws std::domain_error when d < 2 or d is not square-free.
    QuadRational(Rational a, Rational b, long long d);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& radical_part() const noexcept { return b_; }
    long long d() const noexcept { return d_; }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const noexcept { return b_.is_zero(); }

    /// a - b*sqrt(d).
    QuadRational conjugate() const;
    /// Field norm a^2 - d*b^2; multiplicative, zero only at zero.
    Rational norm() const;

    QuadRational operator-() const;
    QuadRational& operator+=(const QuadRational& o);
    QuadRational& operator-=(const QuadRational& o);
    QuadRational& operator*=(const QuadRational& o);
    /// Division via the conjugate; throws std::domain_error on zero divisor.
    QuadRational& operator/=(const QuadRational& o);

    friend QuadRational operator+(QuadRational a, const QuadRational& b) { return a += b; }
    friend QuadRational operator-(QuadRational a, const QuadRational& b) { return a -= b; }
    friend QuadRational operator*(QuadRational a, const QuadRational& b) { return a *= b; }
    friend QuadRational operator/(QuadRational a, const QuadRational& b) { return a /= b; }

    /// Values over different d compare equal only when both are plain rationals.
    friend bool operator==(const QuadRational& x, const QuadRational& y) {
        if (x.d_ != y.d_) return x.b_.is_zero() && y.b_.is_zero() && x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadRational& x, const QuadRational& y) { return !(x == y); }

    /// Integer power; negative exponents invert.
    QuadRational pow(long e) const;

    /// Canonical form "a/b + c/e*sqrt(d)", e.g. "3/1 + 2/1*sqrt(2)".
    std::string str() const;
    /// Parses the same grammar. Throws std::invalid_argument.
    static QuadRational from_string(std::string_view s);

    double to_double() const;

private:
    Rational a_;
    Rational b_;
    long long d_;
};

std::ostream& operator<<(std::ostream& os, const QuadRational& x);

}  // namespace bcm
