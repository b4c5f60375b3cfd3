#pragma once

#include "bcm/bigint.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace bcm {

/// Exact rational number, kept in lowest terms with a positive denominator
/// after every operation. Equality is plain structural comparison.
///
/// Values are immutable in spirit: every operation returns a fresh,
/// canonical value, so Rationals can be shared across threads freely.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    /// Throws std::domain_error when d == 0.
    Rational(BigInt n, BigInt d);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error when o == 0.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;  // denominators positive
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Integer power; negative exponents invert (throws on zero base).
    Rational pow(long e) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical form "num/den", slash always present ("0/1", "7/320", "-1/2").
    std::string str() const;
    /// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
    static Rational from_string(std::string_view s);

    double to_double() const;

private:
    void reduce();
    BigInt num_;
    BigInt den_;  // > 0 always
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bcm
