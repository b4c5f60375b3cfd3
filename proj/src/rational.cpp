#include "bcm/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>

namespace bcm {

using boost::multiprecision::gcd;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    // Cross-cancel first so intermediates stay near the reduced size.
    BigInt g1 = gcd(num_ < 0 ? BigInt(-num_) : num_, o.den_);
    BigInt g2 = gcd(o.num_ < 0 ? BigInt(-o.num_) : o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    if (num_ == 0) den_ = 1;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this *= Rational(o.den_, o.num_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (num_ == 0) {
        if (e < 0) throw std::domain_error("Rational: zero to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? *this : Rational(den_, num_);
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational r(1);
    while (k > 0) {
        if (k & 1U) r *= base;
        base *= base;
        k >>= 1U;
    }
    return r;
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::from_string(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    auto parse_int = [&](std::string_view t) -> BigInt {
        if (t.empty()) fail();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) fail();
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') fail();
        return BigInt(std::string(t));
    };
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt n = parse_int(s.substr(0, slash));
    BigInt d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in input");
    return Rational(std::move(n), std::move(d));
}

double Rational::to_double() const {
    boost::multiprecision::cpp_rational r(num_, den_);
    return r.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace bcm
