#include "bcm/quadratic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bcm {

namespace {

bool square_free(long long d) {
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

void require_same_field(const QuadRational& x, const QuadRational& y) {
    if (x.d() != y.d())
        throw std::domain_error("QuadRational: mixed radicals sqrt(" + std::to_string(x.d()) +
                                ") and sqrt(" + std::to_string(y.d()) + ")");
}

}  // namespace

QuadRational::QuadRational(Rational a, Rational b, long long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d < 2 || !square_free(d))
        throw std::domain_error("QuadRational: d must be a square-free integer >= 2");
}

QuadRational QuadRational::conjugate() const {
    QuadRational r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadRational::norm() const {
    return a_ * a_ - Rational(d_) * b_ * b_;
}

QuadRational QuadRational::operator-() const {
    QuadRational r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadRational& QuadRational::operator+=(const QuadRational& o) {
    require_same_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadRational& QuadRational::operator-=(const QuadRational& o) {
    require_same_field(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadRational& QuadRational::operator*=(const QuadRational& o) {
    require_same_field(*this, o);
    // (a + b*s)(a' + b'*s) = (aa' + d*bb') + (ab' + a'b)*s
    Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational nb = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadRational& QuadRational::operator/=(const QuadRational& o) {
    require_same_field(*this, o);
    if (o.is_zero()) throw std::domain_error("QuadRational: division by zero");
    Rational n = o.norm();  // nonzero: d is not a square
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

QuadRational QuadRational::pow(long e) const {
    QuadRational one(Rational(1), Rational(0), d_);
    if (e == 0) return one;
    QuadRational base = *this;
    if (e < 0) base = one / base;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    QuadRational r = one;
    while (k > 0) {
        if (k & 1U) r *= base;
        base *= base;
        k >>= 1U;
    }
    return r;
}

std::string QuadRational::str() const {
    return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadRational QuadRational::from_string(std::string_view s) {
    auto fail = [&] {
        throw std::invalid_argument("QuadRational: cannot parse '" + std::string(s) + "'");
    };
    std::size_t plus = s.find(" + ");
    if (plus == std::string_view::npos) fail();
    Rational a = Rational::from_string(s.substr(0, plus));
    std::string_view rest = s.substr(plus + 3);
    std::size_t star = rest.find("*sqrt(");
    if (star == std::string_view::npos || rest.back() != ')') fail();
    Rational b = Rational::from_string(rest.substr(0, star));
    std::string_view ds = rest.substr(star + 6, rest.size() - star - 7);
    long long d = 0;
    try {
        d = std::stoll(std::string(ds));
    } catch (const std::exception&) {
        fail();
    }
    return QuadRational(std::move(a), std::move(b), d);
}

double QuadRational::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::ostream& operator<<(std::ostream& os, const QuadRational& x) {
    return os << x.str();
}

}  // namespace bcm
