#include "bcm/analytic.hpp"

#include "bcm/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace bcm {

namespace {

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

long depth_for(double lambda, double t, double tol) {
    // smallest D >= 1 with t^2 lambda^{-2D} / (2(lambda^2-1)) <= tol
    const double a = t * t / (2.0 * (lambda * lambda - 1.0));
    if (!(a > tol)) return 1;
    long d = static_cast<long>(std::ceil(std::log(a / tol) / (2.0 * std::log(lambda))));
    d = std::max<long>(d, 1);
    while (a * std::pow(lambda, -2.0 * static_cast<double>(d)) > tol) ++d;
    return d;
}

}  // namespace

CharFnEval charfn(double lambda, double t, double tol) {
    if (!(lambda > 1.0)) throw std::domain_error("charfn: lambda must exceed 1");
    if (!(tol > 0.0)) throw std::domain_error("charfn: tol must be positive");
    const double at = std::fabs(t);
    const long depth = depth_for(lambda, at, tol);
    double value = 1.0;
    double c = 1.0;
    for (long n = 1; n <= depth; ++n) {
        c /= lambda;
        value *= std::cos(at * c);
    }
    const double tail = at * at * std::pow(lambda, -2.0 * static_cast<double>(depth)) /
                        (2.0 * (lambda * lambda - 1.0));
    return CharFnEval{lambda, t, depth, value, tail};
}

VerificationReport charfn_functional_eq_check(double lambda, int k,
                                              std::span<const double> t_samples,
                                              double tol) {
    if (!(lambda > 1.0)) throw std::domain_error("charfn: lambda must exceed 1");
    if (k < 1) throw std::domain_error("charfn_functional_eq_check: k must be at least 1");

    VerificationReport report;
    report.identity = "charfn-functional-eq(lambda=" + fmt_double(lambda) +
                      ",k=" + std::to_string(k) + ")";
    report.n_min = 0;
    report.n_max = static_cast<long long>(t_samples.size()) - 1;

    const double inner_tol = tol / 10.0;
    const double scale = std::pow(lambda, static_cast<double>(k));
    for (std::size_t i = 0; i < t_samples.size(); ++i) {
        const double t = t_samples[i];
        const double lhs = charfn(lambda, scale * t, inner_tol).value;
        double rhs = charfn(lambda, t, inner_tol).value;
        for (int j = 0; j < k; ++j) rhs *= std::cos(std::pow(lambda, j) * t);
        if (std::fabs(lhs - rhs) > tol) {
            report.failures.push_back({static_cast<long long>(i),
                                       "phi(" + fmt_double(scale * t) + ")=" + fmt_double(lhs),
                                       "phi(" + fmt_double(t) + ")*prod_cos=" + fmt_double(rhs)});
        }
    }
    return report;
}

double silver_density(double x) {
    const double s2 = std::sqrt(2.0);
    const double ax = std::fabs(x);
    if (ax <= s2 - 1.0) return s2 / 4.0;
    if (ax <= s2 + 1.0) return s2 * (s2 + 1.0 - ax) / 8.0;
    return 0.0;
}

Rational silver_density_exact_moment(long n) {
    if (n < 0) throw std::domain_error("silver_density_exact_moment: n must be nonnegative");
    const QuadRational sqrt2(Rational(0), Rational(1), 2);
    const QuadRational hi(Rational(1), Rational(1), 2);   // sqrt(2) + 1
    const QuadRational lo(Rational(-1), Rational(1), 2);  // sqrt(2) - 1

    auto scale = [](const QuadRational& x, const Rational& r) {
        return x * QuadRational(r, Rational(0), 2);
    };

    // 2 * int_0^{sqrt2+1} x^{2n} g(x) dx, split at sqrt(2)-1:
    //   (sqrt2/2) * int_0^{lo} x^{2n} dx
    // + (sqrt2/4) * int_lo^hi x^{2n} (sqrt2 + 1 - x) dx
    QuadRational flat = scale(lo.pow(2 * n + 1), Rational(BigInt(1), BigInt(2 * n + 1)));
    QuadRational slope =
        scale(hi * (hi.pow(2 * n + 1) - lo.pow(2 * n + 1)), Rational(BigInt(1), BigInt(2 * n + 1))) -
        scale(hi.pow(2 * n + 2) - lo.pow(2 * n + 2), Rational(BigInt(1), BigInt(2 * n + 2)));
    QuadRational total = scale(sqrt2 * flat, Rational(BigInt(1), BigInt(2))) +
                         scale(sqrt2 * slope, Rational(BigInt(1), BigInt(4)));

    if (!total.is_rational())
        throw std::logic_error("silver_density_exact_moment: sqrt(2) part failed to cancel at n=" +
                               std::to_string(n) + ": " + total.str());
    return total.rational_part();
}

Rational silver_density_total_mass() { return silver_density_exact_moment(0); }

SampleResult sample_s(const SamplerConfig& config, bool keep_samples) {
    if (!(config.lambda > 1.0)) throw std::domain_error("sample_s: lambda must exceed 1");
    if (config.depth < 1) throw std::domain_error("sample_s: depth must be at least 1");
    if (config.count < 1) throw std::domain_error("sample_s: count must be at least 1");

    std::vector<double> coef(static_cast<std::size_t>(config.depth));
    double c = 1.0;
    for (auto& v : coef) {
        c /= config.lambda;
        v = c;
    }

    std::mt19937_64 rng(config.seed);
    SampleResult result;
    if (keep_samples) result.samples.reserve(static_cast<std::size_t>(config.count));

    double sum = 0, sum2 = 0, sum4 = 0;
    double mn = 0, mx = 0;
    for (long i = 0; i < config.count; ++i) {
        double x = 0.0;
        for (const double v : coef) x += (rng() & 1U) ? v : -v;
        if (i == 0) {
            mn = mx = x;
        } else {
            mn = std::min(mn, x);
            mx = std::max(mx, x);
        }
        sum += x;
        const double x2 = x * x;
        sum2 += x2;
        sum4 += x2 * x2;
        if (keep_samples) result.samples.push_back(x);
    }

    const double n = static_cast<double>(config.count);
    result.summary.mean = sum / n;
    result.summary.mean_sq = sum2 / n;
    result.summary.mean_pow4 = sum4 / n;
    result.summary.min = mn;
    result.summary.max = mx;
    result.summary.count = config.count;
    result.summary.depth = config.depth;
    result.summary.seed = config.seed;
    result.summary.truncation_tail =
        std::pow(config.lambda, -static_cast<double>(config.depth)) / (config.lambda - 1.0);
    return result;
}

}  // namespace bcm
