#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcm/analytic.hpp"
#include "bcm/moments.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using bcm::CharFnEval;
using bcm::Rational;

TEST_CASE("charfn matches the lambda = 2 sinc closed form") {
    // prod cos(t/2^n) telescopes to sin(t)/t
    CHECK(std::fabs(bcm::charfn(2.0, std::numbers::pi, 1e-12).value) <= 1e-10);
    CHECK(bcm::charfn(2.0, 1.0, 1e-12).value == doctest::Approx(std::sin(1.0)).epsilon(1e-10));
    CHECK(bcm::charfn(2.0, 0.1, 1e-12).value ==
          doctest::Approx(std::sin(0.1) / 0.1).epsilon(1e-10));
    CHECK(bcm::charfn(2.0, 10.0, 1e-12).value ==
          doctest::Approx(std::sin(10.0) / 10.0).epsilon(1e-10));
}

TEST_CASE("charfn at t = 0 is exactly one") {
    CHECK(bcm::charfn(2.0, 0.0, 1e-12).value == 1.0);
    CHECK(bcm::charfn(1.5, 0.0, 1e-6).value == 1.0);
}

TEST_CASE("charfn is even bit for bit and bounded") {
    for (double t : {0.3, 1.7, 9.2, 42.0}) {
        for (double lambda : {1.5, 2.0, 3.0}) {
            CharFnEval pos = bcm::charfn(lambda, t, 1e-12);
            CharFnEval neg = bcm::charfn(lambda, -t, 1e-12);
            CHECK(pos.value == neg.value);
            CHECK(std::fabs(pos.value) <= 1.0);
            CHECK(pos.tail_bound <= 1e-12);
            CHECK(pos.depth >= 1);
        }
    }
    CHECK_THROWS_AS(bcm::charfn(1.0, 1.0, 1e-12), std::domain_error);
    CHECK_THROWS_AS(bcm::charfn(2.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("functional equation phi(lambda^k t) = phi(t) prod cos(lambda^j t)") {
    std::vector<double> grid = {0.0, 0.5, 1.0, 2.0};
    CHECK(bcm::charfn_functional_eq_check(2.0, 1, grid, 1e-10).passed());
    std::vector<double> grid2 = {0.1, 1.0};
    CHECK(bcm::charfn_functional_eq_check(1.5, 2, grid2, 1e-9).passed());
    CHECK(bcm::charfn_functional_eq_check(3.0, 3, grid2, 1e-9).passed());
}

TEST_CASE("truncation residual shrinks as the tolerance tightens") {
    // measured against the exact lambda = 2 limit sin(t)/t
    auto max_residual = [&](double tol) {
        double worst = 0.0;
        for (double t : {0.7, 1.3, 2.1}) {
            bcm::CharFnEval e = bcm::charfn(2.0, t, tol);
            double r = std::fabs(e.value - std::sin(t) / t);
            CHECK(r <= e.tail_bound);  // the reported bound really bounds
            worst = std::max(worst, r);
        }
        return worst;
    };
    double coarse = max_residual(1e-2);
    double mid = max_residual(1e-6);
    double fine = max_residual(1e-12);
    CHECK(fine <= mid);
    CHECK(mid <= coarse);
    CHECK(coarse > 1e-6);  // shallow truncation error is actually visible
    CHECK(fine <= 1e-10);
}

TEST_CASE("silver density pointwise") {
    const double s2 = std::sqrt(2.0);
    CHECK(bcm::silver_density(0.0) == doctest::Approx(s2 / 4.0));
    CHECK(bcm::silver_density(0.3) == bcm::silver_density(-0.3));
    CHECK(bcm::silver_density(s2 + 1.0 + 1e-9) == 0.0);
    CHECK(bcm::silver_density(3.0) == 0.0);
    // continuous across the knee at sqrt(2) - 1
    CHECK(bcm::silver_density(s2 - 1.0) == doctest::Approx(s2 / 4.0));
    for (double x = -3.0; x <= 3.0; x += 0.1) CHECK(bcm::silver_density(x) >= 0.0);
}

TEST_CASE("silver density integrates exactly against even powers") {
    CHECK(bcm::silver_density_total_mass() == Rational(1));
    CHECK(bcm::silver_density_exact_moment(1) == Rational(1));
    bcm::MomentTable t = bcm::moments_basic(Rational(2), 20);
    for (long n = 0; n <= 20; ++n)
        CHECK(bcm::silver_density_exact_moment(n) == t.m[static_cast<std::size_t>(n)]);
}

TEST_CASE("sampler is deterministic per seed") {
    bcm::SamplerConfig cfg{2.0, 60, 987654321ULL, 512};
    bcm::SampleResult a = bcm::sample_s(cfg, true);
    bcm::SampleResult b = bcm::sample_s(cfg, true);
    REQUIRE(a.samples.size() == 512);
    CHECK(a.samples == b.samples);
    CHECK(a.summary.mean == b.summary.mean);

    cfg.seed = 1;
    bcm::SampleResult c = bcm::sample_s(cfg, true);
    CHECK(a.samples != c.samples);
}

TEST_CASE("samples stay inside the support interval") {
    for (double lambda : {1.5, 2.0, 3.0}) {
        bcm::SamplerConfig cfg{lambda, 80, 7ULL, 20000};
        bcm::SampleResult r = bcm::sample_s(cfg);
        double bound = 1.0 / (lambda - 1.0) + r.summary.truncation_tail;
        CHECK(r.summary.min >= -bound);
        CHECK(r.summary.max <= bound);
    }
}

TEST_CASE("sampler moments land near the exact values") {
    bcm::SamplerConfig cfg{2.0, 80, 20130901ULL, 20000};
    bcm::SampleResult r = bcm::sample_s(cfg);
    CHECK(std::fabs(r.summary.mean) < 0.02);
    CHECK(std::fabs(r.summary.mean_sq - 1.0 / 3.0) < 0.02);

    cfg.lambda = 3.0;
    bcm::SampleResult r3 = bcm::sample_s(cfg);
    CHECK(std::fabs(r3.summary.mean_pow4 - 7.0 / 320.0) < 0.01);
}

TEST_CASE("sampler preconditions") {
    CHECK_THROWS_AS(bcm::sample_s({1.0, 10, 0, 10}), std::domain_error);
    CHECK_THROWS_AS(bcm::sample_s({2.0, 0, 0, 10}), std::domain_error);
    CHECK_THROWS_AS(bcm::sample_s({2.0, 10, 0, 0}), std::domain_error);
}
