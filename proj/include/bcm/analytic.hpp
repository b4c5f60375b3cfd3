#pragma once

#include "bcm/rational.hpp"
#include "bcm/report.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bcm {

/// Truncated evaluation of the characteristic function
/// phi_lambda(t) = prod_{n>=1} cos(t lambda^{-n}) with a rigorous tail bound:
/// |value - phi_lambda(t)| <= tail_bound = t^2 lambda^{-2 depth} / (2(lambda^2 - 1)),
/// from |cos x - 1| <= x^2/2 and the product Lipschitz bound on [-1, 1].
struct CharFnEval {
    double lambda = 0;
    double t = 0;
    long depth = 0;
    double value = 0;
    double tail_bound = 0;
};

/// Picks the smallest depth with tail_bound <= tol and evaluates the product.
/// Evaluates at |t| (the function is even), so charfn(l, t) == charfn(l, -t)
/// bit for bit. Requires lambda > 1 and tol > 0.
CharFnEval charfn(double lambda, double t, double tol = 1e-12);

/// Checks phi(lambda^k t) = phi(t) * prod_{j=0..k-1} cos(lambda^j t) at each
/// sample point, both sides truncated well below tol. Failure indices refer
/// to positions in t_samples.
VerificationReport charfn_functional_eq_check(double lambda, int k,
                                              std::span<const double> t_samples,
                                              double tol = 1e-10);

/// Density of S(sqrt(2)): sqrt(2)/4 on |x| <= sqrt(2)-1, dropping linearly as
/// sqrt(2)(sqrt(2)+1-|x|)/8 until sqrt(2)+1, zero beyond.
double silver_density(double x);

/// Integrates x^{2n} against that density piecewise in Q(sqrt(2)) with exact
/// polynomial antiderivatives. The sqrt(2) component of the result must
/// cancel (std::logic_error if it does not); the rational part is returned
/// and equals the q = 2 moment table entry.
Rational silver_density_exact_moment(long n);

/// Total mass of the density, computed by the same exact integration; 1.
Rational silver_density_total_mass();

/// Truncated sampling of S(lambda): depth terms, one sign per term.
/// |S - S_depth| <= lambda^{-depth} / (lambda - 1) surely.
struct SamplerConfig {
    double lambda = 2.0;
    long depth = 80;
    std::uint64_t seed = 0;
    long count = 1;
};

struct SampleSummary {
    double mean = 0;
    double mean_sq = 0;    // empirical m_2
    double mean_pow4 = 0;  // empirical m_4
    double min = 0;
    double max = 0;
    long count = 0;
    long depth = 0;
    std::uint64_t seed = 0;
    const char* rng = "mt19937_64";  // algorithm pinned for reproducibility
    double truncation_tail = 0;      // lambda^{-depth} / (lambda - 1)
};

struct SampleResult {
    SampleSummary summary;
    std::vector<double> samples;  // empty unless requested
};

/// Deterministic given the seed: signs come from the low bit of one fresh
/// mt19937_64 word per term. Requires lambda > 1, depth >= 1, count >= 1.
SampleResult sample_s(const SamplerConfig& config, bool keep_samples = false);

}  // namespace bcm
