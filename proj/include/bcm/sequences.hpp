#pragma once

#include "bcm/bigint.hpp"
#include "bcm/quadratic.hpp"
#include "bcm/rational.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace bcm {

/// Pell number P_n: P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
BigInt pell(long n);

/// Pell-Lucas number Q_n: Q_0 = Q_1 = 2, Q_n = 2 Q_{n-1} + Q_{n-2}.
BigInt pell_lucas(long n);

/// Lucas number L_n: L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
BigInt lucas(long n);

/// Even-index Euler (secant) number E_{2k}, indexed by the half-index k.
/// E_0 = 1 and sum_{j=0..k} C(2k,2j) E_{2(k-j)} = 0 for k >= 1; odd-index
/// Euler numbers vanish and are never stored.
BigInt euler_even(long k);

/// Chebyshev polynomial of the first kind T_n evaluated at a rational x.
Rational chebyshev_T(long n, const Rational& x);

/// n-th power of the silver ratio 1 + sqrt(2) in Q(sqrt(2)); negative n
/// gives the exact inverse.
QuadRational delta_power(long n);

/// tau_n = (1 + (-1)^n)(delta_n + delta_n^{-1})/4: zero for odd n and
/// Q_n / 2 for even n.
Rational tau(long n);

enum class SequenceName { Pell, PellLucas, Lucas, EulerEven, DeltaPower, Tau };

using SequenceValue = std::variant<BigInt, Rational, QuadRational>;

/// Contiguous slice of one sequence, indices 0..n_max.
struct SequenceTable {
    SequenceName name = SequenceName::Pell;
    std::vector<SequenceValue> values;

    static SequenceTable build(SequenceName name, long n_max);
    long n_max() const noexcept { return static_cast<long>(values.size()) - 1; }
};

/// CLI token for a sequence ("pell", "pell-lucas", "lucas", "euler",
/// "delta", "tau") and its inverse. Lookup throws std::invalid_argument.
std::string_view sequence_token(SequenceName name);
SequenceName sequence_from_token(std::string_view token);

/// Renders any stored value in its canonical exact form.
std::string sequence_value_str(const SequenceValue& v);

}  // namespace bcm
