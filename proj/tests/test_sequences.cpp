#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcm/bigint.hpp"
#include "bcm/sequences.hpp"

#include <atomic>
#include <thread>
#include <vector>

using bcm::BigInt;
using bcm::QuadRational;
using bcm::Rational;

namespace {

const QuadRational kSqrt2(Rational(0), Rational(1), 2);
const QuadRational kOne(Rational(1), Rational(0), 2);

// Independent oracle: E_{2k} from the power series of 1/cosh(t). The series
// inverse is computed coefficientwise in exact rationals, so this path never
// touches the binomial recurrence used by euler_even.
std::vector<BigInt> euler_via_sech_series(long k_max) {
    std::vector<BigInt> fact = bcm::factorial_table(2 * k_max);
    std::vector<Rational> inv(static_cast<std::size_t>(k_max) + 1);
    inv[0] = Rational(1);
    for (long n = 1; n <= k_max; ++n) {
        Rational s(0);
        for (long i = 1; i <= n; ++i)
            s += Rational(BigInt(1), fact[static_cast<std::size_t>(2 * i)]) * inv[static_cast<std::size_t>(n - i)];
        inv[static_cast<std::size_t>(n)] = -s;
    }
    std::vector<BigInt> e(static_cast<std::size_t>(k_max) + 1);
    for (long n = 0; n <= k_max; ++n) {
        Rational v = inv[static_cast<std::size_t>(n)] * Rational(fact[static_cast<std::size_t>(2 * n)]);
        REQUIRE(v.is_integer());
        e[static_cast<std::size_t>(n)] = v.num();
    }
    return e;
}

}  // namespace

TEST_CASE("pell spot values") {
    CHECK(bcm::pell(0) == 0);
    CHECK(bcm::pell(2) == 2);
    CHECK(bcm::pell(4) == 12);
    CHECK(bcm::pell(10) == 2378);
    CHECK(bcm::pell(50) == BigInt("4866752642924153522"));
}

TEST_CASE("pell-lucas spot values") {
    CHECK(bcm::pell_lucas(0) == 2);
    CHECK(bcm::pell_lucas(2) == 6);
    CHECK(bcm::pell_lucas(4) == 34);
    CHECK(bcm::pell_lucas(10) == 6726);
}

TEST_CASE("lucas spot values") {
    CHECK(bcm::lucas(0) == 2);
    CHECK(bcm::lucas(1) == 1);
    CHECK(bcm::lucas(2) == 3);
    CHECK(bcm::lucas(4) == 7);
    CHECK(bcm::lucas(10) == 123);
}

TEST_CASE("recurrences agree with the silver-ratio closed forms up to n = 200") {
    // P_n = (delta_n + (-1)^{n+1} delta_n^{-1}) / (2 sqrt 2),
    // Q_n = delta_n + (-1)^n delta_n^{-1}; both must land on rational integers.
    const QuadRational two_sqrt2 = kSqrt2 * QuadRational(Rational(2), Rational(0), 2);
    QuadRational delta = kOne;
    QuadRational delta_inv = kOne;
    const QuadRational step = bcm::delta_power(1);
    const QuadRational step_inv = bcm::delta_power(-1);
    for (long n = 0; n <= 200; ++n) {
        int sign = (n % 2 == 0) ? 1 : -1;
        QuadRational signed_inv = (sign > 0) ? delta_inv : -delta_inv;
        QuadRational p = (delta - signed_inv) / two_sqrt2;
        QuadRational q = delta + signed_inv;
        REQUIRE(p.is_rational());
        REQUIRE(p.rational_part().is_integer());
        CHECK(p.rational_part().num() == bcm::pell(n));
        REQUIRE(q.is_rational());
        REQUIRE(q.rational_part().is_integer());
        CHECK(q.rational_part().num() == bcm::pell_lucas(n));
        delta *= step;
        delta_inv *= step_inv;
    }
}

TEST_CASE("euler numbers: spot values and sech-series oracle") {
    CHECK(bcm::euler_even(0) == 1);
    CHECK(bcm::euler_even(1) == -1);
    CHECK(bcm::euler_even(2) == 5);
    CHECK(bcm::euler_even(3) == -61);
    CHECK(bcm::euler_even(10) == BigInt("370371188237525"));
    CHECK(bcm::euler_even(15) == BigInt("-441543893249023104553682821"));

    std::vector<BigInt> oracle = euler_via_sech_series(30);
    for (long k = 0; k <= 30; ++k) CHECK(bcm::euler_even(k) == oracle[static_cast<std::size_t>(k)]);
}

TEST_CASE("euler numbers alternate in sign and never vanish") {
    for (long k = 0; k <= 30; ++k) {
        BigInt e = bcm::euler_even(k);
        CHECK(e != 0);
        CHECK((k % 2 == 0 ? e > 0 : e < 0));
    }
}

TEST_CASE("chebyshev polynomials at rational arguments") {
    CHECK(bcm::chebyshev_T(0, Rational(BigInt(17), BigInt(5))) == Rational(1));
    CHECK(bcm::chebyshev_T(1, Rational(BigInt(3), BigInt(2))) == Rational(BigInt(3), BigInt(2)));
    CHECK(bcm::chebyshev_T(2, Rational(BigInt(3), BigInt(2))) == Rational(BigInt(7), BigInt(2)));
    // T_n(3/2) = L_{2n}/2
    for (long n = 0; n <= 50; ++n)
        CHECK(bcm::chebyshev_T(n, Rational(BigInt(3), BigInt(2))) * Rational(2) == Rational(bcm::lucas(2 * n)));
}

TEST_CASE("silver ratio powers") {
    CHECK(bcm::delta_power(0) == kOne);
    CHECK(bcm::delta_power(2) == QuadRational(Rational(3), Rational(2), 2));
    CHECK(bcm::delta_power(-2) == QuadRational(Rational(3), Rational(-2), 2));
    CHECK(bcm::delta_power(10) == QuadRational(Rational(3363), Rational(2378), 2));
    for (long n = -20; n <= 20; ++n) CHECK(bcm::delta_power(n) * bcm::delta_power(-n) == kOne);
}

TEST_CASE("tau values") {
    CHECK(bcm::tau(1) == Rational(0));
    CHECK(bcm::tau(7) == Rational(0));
    CHECK(bcm::tau(0) == Rational(1));
    CHECK(bcm::tau(2) == Rational(3));
    for (long n = 0; n <= 100; ++n) CHECK(bcm::tau(2 * n) == Rational(bcm::pell_lucas(2 * n), 2));
    // definition through delta powers
    for (long n = 0; n <= 40; ++n) {
        QuadRational sum = bcm::delta_power(n) + bcm::delta_power(-n);
        Rational parity(1 + (n % 2 == 0 ? 1 : -1));
        QuadRational expect = QuadRational(parity / Rational(4), Rational(0), 2) * sum;
        REQUIRE(expect.is_rational());
        CHECK(bcm::tau(n) == expect.rational_part());
    }
}

TEST_CASE("sequence tables satisfy their defining recurrences") {
    using bcm::SequenceName;
    auto as_int = [](const bcm::SequenceValue& v) { return std::get<BigInt>(v); };

    for (auto [name, c1, c0] : {std::tuple{SequenceName::Pell, 2, 1},
                                std::tuple{SequenceName::PellLucas, 2, 1},
                                std::tuple{SequenceName::Lucas, 1, 1}}) {
        bcm::SequenceTable t = bcm::SequenceTable::build(name, 60);
        REQUIRE(t.n_max() == 60);
        for (long n = 2; n <= 60; ++n)
            CHECK(as_int(t.values[static_cast<std::size_t>(n)]) ==
                  c1 * as_int(t.values[static_cast<std::size_t>(n - 1)]) +
                      c0 * as_int(t.values[static_cast<std::size_t>(n - 2)]));
    }

    bcm::SequenceTable d = bcm::SequenceTable::build(SequenceName::DeltaPower, 20);
    for (long n = 0; n <= 20; ++n)
        CHECK(std::get<QuadRational>(d.values[static_cast<std::size_t>(n)]) * bcm::delta_power(-n) == kOne);

    bcm::SequenceTable e = bcm::SequenceTable::build(SequenceName::EulerEven, 10);
    CHECK(std::get<BigInt>(e.values[3]) == -61);
    bcm::SequenceTable tau_t = bcm::SequenceTable::build(SequenceName::Tau, 10);
    CHECK(std::get<Rational>(tau_t.values[2]) == Rational(3));
}

TEST_CASE("memo caches serve concurrent readers") {
    std::vector<BigInt> expect;
    for (long n = 0; n <= 120; ++n) expect.push_back(bcm::pell(n));

    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&, w] {
            for (long n = w; n <= 120; n += 3) {
                if (bcm::pell(n) != expect[static_cast<std::size_t>(n)]) ok = false;
                if (bcm::euler_even(n % 25) != bcm::euler_even(n % 25)) ok = false;
            }
        });
    }
    for (auto& t : workers) t.join();
    CHECK(ok);
}

TEST_CASE("sequence token round-trip and errors") {
    using bcm::SequenceName;
    for (auto name : {SequenceName::Pell, SequenceName::PellLucas, SequenceName::Lucas,
                      SequenceName::EulerEven, SequenceName::DeltaPower, SequenceName::Tau})
        CHECK(bcm::sequence_from_token(bcm::sequence_token(name)) == name);
    CHECK_THROWS_AS(bcm::sequence_from_token("fibonacci"), std::invalid_argument);
    CHECK_THROWS_AS(bcm::pell(-1), std::domain_error);
    CHECK_THROWS_AS(bcm::euler_even(-2), std::domain_error);
    CHECK_THROWS_AS(bcm::tau(-1), std::domain_error);
}
