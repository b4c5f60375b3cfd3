#include "bcm/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace bcm {

namespace {

// Append-only memo for a_n = c1*a_{n-1} + c0*a_{n-2}. Entries are written
// once under the lock and never change afterwards.
class Recurrence2Cache {
public:
    Recurrence2Cache(long long c1, long long c0, BigInt v0, BigInt v1)
        : c1_(c1), c0_(c0), vals_{std::move(v0), std::move(v1)} {}

    BigInt at(long n) {
        if (n < 0) throw std::domain_error("sequence index must be nonnegative");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(vals_.size()) <= n) {
            std::size_t s = vals_.size();
            vals_.push_back(c1_ * vals_[s - 1] + c0_ * vals_[s - 2]);
        }
        return vals_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mu_;
    long long c1_;
    long long c0_;
    std::vector<BigInt> vals_;
};

class EulerCache {
public:
    BigInt at(long k) {
        if (k < 0) throw std::domain_error("euler_even: index must be nonnegative");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(vals_.size()) <= k) {
            long m = static_cast<long>(vals_.size());
            // E_{2m} = -sum_{j=1..m} C(2m,2j) E_{2(m-j)}
            std::vector<BigInt> row = binomial_row(2 * m);
            BigInt s = 0;
            for (long j = 1; j <= m; ++j) s += row[static_cast<std::size_t>(2 * j)] * vals_[static_cast<std::size_t>(m - j)];
            vals_.push_back(-s);
        }
        return vals_[static_cast<std::size_t>(k)];
    }

private:
    std::mutex mu_;
    std::vector<BigInt> vals_{BigInt(1)};
};

}  // namespace

BigInt pell(long n) {
    static Recurrence2Cache cache(2, 1, BigInt(0), BigInt(1));
    return cache.at(n);
}

BigInt pell_lucas(long n) {
    static Recurrence2Cache cache(2, 1, BigInt(2), BigInt(2));
    return cache.at(n);
}

BigInt lucas(long n) {
    static Recurrence2Cache cache(1, 1, BigInt(2), BigInt(1));
    return cache.at(n);
}

BigInt euler_even(long k) {
    static EulerCache cache;
    return cache.at(k);
}

Rational chebyshev_T(long n, const Rational& x) {
    if (n < 0) throw std::domain_error("chebyshev_T: n must be nonnegative");
    if (n == 0) return Rational(1);
    Rational prev(1);
    Rational cur = x;
    Rational two_x = Rational(2) * x;
    for (long i = 2; i <= n; ++i) {
        Rational next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

QuadRational delta_power(long n) {
    return QuadRational(Rational(1), Rational(1), 2).pow(n);
}

Rational tau(long n) {
    if (n < 0) throw std::domain_error("tau: n must be nonnegative");
    if (n % 2 != 0) return Rational(0);
    return Rational(pell_lucas(n), 2);
}

SequenceTable SequenceTable::build(SequenceName name, long n_max) {
    if (n_max < 0) throw std::domain_error("SequenceTable: n_max must be nonnegative");
    SequenceTable t;
    t.name = name;
    t.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        switch (name) {
            case SequenceName::Pell: t.values.emplace_back(pell(n)); break;
            case SequenceName::PellLucas: t.values.emplace_back(pell_lucas(n)); break;
            case SequenceName::Lucas: t.values.emplace_back(lucas(n)); break;
            case SequenceName::EulerEven: t.values.emplace_back(euler_even(n)); break;
            case SequenceName::DeltaPower: t.values.emplace_back(delta_power(n)); break;
            case SequenceName::Tau: t.values.emplace_back(tau(n)); break;
        }
    }
    return t;
}

std::string_view sequence_token(SequenceName name) {
    switch (name) {
        case SequenceName::Pell: return "pell";
        case SequenceName::PellLucas: return "pell-lucas";
        case SequenceName::Lucas: return "lucas";
        case SequenceName::EulerEven: return "euler";
        case SequenceName::DeltaPower: return "delta";
        case SequenceName::Tau: return "tau";
    }
    return "pell";
}

SequenceName sequence_from_token(std::string_view token) {
    if (token == "pell") return SequenceName::Pell;
    if (token == "pell-lucas") return SequenceName::PellLucas;
    if (token == "lucas") return SequenceName::Lucas;
    if (token == "euler") return SequenceName::EulerEven;
    if (token == "delta") return SequenceName::DeltaPower;
    if (token == "tau") return SequenceName::Tau;
    throw std::invalid_argument("unknown sequence '" + std::string(token) + "'");
}

std::string sequence_value_str(const SequenceValue& v) {
    if (const auto* i = std::get_if<BigInt>(&v)) return i->str();
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    return std::get<QuadRational>(v).str();
}

}  // namespace bcm
