#pragma once

#include <string>
#include <vector>

namespace bcm {

/// One index at which an identity check failed, with both sides rendered in
/// canonical exact form (or full-precision decimal for float checks).
struct VerificationFailure {
    long long index = 0;
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one identity over a contiguous index range.
struct VerificationReport {
    std::string identity;
    long long n_min = 0;
    long long n_max = 0;
    std::vector<VerificationFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

}  // namespace bcm
