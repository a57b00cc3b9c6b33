#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "cosec/errors.hpp"

namespace cosec {

// Tolerance policy shared by series truncation and cross-method comparisons.
struct PrecisionPolicy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    long long max_terms = 1'000'000;

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol > 0) || max_terms < 1)
            throw domain_error("PrecisionPolicy: abs_tol > 0, rel_tol > 0, max_terms >= 1 required");
    }

    // Scale-aware target: reaches abs_tol near zero and rel_tol for large values.
    double target(double scale) const {
        return std::max(abs_tol, rel_tol * std::max(1.0, std::fabs(scale)));
    }
};

// Interval guaranteed to contain a true value; used for the sign-alternation
// remainder of truncated expansions ("between two consecutive partial sums")
// and for quadrature/series tail estimates.
struct RemainderBracket {
    double lower = 0;
    double upper = 0;

    RemainderBracket() = default;
    RemainderBracket(double lo, double hi) : lower(std::min(lo, hi)), upper(std::max(lo, hi)) {}

    double width() const { return upper - lower; }
    double midpoint() const { return 0.5 * (lower + upper); }
    bool contains(double v) const { return lower <= v && v <= upper; }

    // Containment modulo double rounding of the endpoints and of `v` itself.
    // Brackets produced by nearly converged expansions can be narrower than
    // one ulp of the enclosed value; a strict floating comparison would then
    // test the rounding direction, not the mathematics.
    bool contains_within_rounding(double v, double ulps = 32.0) const {
        const double scale = std::max({1.0, std::fabs(v), std::fabs(lower), std::fabs(upper)});
        const double guard = ulps * 2.220446049250313e-16 * scale;
        return lower - guard <= v && v <= upper + guard;
    }
};

}  // namespace cosec
