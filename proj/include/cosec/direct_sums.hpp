#pragma once

#include <cstdint>

#include "cosec/sum_query.hpp"

namespace cosec {

// Reference evaluators for all finite sums: plain compensated summation with
// integer-residue trigonometric argument reduction.  These define ground
// truth for every other representation in the library.

// S_n = sum_{l=1}^{n-1} csc(pi l / n).
double watson_sum(std::int64_t n);

// C_n(nu) = sum_{l=1}^{n-1} cos(2 pi nu l / n) csc(pi l / n); S_n when nu = 0 mod n.
double cos_cosecant_sum(const SumQuery& q);

// C_n = sum_{l=1}^{n-1} (-1)^{l+1} csc(pi l / n); exactly 0 for odd n.
double alternating_cosecant_sum(std::int64_t n);

// Same sum without the odd-n short circuit; used by identity checks that
// verify the symmetry cancellation numerically.
double alternating_cosecant_sum_raw(std::int64_t n);

// sum csc^2(pi l / n); checks the direct sum against (n^2 - 1)/3 and returns
// the closed form.  Throws consistency_error if the two disagree.
double csc_squared_sum(std::int64_t n);

// sum_{l=1}^{m} ctg((2l-1) pi / (2n)); empty sum for m = 0.
double cotangent_partial_sum(std::int64_t n, std::int64_t m);

// sum_{l=1}^{n-1} sin(pi r l / n): ctg(pi r / 2n) for odd r, 0 for even r.
double odd_sine_sum(std::int64_t n, std::int64_t r);

// Closed forms of sum_{l=1}^{n-1} cos(phi l) and sin(phi l); pole at phi = 0 mod 2pi.
double dirichlet_cos_sum(std::int64_t n, double phi);
double dirichlet_sin_sum(std::int64_t n, double phi);

// f(n, k) = sum_{l=1}^{n-1} |sin(pi l k / n)| / sin(pi l / n).
double polya_vinogradov_direct(std::int64_t n, std::int64_t k);

namespace detail {
// sin/cos/csc/ctg of pi*j/n for integer j, reduced through the exact integer
// residue so large j never accumulates floating angle drift.
double sin_pi_ratio(std::int64_t j, std::int64_t n);
double cos_pi_ratio(std::int64_t j, std::int64_t n);
double csc_pi_ratio(std::int64_t j, std::int64_t n);
double cot_pi_ratio(std::int64_t j, std::int64_t n);
}  // namespace detail

}  // namespace cosec
