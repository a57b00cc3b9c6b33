#pragma once

#include <cstdint>
#include <vector>

#include "cosec/quadrature.hpp"
#include "cosec/sum_query.hpp"

namespace cosec {

// Independent re-evaluations of C_n(nu): the finite cotangent identity and its
// three variants, the infinite digamma series, and both integral forms.  Each
// carries a controlled truncation/quadrature error; all must agree with the
// direct-summation oracle.

// S_n - 2 sum_{l<=nu} ctg((2l-1) pi / 2n); exact identity, rounding-limited.
double finite_series_eval(const SumQuery& q);

enum class FiniteVariant { sin2, cos2, ctg_product };
double finite_series_variants(const SumQuery& q, FiniteVariant variant);

// Digamma-series representation.  Throws singularity_error at nu = n/2 where
// the csc(2 pi nu / n) prefactor blows up although C_n(n/2) itself is finite.
Evaluation infinite_series_eval(const SumQuery& q, const PrecisionPolicy& policy);

// Same series evaluated for many nu at one n in a single pass over the shared
// digamma terms (they do not depend on nu).  Entries for nu = n/2 or
// nu = 0 mod n are returned with terms_used = -1 and must be skipped.
std::vector<Evaluation> infinite_series_sweep(std::int64_t n,
                                              const std::vector<std::int64_t>& nus,
                                              const PrecisionPolicy& policy);

// Poisson-kernel integral on [0, 1].
Evaluation integral_eval_poisson(const SumQuery& q, const QuadratureSpec& spec);

// Hyperbolic-kernel integral on [0, inf), mapped to (0, 1) by x = -ln u.
// At nu = n/2 the boundary term (n - 2 nu) ctg(2 pi nu / n) is the continuous
// limit -n/pi (the 0 * pole form resolves to it, validated against the oracle).
Evaluation integral_eval_hyperbolic(const SumQuery& q, const QuadratureSpec& spec);

// Truncated series for the Polya-Vinogradov sum with its exact telescoping
// tail bound |tail| <= 2 S_n / (pi (2R + 1)).
Evaluation pv_sum_series(std::int64_t n, std::int64_t k, std::int64_t R);

// int_0^inf e^{-alpha x} ch(beta x)/ch(b x) dx as four digamma values;
// requires alpha + b - beta > 0 and b > 0.
double four_digamma_integral(double alpha, double beta, double b);

}  // namespace cosec
