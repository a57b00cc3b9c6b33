#pragma once

#include <cstdint>

#include "cosec/precision.hpp"
#include "cosec/rational.hpp"

namespace cosec {

// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

// H_k = sum_{j<=k} 1/j; exact rational accumulation up to an internal size
// threshold, compensated floating continuation beyond it.  H_0 = 0.
double harmonic(long long k);
ExactRational harmonic_exact(int k);

// Psi(x) for x > 0: upward recurrence until the argument reaches the Stirling
// range, then the asymptotic series with Bernoulli-number coefficients.
double digamma(double x);

// Psi(l/n) for 0 < l/n < 1 through the closed finite cotangent/log-sine form
// (no series truncation).  Terms are paired (nu, n-nu) to halve cancellation.
double digamma_rational(long long l, long long n);

// Psi(x) by the alternating zeta power series truncated after `terms` terms
// (terms >= 3); the first neglected term brackets the true value.
struct SeriesValue {
    double value;
    RemainderBracket bracket;
};
SeriesValue digamma_small_series(double x, int terms);

// Psi_m(x) = (-1)^{m+1} m! zeta(m+1, x), m >= 1, x > 0.
double polygamma(int m, double x);

// ln Gamma(x) for x > 0, shift-and-Stirling.
double log_gamma(double x);

// zeta(s, x) for integer s >= 2: finite shift plus Euler-Maclaurin tail.
double hurwitz_zeta(int s, double x);

// zeta(s) for integer s >= 2 (memoized).
double riemann_zeta(int s);

// zeta(2r) through the closed Bernoulli form, exact coefficient then one rounding.
double zeta_even(int r);

// (2r-1)-th derivative of ctg at phi, via the exact integer polynomial-in-ctg
// recurrence d/dphi ctg = -(1 + ctg^2).  Throws pole_error when sin(phi) = 0.
double cot_derivative(int r, double phi);

// Exact coefficients (constant term first) of the polynomial P with
// d^m/dphi^m ctg phi = P(ctg phi); exposed for verification.
std::vector<BigInt> cot_derivative_polynomial(int derivative_order);

}  // namespace cosec
