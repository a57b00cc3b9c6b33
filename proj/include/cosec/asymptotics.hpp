#pragma once

#include <cstdint>

#include "cosec/rational.hpp"
#include "cosec/sum_query.hpp"

namespace cosec {

// Large-n machinery: the Bernoulli expansion driven by high-order cotangent
// derivatives, its Watson and alternating specialisations, two-sided bounds,
// the three-term approximation and the harmonic-number refinement.

// Truncated expansion with the sign-alternation remainder: the true value lies
// between consecutive partial sums, i.e. inside [partial, partial + next_term].
struct ExpansionResult {
    double partial_sum = 0;
    double next_term = 0;
    RemainderBracket bracket;
    int orders_used = 0;
};

enum class HMethod { cot_derivative, polygamma_pair, bernoulli_cosine };

// Expansion coefficient H_{2r-1}(nu/n): the (2r-1)-th derivative of ctg at
// pi nu / n.  Negative for every admissible (r, n, nu); three equal routes.
struct HCoefficient {
    int r = 0;
    double value = 0;
    HMethod method = HMethod::cot_derivative;
};

HCoefficient h_coefficient(int r, std::int64_t n, std::int64_t nu,
                           HMethod method = HMethod::cot_derivative);

// Main expansion of C_n(nu) with N-1 Bernoulli terms plus the bracketed N-th.
// Refuses orders past the optimal truncation point (a growing term voids the
// consecutive-partial-sums guarantee).
ExpansionResult main_expansion(const SumQuery& q, int N = 4);

// Leading term only; invalid at nu = n/6 and 5n/6 where it degenerates to 0.
double rough_asymptotic(const SumQuery& q);

// Expansion of the alternating sum C_n (even n), squared Bernoulli numbers.
ExpansionResult alternating_expansion(std::int64_t n, int N);
// Exact rational c_r with term c_r pi^{2r-1} / n^{2r-1}:
// c_1 = 1/12, c_2 = -7/1440, c_3 = 31/30240, c_4 = -2159/4838400.
ExactRational alternating_expansion_coefficient(int r);

// Watson-sum expansion; first correction -pi/(36 n).
ExpansionResult watson_expansion(std::int64_t n, int N);
ExactRational watson_expansion_coefficient(int r);

// Two-sided bounds: leading term + A(n, nu) below, + B(n, nu) above.
RemainderBracket bounds(const SumQuery& q);

// (2n ln2/pi + pi/12n - 7pi^3/1440n^3, 2n ln2/pi + pi/12n) for even n.
RemainderBracket alternating_bounds(std::int64_t n);

// Three-term approximation; its error does not vanish as n grows.
double simple_approximation(const SumQuery& q);

// f(nu) = -(1/pi){4H_{2nu} - 2H_nu - 2 ln nu - 4 ln 2 - 2 gamma - 1/(12 nu^2)},
// squeezed inside (7/(480 pi nu^4) - 31/(4032 pi nu^6), 7/(480 pi nu^4)).
double f_nu(std::int64_t nu);

// Refined approximation whose error does vanish as n grows at fixed nu.
Evaluation refined_expansion(const SumQuery& q);

}  // namespace cosec
