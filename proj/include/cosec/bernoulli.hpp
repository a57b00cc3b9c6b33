#pragma once

#include <vector>

#include "cosec/rational.hpp"

namespace cosec {

// Grow-only table of Bernoulli numbers under the B_1 = -1/2 convention,
// computed once through the exact recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
// Entries never change once published; readers may run concurrently.
class BernoulliCache {
public:
    static BernoulliCache& instance();

    ExactRational get(int m);
    int max_order() const;

private:
    BernoulliCache();
    void extend_locked(int m);

    mutable std::vector<ExactRational> table_;
    // synchronisation lives in the implementation file
};

// B_m, exact.  B_0 = 1, B_1 = -1/2, B_{2k+1} = 0 for k >= 1.
ExactRational bernoulli_number(int m);

// B_m(x) with exact rational coefficients C(m, j) B_j, one rounding at the end.
double bernoulli_polynomial(int m, double x);

// B_m(p/q), fully exact.
ExactRational bernoulli_polynomial_exact(int m, const ExactRational& x);

}  // namespace cosec
