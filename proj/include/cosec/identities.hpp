#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosec/precision.hpp"

namespace cosec {

// Machine-checkable identity catalog.  Every entry compares two independent
// numerical routes over a full parameter grid and reports the worst residual.
enum class IdentityId {
    symmetry,        // C_n(nu) = C_n(n - nu); alternating sum vanishes for odd n
    bound_chain,     // -C_2n <= C_2n(nu), C_n(nu) <= S_n, 0 < C_2n < S_2n
    recurrence,      // C_n(nu+1) = C_n(nu) - 2 ctg((2nu+1) pi / 2n)
    shift,           // C_n(nu+k) from C_n(nu), and the commuted form
    duplication,     // C_n(2nu) from C_n(nu)
    difference,      // C_n(nu) - C_n(k) as a cotangent block, nu > k
    moment0,         // sum_nu C_n(nu) = -S_n
    moment2,         // sum_nu C_n^2(nu) = n(n^2-1)/3 - S_n^2
    cos_projection,  // sum_nu C_n(nu) cos(2 pi nu k/n) = n csc(pi k/n) - S_n
    sin_projection,  // sum_nu C_n(nu) sin(2 pi nu k/n) = 0
    ctg_null,        // sum_nu C_n(nu) ctg(pi nu/n) = 0
    first_moment,    // sum_nu nu C_n(nu) = -n S_n / 2
    logsin_sum,      // sum_nu C_n(nu) ln sin = (gamma + ln 2n) S_n + digamma sum
    loggamma_sum,    // sum_nu C_n(nu) ln Gamma(nu/n) identity
    digamma_weight,  // sum_nu C_n(nu) Psi(nu/n) identity
    adv_sum_1,       // digamma-cosecant summation (log-cosecant phrasing)
    adv_sum_2,       // digamma-cosecant summation (log-gamma phrasing)
    adv_sum_3,       // digamma-weighted C_n sum vs cosecant power product
    sine_null,       // sum_l sin(2 pi nu l/n) csc(pi l/n) = 0
    gauss_digamma,   // closed rational-argument digamma vs the series route
    csc2_closed,     // sum csc^2 = (n^2 - 1)/3
    orthogonality,   // cosine orthogonality (n/2)(delta_{k,l} + delta_{k,n-l})
};

const char* to_string(IdentityId id);
std::vector<IdentityId> identity_catalog();

struct IdentityReport {
    IdentityId id{};
    std::string swept;                // description of the grid
    double worst_abs_residual = 0;
    double worst_rel_residual = 0;    // |lhs-rhs| / max(1, |lhs| + |rhs|)
    std::string worst_case_params;
    bool pass = true;
};

// Sweeps one identity over n in [n_min, n_max] and all admissible inner
// parameters; pass iff |lhs - rhs| <= abs_tol + rel_tol (|lhs| + |rhs|)
// everywhere.  Empty grids pass vacuously.
IdentityReport check_identity(IdentityId id, std::int64_t n_min, std::int64_t n_max,
                              const PrecisionPolicy& policy);

// ln prod_{nu} (csc(pi nu/n))^{csc(pi nu/n)}; the product itself overflows fast.
double cosecant_power_product(std::int64_t n);

// Runs the whole catalog over n in [2, n_max]; report order is fixed by the
// catalog regardless of execution schedule.  threads = 0 picks the hardware
// concurrency.
std::vector<IdentityReport> run_catalog(std::int64_t n_max, const PrecisionPolicy& policy,
                                        int threads = 0);

}  // namespace cosec
