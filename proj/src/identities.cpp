#include "cosec/identities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cosec/direct_sums.hpp"
#include "cosec/kahan.hpp"
#include "cosec/parallel.hpp"
#include "cosec/special.hpp"
#include "cosec/sum_query.hpp"

namespace cosec {

namespace {

constexpr double pi = std::numbers::pi;

const char* const identity_names[] = {
    "SYMMETRY",      "BOUND_CHAIN",   "RECURRENCE",     "SHIFT",
    "DUPLICATION",   "DIFFERENCE",    "MOMENT0",        "MOMENT2",
    "COS_PROJECTION","SIN_PROJECTION","CTG_NULL",       "FIRST_MOMENT",
    "LOGSIN_SUM",    "LOGGAMMA_SUM",  "DIGAMMA_WEIGHT", "ADV_SUM_1",
    "ADV_SUM_2",     "ADV_SUM_3",     "SINE_NULL",      "GAUSS_DIGAMMA",
    "CSC2_CLOSED",   "ORTHOGONALITY",
};

// Oracle values for one n: S_n and the full row C_n(0..n-1) with C_n(0) = S_n.
struct OracleRow {
    std::int64_t n;
    double S;
    std::vector<double> C;

    explicit OracleRow(std::int64_t n_) : n(n_), S(watson_sum(n_)), C(n_) {
        C[0] = S;
        for (std::int64_t nu = 1; nu < n; ++nu) C[nu] = cos_cosecant_sum(SumQuery(n, nu));
    }

    // prefix sums T[m] = sum_{l<=m} ctg((2l-1) pi / 2n), m up to 2n-2;
    // the odd numerators never hit a pole of ctg(pi j / 2n)
    std::vector<double> cot_prefix() const {
        std::vector<double> T(2 * n - 1, 0.0);
        KahanAccumulator<> acc;
        for (std::int64_t m = 1; m <= 2 * n - 2; ++m) {
            acc += detail::cot_pi_ratio(2 * m - 1, 2 * n);
            T[m] = acc.result();
        }
        return T;
    }
};

class ResidualTracker {
public:
    ResidualTracker(const PrecisionPolicy& policy) : policy_(policy) {}

    void equal(double lhs, double rhs, std::int64_t n, const char* fmt, std::int64_t a = 0,
               std::int64_t b = 0) {
        const double abs_res = std::fabs(lhs - rhs);
        const double rel_res = abs_res / std::max(1.0, std::fabs(lhs) + std::fabs(rhs));
        record(abs_res, rel_res, lhs, rhs, n, fmt, a, b);
        if (abs_res > policy_.abs_tol + policy_.rel_tol * (std::fabs(lhs) + std::fabs(rhs)))
            pass_ = false;
    }

    // lhs <= rhs, with a small margin so equality-adjacent points do not flap
    void at_most(double lhs, double rhs, std::int64_t n, const char* fmt, std::int64_t a = 0,
                 std::int64_t b = 0) {
        const double viol = std::max(0.0, lhs - rhs);
        const double rel = viol / std::max(1.0, std::fabs(lhs) + std::fabs(rhs));
        record(viol, rel, lhs, rhs, n, fmt, a, b);
        if (viol > 1e-12) pass_ = false;
    }

    IdentityReport finish(IdentityId id, std::string swept) const {
        IdentityReport rep;
        rep.id = id;
        rep.swept = std::move(swept);
        rep.worst_abs_residual = worst_abs_;
        rep.worst_rel_residual = worst_rel_;
        rep.worst_case_params = worst_params_;
        rep.pass = pass_;
        return rep;
    }

private:
    void record(double abs_res, double rel_res, double lhs, double rhs, std::int64_t n,
                const char* fmt, std::int64_t a, std::int64_t b) {
        worst_abs_ = std::max(worst_abs_, abs_res);
        if (rel_res > worst_rel_ || worst_params_.empty()) {
            worst_rel_ = std::max(worst_rel_, rel_res);
            std::ostringstream os;
            os << "n=" << n;
            if (fmt[0]) os << "," << fmt << "=" << a;
            if (b != 0) os << ",k=" << b;
            os << " lhs=" << lhs << " rhs=" << rhs;
            worst_params_ = os.str();
        }
    }

    const PrecisionPolicy& policy_;
    double worst_abs_ = 0;
    double worst_rel_ = 0;
    std::string worst_params_;
    bool pass_ = true;
};

double log_csc(std::int64_t nu, std::int64_t n) {
    return -std::log(detail::sin_pi_ratio(nu, n));
}

}  // namespace

const char* to_string(IdentityId id) { return identity_names[static_cast<int>(id)]; }

std::vector<IdentityId> identity_catalog() {
    std::vector<IdentityId> ids;
    for (int i = 0; i <= static_cast<int>(IdentityId::orthogonality); ++i)
        ids.push_back(static_cast<IdentityId>(i));
    return ids;
}

double cosecant_power_product(std::int64_t n) {
    if (n < 2) throw domain_error("cosecant_power_product: n must be >= 2");
    KahanAccumulator<> acc;
    for (std::int64_t nu = 1; nu < n; ++nu) {
        const double csc = 1.0 / detail::sin_pi_ratio(nu, n);
        acc += csc * std::log(csc);
    }
    return acc.result();
}

IdentityReport check_identity(IdentityId id, std::int64_t n_min, std::int64_t n_max,
                              const PrecisionPolicy& policy) {
    policy.validate();
    if (n_min < 2 || n_max < n_min)
        throw domain_error("check_identity: need 2 <= n_min <= n_max");
    ResidualTracker t(policy);
    std::ostringstream swept;
    swept << "n=" << n_min << ".." << n_max;

    for (std::int64_t n = n_min; n <= n_max; ++n) {
        const OracleRow row(n);
        const double S = row.S;
        const auto& C = row.C;

        switch (id) {
            case IdentityId::symmetry: {
                for (std::int64_t nu = 1; nu < n; ++nu)
                    t.equal(C[nu], C[n - nu], n, "nu", nu);
                if (n % 2 == 1) t.equal(alternating_cosecant_sum_raw(n), 0.0, n, "");
                break;
            }
            case IdentityId::bound_chain: {
                for (std::int64_t nu = 1; nu < n; ++nu) t.at_most(C[nu], S, n, "nu", nu);
                if (n % 2 == 0) {
                    const double alt = alternating_cosecant_sum(n);
                    for (std::int64_t nu = 1; nu < n; ++nu)
                        t.at_most(-alt, C[nu], n, "nu", nu);
                    t.at_most(0.0, alt, n, "");
                    t.at_most(alt, S, n, "");
                }
                break;
            }
            case IdentityId::recurrence: {
                for (std::int64_t nu = 0; nu + 1 < n; ++nu)
                    t.equal(C[nu + 1], C[nu] - 2.0 * detail::cot_pi_ratio(2 * nu + 1, 2 * n),
                            n, "nu", nu);
                break;
            }
            case IdentityId::shift: {
                const auto T = row.cot_prefix();
                for (std::int64_t nu = 1; nu + 1 < n; ++nu) {
                    for (std::int64_t k = 1; nu + k < n; ++k) {
                        const double lhs = C[nu + k];
                        t.equal(lhs, C[nu] - 2.0 * (T[nu + k] - T[nu]), n, "nu", nu, k);
                        t.equal(lhs, C[k] - 2.0 * (T[nu + k] - T[k]), n, "nu", nu, k);
                    }
                }
                break;
            }
            case IdentityId::duplication: {
                const auto T = row.cot_prefix();
                for (std::int64_t nu = 1; nu < n; ++nu) {
                    const double lhs = C[(2 * nu) % n];
                    t.equal(lhs, C[nu] - 2.0 * (T[2 * nu] - T[nu]), n, "nu", nu);
                }
                break;
            }
            case IdentityId::difference: {
                const auto T = row.cot_prefix();
                for (std::int64_t k = 1; k < n; ++k)
                    for (std::int64_t nu = k + 1; nu < n; ++nu)
                        t.equal(C[nu] - C[k], -2.0 * (T[nu] - T[k]), n, "nu", nu, k);
                break;
            }
            case IdentityId::moment0: {
                KahanAccumulator<> acc;
                for (std::int64_t nu = 1; nu < n; ++nu) acc += C[nu];
                t.equal(acc.result(), -S, n, "");
                break;
            }
            case IdentityId::moment2: {
                KahanAccumulator<> acc;
                for (std::int64_t nu = 1; nu < n; ++nu) acc += C[nu] * C[nu];
                const double nn = static_cast<double>(n);
                t.equal(acc.result(), nn * (nn * nn - 1.0) / 3.0 - S * S, n, "");
                break;
            }
            case IdentityId::cos_projection: {
                for (std::int64_t k = 1; k < n; ++k) {
                    KahanAccumulator<> acc;
                    for (std::int64_t nu = 1; nu < n; ++nu)
                        acc += C[nu] * detail::cos_pi_ratio(2 * nu * k, n);
                    t.equal(acc.result(),
                            static_cast<double>(n) / detail::sin_pi_ratio(k, n) - S, n,
                            "k", k);
                }
                break;
            }
            case IdentityId::sin_projection: {
                for (std::int64_t k = 1; k < n; ++k) {
                    KahanAccumulator<> acc;
                    for (std::int64_t nu = 1; nu < n; ++nu)
                        acc += C[nu] * detail::sin_pi_ratio(2 * nu * k, n);
                    t.equal(acc.result(), 0.0, n, "k", k);
                }
                break;
            }
            case IdentityId::ctg_null: {
                KahanAccumulator<> acc;
                for (std::int64_t nu = 1; nu < n; ++nu)
                    acc += C[nu] * detail::cot_pi_ratio(nu, n);
                t.equal(acc.result(), 0.0, n, "");
                break;
            }
            case IdentityId::first_moment: {
                KahanAccumulator<> acc;
                for (std::int64_t nu = 1; nu < n; ++nu)
                    acc += static_cast<double>(nu) * C[nu];
                t.equal(acc.result(), -static_cast<double>(n) * S / 2.0, n, "");
                break;
            }
            case IdentityId::logsin_sum: {
                KahanAccumulator<> lhs, psi;
                for (std::int64_t nu = 1; nu < n; ++nu) {
                    lhs += C[nu] * std::log(detail::sin_pi_ratio(nu, n));
                    psi += digamma(static_cast<double>(nu) / static_cast<double>(n)) /
                           detail::sin_pi_ratio(nu, n);
                }
                t.equal(lhs.result(),
                        (euler_gamma + std::log(2.0 * static_cast<double>(n))) * S +
                            psi.result(),
                        n, "");
                break;
            }
            case IdentityId::loggamma_sum: {
                KahanAccumulator<> lhs, psi;
                for (std::int64_t nu = 1; nu < n; ++nu) {
                    const double x = static_cast<double>(nu) / static_cast<double>(n);
                    lhs += C[nu] * log_gamma(x);
                    psi += digamma(x) / detail::sin_pi_ratio(nu, n);
                }
                t.equal(lhs.result(),
                        -(euler_gamma + std::log(2.0 * pi * static_cast<double>(n))) * S /
                                2.0 -
                            psi.result() / 2.0,
                        n, "");
                break;
            }
            case IdentityId::digamma_weight:
            case IdentityId::adv_sum_3: {
                KahanAccumulator<> lhs;
                for (std::int64_t nu = 1; nu < n; ++nu)
                    lhs += C[nu] * digamma(static_cast<double>(nu) / static_cast<double>(n));
                const double rhs =
                    (euler_gamma + static_cast<double>(n) * std::log(2.0)) * S -
                    static_cast<double>(n) * cosecant_power_product(n);
                t.equal(lhs.result(), rhs, n, "");
                break;
            }
            case IdentityId::adv_sum_1: {
                KahanAccumulator<> psi, csum;
                for (std::int64_t nu = 1; nu < n; ++nu) {
                    psi += digamma(static_cast<double>(nu) / static_cast<double>(n)) /
                           detail::sin_pi_ratio(nu, n);
                    csum += C[nu] * log_csc(nu, n);
                }
                t.equal(psi.result(),
                        -(euler_gamma + std::log(2.0 * static_cast<double>(n))) * S -
                            csum.result(),
                        n, "");
                break;
            }
            case IdentityId::adv_sum_2: {
                KahanAccumulator<> psi, gsum;
                for (std::int64_t nu = 1; nu < n; ++nu) {
                    const double x = static_cast<double>(nu) / static_cast<double>(n);
                    psi += digamma(x) / detail::sin_pi_ratio(nu, n);
                    gsum += log_gamma(x) * C[nu];
                }
                t.equal(psi.result(),
                        -(euler_gamma + std::log(2.0 * pi * static_cast<double>(n))) * S -
                            2.0 * gsum.result(),
                        n, "");
                break;
            }
            case IdentityId::sine_null: {
                for (std::int64_t nu = 1; nu < n; ++nu) {
                    KahanAccumulator<> acc;
                    for (std::int64_t l = 1; l < n; ++l)
                        acc += detail::sin_pi_ratio(2 * nu * l, n) /
                               detail::sin_pi_ratio(l, n);
                    t.equal(acc.result(), 0.0, n, "nu", nu);
                }
                break;
            }
            case IdentityId::gauss_digamma: {
                for (std::int64_t l = 1; l < n; ++l)
                    t.equal(digamma_rational(l, n),
                            digamma(static_cast<double>(l) / static_cast<double>(n)), n,
                            "l", l);
                break;
            }
            case IdentityId::csc2_closed: {
                KahanAccumulator<> acc;
                for (std::int64_t l = 1; l < n; ++l) {
                    const double s = detail::sin_pi_ratio(l, n);
                    acc += 1.0 / (s * s);
                }
                const double nn = static_cast<double>(n);
                t.equal(acc.result(), (nn * nn - 1.0) / 3.0, n, "");
                break;
            }
            case IdentityId::orthogonality: {
                for (std::int64_t k = 1; k < n; ++k) {
                    for (std::int64_t l = 1; l < n; ++l) {
                        KahanAccumulator<> acc;
                        for (std::int64_t nu = 0; nu < n; ++nu)
                            acc += detail::cos_pi_ratio(2 * nu * k, n) *
                                   detail::cos_pi_ratio(2 * nu * l, n);
                        const double want =
                            0.5 * static_cast<double>(n) *
                            ((k == l ? 1.0 : 0.0) + (k == n - l ? 1.0 : 0.0));
                        t.equal(acc.result(), want, n, "l", l, k);
                    }
                }
                break;
            }
        }
    }
    return t.finish(id, swept.str());
}

std::vector<IdentityReport> run_catalog(std::int64_t n_max, const PrecisionPolicy& policy,
                                        int threads) {
    if (n_max < 2) throw domain_error("run_catalog: n_max must be >= 2");
    const auto ids = identity_catalog();
    std::vector<IdentityReport> reports(ids.size());
    parallel_for(0, static_cast<std::int64_t>(ids.size()), threads, [&](std::int64_t i) {
        reports[i] = check_identity(ids[i], 2, n_max, policy);
    });
    return reports;
}

}  // namespace cosec
