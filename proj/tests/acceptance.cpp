// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not configurable.

#include <quadmath.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "cosec/asymptotics.hpp"
#include "cosec/rational.hpp"
#include "cosec/direct_sums.hpp"
#include "cosec/identities.hpp"
#include "cosec/parallel.hpp"
#include "cosec/representations.hpp"
#include "cosec/special.hpp"

using namespace cosec;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass) ++failures;
}

bool in_window(double v, double lo, double hi) { return lo < v && v < hi; }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

// Containment allowing for the double rounding of BOTH sides.  The oracle is a
// near-cancelling sum whose absolute rounding scales with S_n (the sum of the
// term magnitudes), not with the possibly tiny result.
bool contains_guarded(const RemainderBracket& b, double v, double term_scale) {
    const double guard = 64.0 * 2.220446049250313e-16 *
                         (term_scale + std::fabs(v) + std::fabs(b.lower) + 1.0);
    return b.lower - guard <= v && v <= b.upper + guard;
}

// ---------------------------------------------------------------- criterion 1
void figure_values() {
    bool ok = true;
    std::string detail;
    const auto check = [&](double v, double lo, double hi, const char* name) {
        if (!in_window(v, lo, hi)) {
            ok = false;
            detail += std::string(" ") + name + "=" + std::to_string(v);
        }
    };
    check(cos_cosecant_sum(SumQuery(100, 7)), 52.5, 53.5, "C_100(7)");
    check(cos_cosecant_sum(SumQuery(100, 10)), 30.5, 31.5, "C_100(10)");
    check(cos_cosecant_sum(SumQuery(100, 16)), 1.5, 2.5, "C_100(16)");
    check(cos_cosecant_sum(SumQuery(300, 150)), -133.0, -131.0, "C_300(150)");
    check(watson_sum(300), 1112.0, 1114.0, "S_300");
    check(cos_cosecant_sum(SumQuery(300, 100)), -106.0, -104.0, "C_300(100)");
    check(cos_cosecant_sum(SumQuery(300, 50)), -4e-3, -2e-3, "C_300(50)");
    check(cos_cosecant_sum(SumQuery(300, 20)), 167.0, 169.0, "C_300(20)");
    check(cos_cosecant_sum(SumQuery(300, 10)), 298.0, 300.0, "C_300(10)");
    check(cos_cosecant_sum(SumQuery(10000, 7)), 34540.0, 34542.0, "C_10000(7)");
    report(1, ok, "figure values land in the quoted windows" + detail);
}

// ---------------------------------------------------------------- criterion 2
void approximation_error() {
    const double err = cos_cosecant_sum(SumQuery(10000, 7)) -
                       simple_approximation(SumQuery(10000, 7));
    report(2, in_window(err, -4e-4, -1e-4),
           "three-term approximation error at (10000, 7) is " + sci(err));
}

// ---------------------------------------------------------------- criterion 3
void cross_method() {
    std::atomic<bool> ok{true};
    std::atomic<double> worst{0.0};
    PrecisionPolicy pol;
    pol.abs_tol = pol.rel_tol = 1e-9;
    pol.max_terms = 50'000'000;
    const QuadratureSpec spec = QuadratureSpec::interval(1e-10);

    parallel_for(2, 65, 0, [&](std::int64_t n) {
        std::vector<std::int64_t> nus;
        for (std::int64_t nu = 1; nu < n; ++nu) nus.push_back(nu);
        const auto series = infinite_series_sweep(n, nus, pol);
        for (std::int64_t nu = 1; nu < n; ++nu) {
            const SumQuery q(n, nu);
            const double oracle = cos_cosecant_sum(q);
            const double scale = std::max(1.0, std::fabs(oracle));
            std::vector<double> values = {
                oracle,
                finite_series_eval(q),
                finite_series_variants(q, FiniteVariant::sin2),
                finite_series_variants(q, FiniteVariant::cos2),
                finite_series_variants(q, FiniteVariant::ctg_product),
                integral_eval_poisson(q, spec).value,
                integral_eval_hyperbolic(q, spec).value,
            };
            if (series[nu - 1].terms_used >= 0) values.push_back(series[nu - 1].value);
            for (std::size_t i = 0; i < values.size(); ++i) {
                for (std::size_t j = i + 1; j < values.size(); ++j) {
                    const double dev = std::fabs(values[i] - values[j]) / scale;
                    double prev = worst.load();
                    while (dev > prev && !worst.compare_exchange_weak(prev, dev)) {}
                    if (dev > 1e-8) ok = false;
                }
            }
        }
    });
    report(3, ok,
           "oracle, finite forms, integrals and series agree pairwise within 1e-8 "
           "(worst " + sci(worst.load()) + ") for n <= 64");
}

// ---------------------------------------------------------------- criterion 4
void identity_suite() {
    PrecisionPolicy pol;
    pol.abs_tol = 1e-9;
    pol.rel_tol = 1e-9;
    const auto reports = run_catalog(50, pol, 0);
    bool ok = true;
    double worst = 0;
    std::string failing;
    for (const auto& rep : reports) {
        worst = std::max(worst, rep.worst_rel_residual);
        if (!rep.pass || rep.worst_rel_residual >= 1e-9) {
            ok = false;
            failing += std::string(" ") + to_string(rep.id);
        }
    }
    report(4, ok,
           "identity catalog at n_max = 50, worst relative residual " +
               sci(worst) + failing);
}

// ---------------------------------------------------------------- criterion 5
void bounds_containment() {
    std::atomic<bool> ok{true};
    parallel_for(4, 501, 0, [&](std::int64_t n) {
        const double S = watson_sum(n);
        for (std::int64_t nu = 1; nu < n; ++nu) {
            const SumQuery q(n, nu);
            if (!contains_guarded(bounds(q), cos_cosecant_sum(q), S)) ok = false;
        }
        if (n % 2 == 0 &&
            !contains_guarded(alternating_bounds(n), alternating_cosecant_sum(n), S))
            ok = false;
    });
    report(5, ok, "two-sided bounds contain the oracle for n in [4, 500], all nu");
}

// ---------------------------------------------------------------- criterion 6
void expansion_bracketing() {
    bool ok = true;
    std::string detail;

    for (std::int64_t n = 20; n <= 200; ++n) {
        const double S = watson_sum(n);
        std::vector<std::int64_t> grid = {std::max<std::int64_t>(2, n / 6), n / 4, n / 3,
                                          n / 2};
        for (std::int64_t nu : grid) {
            const double oracle = cos_cosecant_sum(SumQuery(n, nu));
            RemainderBracket prev{};
            for (int N = 2; N <= 5; ++N) {
                const ExpansionResult r = main_expansion(SumQuery(n, nu), N);
                if (!contains_guarded(r.bracket, oracle, S)) {
                    ok = false;
                    detail = " main n=" + std::to_string(n) + " nu=" + std::to_string(nu) +
                             " N=" + std::to_string(N);
                }
                const double g = 64.0 * 2.220446049250313e-16 * S;
                if (N > 2 &&
                    (prev.upper + g < r.bracket.lower || r.bracket.upper + g < prev.lower)) {
                    ok = false;
                    detail = " overlap n=" + std::to_string(n);
                }
                prev = r.bracket;
            }
        }
    }

    for (std::int64_t n = 10; n <= 2000; ++n) {
        const double S = watson_sum(n);
        if (!contains_guarded(watson_expansion(n, 2).bracket, S, S)) {
            ok = false;
            detail = " watson n=" + std::to_string(n);
            break;
        }
    }

    const bool coeffs =
        alternating_expansion_coefficient(1) == ExactRational{BigInt(1), BigInt(12)} &&
        alternating_expansion_coefficient(2) == ExactRational{BigInt(-7), BigInt(1440)} &&
        alternating_expansion_coefficient(3) == ExactRational{BigInt(31), BigInt(30240)} &&
        alternating_expansion_coefficient(4) ==
            ExactRational{BigInt(-2159), BigInt(4838400)};
    if (!coeffs) {
        ok = false;
        detail += " alternating coefficients";
    }
    report(6, ok, "expansion brackets nest around the oracle; coefficients exact" + detail);
}

// ---------------------------------------------------------------- criterion 7
void h_triple_agreement() {
    std::atomic<bool> ok{true};
    std::atomic<double> worst{0.0};
    parallel_for(3, 61, 0, [&](std::int64_t n) {
        for (int r = 1; r <= 5; ++r) {
            for (std::int64_t nu = 1; nu < n; ++nu) {
                const double a = h_coefficient(r, n, nu, HMethod::cot_derivative).value;
                const double b = h_coefficient(r, n, nu, HMethod::polygamma_pair).value;
                const double c = h_coefficient(r, n, nu, HMethod::bernoulli_cosine).value;
                const double scale = std::fabs(a);
                const double dev = std::max(std::fabs(a - b), std::fabs(a - c)) / scale;
                double prev = worst.load();
                while (dev > prev && !worst.compare_exchange_weak(prev, dev)) {}
                if (dev > 1e-9 || a >= 0.0 || b >= 0.0 || c >= 0.0) ok = false;
            }
        }
    });
    report(7, ok,
           "expansion coefficients negative, three routes within 1e-9 (worst " +
               sci(worst.load()) + ")");
}

// ---------------------------------------------------------------- criterion 8
// The trend check runs in binary128: past n ~ 800 the residual of the refined
// expansion sits below double rounding of both the oracle and the formula, so
// the mathematical decay is only observable at extended precision.
namespace f128 {

using real = __float128;

const real qpi = 2 * asinq((real)1);
const real qgamma =
    strtoflt128("0.57721566490153286060651209008240243104215933593992", nullptr);
const real qln2 = logq((real)2);

real oracle(std::int64_t n, std::int64_t nu) {
    real acc = 0;
    for (std::int64_t l = 1; l < n; ++l) {
        const real c = cosq(2 * qpi * (real)((nu * l) % n) / (real)n);
        const real s = sinq(qpi * (real)(l < n - l ? l : n - l) / (real)n);
        acc += c / s;
    }
    return acc;
}

real harmonic(std::int64_t k) {
    real acc = 0;
    for (std::int64_t j = 1; j <= k; ++j) acc += (real)1 / (real)j;
    return acc;
}

real refined(std::int64_t n, std::int64_t nu) {
    const real nn = (real)n;
    const real s = sinq(qpi * (real)nu / nn);
    const real v = (real)nu;
    const real f = -(4 * harmonic(2 * nu) - 2 * harmonic(nu) - 2 * logq(v) - 4 * qln2 -
                     2 * qgamma - 1 / (12 * v * v)) /
                   qpi;
    return -(2 * nn / qpi) * logq(2 * s) - qpi / (12 * nn * s * s) + nn * f +
           7 * qpi * qpi * qpi / (21600 * nn * nn * nn);
}

}  // namespace f128

void refined_trend() {
    bool ok = true;
    std::string detail = "errors";
    f128::real prev = 0;
    for (std::int64_t n : {200, 400, 800, 1600, 3200}) {
        const f128::real err = fabsq(f128::oracle(n, 10) - f128::refined(n, 10));
        char buf[48];
        quadmath_snprintf(buf, sizeof(buf), "%.3Qe", err);
        detail += std::string(" ") + buf;
        if (n > 200 && !(err * 4 <= prev)) ok = false;
        prev = err;
    }
    report(8, ok, "refined-expansion error falls >= 4x per doubling at nu = 10 (" +
                      detail + ")");
}

// ---------------------------------------------------------------- criterion 9
void pv_closure() {
    std::atomic<bool> ok{true};
    parallel_for(2, 41, 0, [&](std::int64_t n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const Evaluation series = pv_sum_series(n, k, 2000);
            if (!series.error_bracket->contains_within_rounding(
                    polya_vinogradov_direct(n, k)))
                ok = false;
        }
    });
    report(9, ok, "truncated series matches the direct sum inside its tail bracket, n <= 40");
}

}  // namespace

int main() {
    figure_values();
    approximation_error();
    cross_method();
    identity_suite();
    bounds_containment();
    expansion_bracketing();
    h_triple_agreement();
    refined_trend();
    pv_closure();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 9 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
