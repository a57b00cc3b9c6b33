#include "cosec/special.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <vector>

#include "cosec/bernoulli.hpp"
#include "cosec/errors.hpp"
#include "cosec/kahan.hpp"

namespace cosec {

namespace {

constexpr double pi = std::numbers::pi;

// Shift threshold and term count of the digamma/log-gamma Stirling series.
// At x >= 8 with eight Bernoulli terms the first neglected digamma term is
// |B_18|/(18 x^18) < 2e-16, below every tolerance used here.
constexpr double stirling_threshold = 8.0;
constexpr int stirling_terms = 8;

// B_{2r}/(2r) and B_{2r}/((2r)(2r-1)) for r = 1..stirling_terms, exact then rounded.
const double* digamma_stirling_coeffs() {
    static const std::vector<double> c = [] {
        std::vector<double> v;
        for (int r = 1; r <= stirling_terms; ++r)
            v.push_back((bernoulli_number(2 * r) / ExactRational(2 * r)).to_double());
        return v;
    }();
    return c.data();
}

const double* loggamma_stirling_coeffs() {
    static const std::vector<double> c = [] {
        std::vector<double> v;
        for (int r = 1; r <= stirling_terms; ++r)
            v.push_back((bernoulli_number(2 * r) /
                         ExactRational(static_cast<long long>(2 * r) * (2 * r - 1)))
                            .to_double());
        return v;
    }();
    return c.data();
}

int harmonic_exact_threshold() { return 256; }

std::shared_mutex& zeta_mutex() {
    static std::shared_mutex m;
    return m;
}
std::vector<double>& zeta_table() {
    static std::vector<double> t;  // index s, valid from s = 2
    return t;
}

std::shared_mutex& cot_mutex() {
    static std::shared_mutex m;
    return m;
}
// cot_polys()[m] holds the integer coefficients (ascending powers) of the
// polynomial P_m with (d/dphi)^m ctg = P_m(ctg); cot_polys_dbl() mirrors them
// as doubles for evaluation.
std::vector<std::vector<BigInt>>& cot_polys() {
    static std::vector<std::vector<BigInt>> p;
    return p;
}
std::vector<std::vector<double>>& cot_polys_dbl() {
    static std::vector<std::vector<double>> p;
    return p;
}

void ensure_cot_polys(int m) {
    {
        std::shared_lock lock(cot_mutex());
        if (static_cast<int>(cot_polys().size()) > m) return;
    }
    std::unique_lock lock(cot_mutex());
    auto& polys = cot_polys();
    auto& polysd = cot_polys_dbl();
    if (polys.empty()) {
        polys.push_back({BigInt(0), BigInt(1)});  // P_0(c) = c
        polysd.push_back({0.0, 1.0});
    }
    while (static_cast<int>(polys.size()) <= m) {
        const auto& prev = polys.back();
        const int deg = static_cast<int>(prev.size()) - 1;
        // P' has degree deg-1, multiplied by -(1 + c^2) -> degree deg+1
        std::vector<BigInt> next(deg + 2, BigInt(0));
        for (int k = 1; k <= deg; ++k) {
            if (prev[k].is_zero()) continue;
            const BigInt d = prev[k] * k;
            next[k - 1] -= d;
            next[k + 1] -= d;
        }
        std::vector<double> nextd(next.size());
        for (std::size_t i = 0; i < next.size(); ++i) nextd[i] = next[i].convert_to<double>();
        polys.push_back(std::move(next));
        polysd.push_back(std::move(nextd));
    }
}

}  // namespace

ExactRational harmonic_exact(int k) {
    if (k < 0) throw domain_error("harmonic: k must be >= 0");
    ExactRational acc(0);
    for (int j = 1; j <= k; ++j) acc += ExactRational(BigInt(1), BigInt(j));
    return acc;
}

double harmonic(long long k) {
    if (k < 0) throw domain_error("harmonic: k must be >= 0");
    const int threshold = harmonic_exact_threshold();
    if (k <= threshold) return harmonic_exact(static_cast<int>(k)).to_double();
    KahanAccumulator<> acc;
    acc += harmonic_exact(threshold).to_double();
    for (long long j = threshold + 1; j <= k; ++j) acc += 1.0 / static_cast<double>(j);
    return acc.result();
}

double digamma(double x) {
    if (!(x > 0)) throw domain_error("digamma: argument must be > 0");
    double shift = 0.0;
    while (x < stirling_threshold) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double* c = digamma_stirling_coeffs();
    const double inv2 = 1.0 / (x * x);
    double p = inv2;
    double tail = 0.0;
    for (int r = 0; r < stirling_terms; ++r) {
        tail += c[r] * p;
        p *= inv2;
    }
    return shift + std::log(x) - 0.5 / x - tail;
}

double digamma_rational(long long l, long long n) {
    if (n < 2 || l < 1 || l >= n)
        throw domain_error("digamma_rational: need 0 < l/n < 1 with n >= 2");
    KahanAccumulator<> acc;
    // cos(2 pi nu l / n) and sin(pi nu / n) are symmetric under nu -> n - nu,
    // so the log-sine sum collapses to the lower half; the middle term of an
    // even n vanishes since ln sin(pi/2) = 0.
    for (long long nu = 1; 2 * nu < n; ++nu) {
        const long long res = (2 * nu * l) % (2 * n);
        const double c = std::cos(pi * static_cast<double>(res) / static_cast<double>(n));
        acc += 2.0 * c * std::log(std::sin(pi * static_cast<double>(nu) / static_cast<double>(n)));
    }
    const double cot = std::cos(pi * static_cast<double>(l) / static_cast<double>(n)) /
                       std::sin(pi * static_cast<double>(l) / static_cast<double>(n));
    return -euler_gamma - std::log(2.0 * static_cast<double>(n)) - 0.5 * pi * cot + acc.result();
}

SeriesValue digamma_small_series(double x, int terms) {
    if (!(x > 0)) throw domain_error("digamma_small_series: argument must be > 0");
    if (terms < 3) throw domain_error("digamma_small_series: need at least 3 terms");
    KahanAccumulator<> acc;
    acc += -1.0 / x;
    acc += -euler_gamma;
    double xp = x;  // x^{m-1}
    double sgn = 1.0;
    for (int m = 2; m < terms; ++m) {
        acc += sgn * xp * riemann_zeta(m);
        xp *= x;
        sgn = -sgn;
    }
    const double value = acc.result();
    const double next = sgn * xp * riemann_zeta(terms);
    return SeriesValue{value, RemainderBracket(value, value + next)};
}

double hurwitz_zeta(int s, double x) {
    if (s < 2) throw domain_error("hurwitz_zeta: integer exponent must be >= 2");
    if (!(x > 0)) throw domain_error("hurwitz_zeta: argument must be > 0");
    // Shift until the Euler-Maclaurin tail at y = x + L converges fast; the
    // ratio of consecutive tail terms is ~((s+2j)/(2 pi y))^2.
    const double y_min = std::max(16.0, static_cast<double>(s));
    long long L = 0;
    if (x < y_min) L = static_cast<long long>(std::ceil(y_min - x));
    KahanAccumulator<> acc;
    for (long long l = 0; l < L; ++l) acc += std::pow(x + static_cast<double>(l), -s);
    const double y = x + static_cast<double>(L);
    acc += std::pow(y, 1 - s) / (s - 1);
    acc += 0.5 * std::pow(y, -s);
    // B_{2j}/(2j)! for the correction terms, exact then rounded once.
    static const std::vector<double> b2j_over_fact = [] {
        std::vector<double> v;
        for (int j = 1; j <= 12; ++j) {
            BigInt f = 1;
            for (int t = 2; t <= 2 * j; ++t) f *= t;
            v.push_back((bernoulli_number(2 * j) / ExactRational(f, 1)).to_double());
        }
        return v;
    }();
    double rising = s;  // s(s+1)...(s+2j-2), one factor at j=1
    double ypow = std::pow(y, -s - 1);
    for (int j = 1; j <= 12; ++j) {
        const double term = b2j_over_fact[j - 1] * rising * ypow;
        acc += term;
        if (std::fabs(term) < 1e-18 * std::fabs(acc.sum)) break;
        rising *= static_cast<double>(s + 2 * j - 1) * static_cast<double>(s + 2 * j);
        ypow /= y * y;
    }
    return acc.result();
}

double riemann_zeta(int s) {
    if (s < 2) throw domain_error("riemann_zeta: integer argument must be >= 2");
    {
        std::shared_lock lock(zeta_mutex());
        const auto& t = zeta_table();
        if (s < static_cast<int>(t.size()) && t[s] != 0.0) return t[s];
    }
    const double v = hurwitz_zeta(s, 1.0);
    std::unique_lock lock(zeta_mutex());
    auto& t = zeta_table();
    if (s >= static_cast<int>(t.size())) t.resize(s + 1, 0.0);
    t[s] = v;
    return v;
}

double polygamma(int m, double x) {
    if (m < 1) throw domain_error("polygamma: order must be >= 1");
    if (!(x > 0)) throw domain_error("polygamma: argument must be > 0");
    double fact = 1.0;
    for (int j = 2; j <= m; ++j) fact *= j;
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    return sign * fact * hurwitz_zeta(m + 1, x);
}

double log_gamma(double x) {
    if (!(x > 0)) throw domain_error("log_gamma: argument must be > 0");
    KahanAccumulator<> shift;
    while (x < stirling_threshold) {
        shift += -std::log(x);
        x += 1.0;
    }
    const double* c = loggamma_stirling_coeffs();
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double p = inv;
    double tail = 0.0;
    for (int r = 0; r < stirling_terms; ++r) {
        tail += c[r] * p;
        p *= inv2;
    }
    return shift.result() + (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * pi) + tail;
}

double zeta_even(int r) {
    if (r < 1) throw domain_error("zeta_even: order must be >= 1");
    if (r > 150) throw domain_error("zeta_even: order too large for double range");
    BigInt fact2r = 1;
    for (int t = 2; t <= 2 * r; ++t) fact2r *= t;
    ExactRational ratio = bernoulli_number(2 * r) / ExactRational(2 * fact2r, 1);
    const double sign = (r % 2 == 1) ? 1.0 : -1.0;  // (-1)^{r+1}
    // zeta(2r) > 1: keep the two-rounding product from dipping a half ulp under
    return std::max(1.0, sign * ratio.to_double() * std::pow(2.0 * pi, 2 * r));
}

double cot_derivative(int r, double phi) {
    if (r < 1) throw domain_error("cot_derivative: order must be >= 1");
    const double s = std::sin(phi);
    if (s == 0.0) throw pole_error("cot_derivative: cotangent pole at this angle");
    const int m = 2 * r - 1;
    ensure_cot_polys(m);
    const double c = std::cos(phi) / s;
    std::shared_lock lock(cot_mutex());
    const auto& coeff = cot_polys_dbl()[m];
    double acc = coeff.back();
    for (int k = static_cast<int>(coeff.size()) - 2; k >= 0; --k) acc = acc * c + coeff[k];
    return acc;
}

std::vector<BigInt> cot_derivative_polynomial(int derivative_order) {
    if (derivative_order < 0) throw domain_error("cot_derivative_polynomial: order must be >= 0");
    ensure_cot_polys(derivative_order);
    std::shared_lock lock(cot_mutex());
    return cot_polys()[derivative_order];
}

}  // namespace cosec
