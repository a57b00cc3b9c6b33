#include "cosec/direct_sums.hpp"

#include <cmath>
#include <numbers>

#include "cosec/kahan.hpp"

namespace cosec {

namespace {
constexpr double pi = std::numbers::pi;
}

namespace detail {

double sin_pi_ratio(std::int64_t j, std::int64_t n) {
    std::int64_t r = j % (2 * n);
    if (r < 0) r += 2 * n;
    double sign = 1.0;
    if (r >= n) {
        r -= n;
        sign = -1.0;
    }
    const std::int64_t m = std::min(r, n - r);  // sin(pi r/n) = sin(pi (n-r)/n)
    return sign * std::sin(pi * static_cast<double>(m) / static_cast<double>(n));
}

double cos_pi_ratio(std::int64_t j, std::int64_t n) {
    std::int64_t r = j % (2 * n);
    if (r < 0) r += 2 * n;
    if (r > n) r = 2 * n - r;  // cos is even around 0 and 2pi
    return std::cos(pi * static_cast<double>(r) / static_cast<double>(n));
}

double csc_pi_ratio(std::int64_t j, std::int64_t n) {
    const double s = sin_pi_ratio(j, n);
    if (s == 0.0) throw pole_error("csc: pole at integer multiple of pi");
    return 1.0 / s;
}

double cot_pi_ratio(std::int64_t j, std::int64_t n) {
    std::int64_t r = j % n;  // ctg has period pi
    if (r < 0) r += n;
    if (r == 0) throw pole_error("ctg: pole at integer multiple of pi");
    // ctg(pi - x) = -ctg(x); evaluate on the well-conditioned half
    if (2 * r > n) {
        const double a = pi * static_cast<double>(n - r) / static_cast<double>(n);
        return -std::cos(a) / std::sin(a);
    }
    const double a = pi * static_cast<double>(r) / static_cast<double>(n);
    return std::cos(a) / std::sin(a);
}

}  // namespace detail

double watson_sum(std::int64_t n) {
    if (n < 2) throw domain_error("watson_sum: n must be >= 2");
    KahanAccumulator<> acc;
    // terms l and n-l are equal; summing each pair once halves the rounding load
    for (std::int64_t l = 1; 2 * l < n; ++l)
        acc += 2.0 / std::sin(pi * static_cast<double>(l) / static_cast<double>(n));
    if (n % 2 == 0) acc += 1.0;  // middle term csc(pi/2)
    return acc.result();
}

double cos_cosecant_sum(const SumQuery& q) {
    if (q.is_watson_case()) return watson_sum(q.n);
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    KahanAccumulator<> acc;
    for (std::int64_t l = 1; l < n; ++l) {
        const double c = detail::cos_pi_ratio(2 * nu * l, n);
        const double s = std::sin(pi * static_cast<double>(std::min(l, n - l)) /
                                  static_cast<double>(n));
        acc += c / s;
    }
    return acc.result();
}

double alternating_cosecant_sum(std::int64_t n) {
    if (n < 2) throw domain_error("alternating_cosecant_sum: n must be >= 2");
    if (n % 2 == 1) return 0.0;  // symmetry: terms cancel in pairs
    return alternating_cosecant_sum_raw(n);
}

double alternating_cosecant_sum_raw(std::int64_t n) {
    if (n < 2) throw domain_error("alternating_cosecant_sum: n must be >= 2");
    KahanAccumulator<> acc;
    for (std::int64_t l = 1; l < n; ++l) {
        const double s = std::sin(pi * static_cast<double>(std::min(l, n - l)) /
                                  static_cast<double>(n));
        acc += (l % 2 == 1 ? 1.0 : -1.0) / s;
    }
    return acc.result();
}

double csc_squared_sum(std::int64_t n) {
    if (n < 2) throw domain_error("csc_squared_sum: n must be >= 2");
    KahanAccumulator<> acc;
    for (std::int64_t l = 1; 2 * l < n; ++l) {
        const double s = std::sin(pi * static_cast<double>(l) / static_cast<double>(n));
        acc += 2.0 / (s * s);
    }
    if (n % 2 == 0) acc += 1.0;
    const double direct = acc.result();
    const double closed =
        (static_cast<double>(n) * static_cast<double>(n) - 1.0) / 3.0;
    const double tol = 1e-12 * static_cast<double>(n) * static_cast<double>(n);
    if (std::fabs(direct - closed) > tol)
        throw consistency_error("csc_squared_sum: direct sum disagrees with (n^2-1)/3");
    return closed;
}

double cotangent_partial_sum(std::int64_t n, std::int64_t m) {
    if (n < 2) throw domain_error("cotangent_partial_sum: n must be >= 2");
    if (m < 0) throw domain_error("cotangent_partial_sum: m must be >= 0");
    KahanAccumulator<> acc;
    for (std::int64_t l = 1; l <= m; ++l) acc += detail::cot_pi_ratio(2 * l - 1, 2 * n);
    return acc.result();
}

double odd_sine_sum(std::int64_t n, std::int64_t r) {
    if (n < 2) throw domain_error("odd_sine_sum: n must be >= 2");
    if (r < 1) throw domain_error("odd_sine_sum: r must be >= 1");
    KahanAccumulator<> acc;
    for (std::int64_t l = 1; l < n; ++l) acc += detail::sin_pi_ratio(r * l, n);
    return acc.result();
}

double dirichlet_cos_sum(std::int64_t n, double phi) {
    if (n < 2) throw domain_error("dirichlet_cos_sum: n must be >= 2");
    const double half = std::sin(0.5 * phi);
    if (half == 0.0) throw pole_error("dirichlet_cos_sum: phi = 0 mod 2pi");
    const double nn = static_cast<double>(n);
    return std::sin(nn * phi - 0.5 * phi) / (2.0 * half) - 0.5;
}

double dirichlet_sin_sum(std::int64_t n, double phi) {
    if (n < 2) throw domain_error("dirichlet_sin_sum: n must be >= 2");
    const double half = std::sin(0.5 * phi);
    if (half == 0.0) throw pole_error("dirichlet_sin_sum: phi = 0 mod 2pi");
    const double nn = static_cast<double>(n);
    return -std::cos(nn * phi - 0.5 * phi) / (2.0 * half) +
           0.5 * std::cos(0.5 * phi) / half;
}

double polya_vinogradov_direct(std::int64_t n, std::int64_t k) {
    if (n < 2) throw domain_error("polya_vinogradov_direct: n must be >= 2");
    if (k < 1 || k >= n) throw domain_error("polya_vinogradov_direct: need 1 <= k <= n-1");
    KahanAccumulator<> acc;
    for (std::int64_t l = 1; l < n; ++l) {
        std::int64_t j = (l * k) % n;  // |sin(pi j/n)| has period n in j
        j = std::min(j, n - j);
        const double num = std::sin(pi * static_cast<double>(j) / static_cast<double>(n));
        const double den = std::sin(pi * static_cast<double>(std::min(l, n - l)) /
                                    static_cast<double>(n));
        acc += num / den;
    }
    return acc.result();
}

const char* to_string(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::finite_series: return "finite_series";
        case Method::infinite_series: return "infinite_series";
        case Method::integral_poisson: return "integral_poisson";
        case Method::integral_hyperbolic: return "integral_hyperbolic";
        case Method::asymptotic_main: return "asymptotic_main";
        case Method::asymptotic_refined: return "asymptotic_refined";
        case Method::approximation: return "approximation";
    }
    return "unknown";
}

}  // namespace cosec
