#include "cosec/asymptotics.hpp"

#include <quadmath.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cosec/bernoulli.hpp"
#include "cosec/direct_sums.hpp"
#include "cosec/kahan.hpp"
#include "cosec/special.hpp"

namespace cosec {

namespace {

constexpr double pi = std::numbers::pi;

BigInt factorial(int k) {
    BigInt f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
}

// (1 - 2^{1-2r}) B_{2r} / (2r)!, the exact coefficient of the main expansion.
ExactRational main_coefficient(int r) {
    const BigInt p = (BigInt(1) << (2 * r - 1));  // 2^{2r-1}
    const ExactRational one_minus = ExactRational(2 * p - 2, 2 * p);  // 1 - 2^{1-2r}
    return one_minus * bernoulli_number(2 * r) / ExactRational(factorial(2 * r), 1);
}

// The Bernoulli-cosine route computes a Fourier coefficient of a smooth
// polynomial: the sum is smaller than its terms by a factor growing like
// (2n)^{2r-1}, so it runs in binary128 to keep the published double accurate.
__float128 to_float128(const ExactRational& q) {
    const __float128 num = strtoflt128(q.numerator().str().c_str(), nullptr);
    const __float128 den = strtoflt128(q.denominator().str().c_str(), nullptr);
    return num / den;
}

std::shared_mutex& bernoulli_f128_mutex() {
    static std::shared_mutex m;
    return m;
}
std::vector<std::vector<__float128>>& bernoulli_f128_rows() {
    static std::vector<std::vector<__float128>> rows;
    return rows;
}

// coefficients C(m, j) B_j as binary128, cached per degree
void ensure_bernoulli_f128(int m) {
    {
        std::shared_lock lock(bernoulli_f128_mutex());
        if (m < static_cast<int>(bernoulli_f128_rows().size())) return;
    }
    std::unique_lock lock(bernoulli_f128_mutex());
    auto& rows = bernoulli_f128_rows();
    while (static_cast<int>(rows.size()) <= m) {
        const int deg = static_cast<int>(rows.size());
        std::vector<__float128> row(deg + 1);
        for (int j = 0; j <= deg; ++j)
            row[j] = to_float128(ExactRational(binomial(deg, j), 1) * bernoulli_number(j));
        rows.push_back(std::move(row));
    }
}

double h_bernoulli_cosine(int r, std::int64_t n, std::int64_t nu) {
    ensure_bernoulli_f128(2 * r);
    // the shared lock pins the row storage while concurrent callers extend it
    std::shared_lock lock(bernoulli_f128_mutex());
    const auto& row = bernoulli_f128_rows()[2 * r];
    const __float128 qpi = 2 * asinq(__float128(1));
    __float128 acc = 0;
    for (std::int64_t s = 1; s <= n; ++s) {
        const __float128 x = __float128(s) / __float128(n);
        __float128 poly = row[0];
        for (int j = 1; j <= 2 * r; ++j) poly = poly * x + row[j];
        const std::int64_t res = (2 * s * nu) % (2 * n);
        acc += poly * cosq(qpi * __float128(res) / __float128(n));
    }
    const __float128 sign = (r % 2 == 0) ? 1 : -1;
    __float128 power = 1;
    for (int t = 0; t < 2 * r - 1; ++t) power *= 2 * n;
    return static_cast<double>(sign * power / __float128(r) * acc);
}

ExpansionResult assemble(double leading, const std::vector<double>& terms) {
    // terms[0..N-2] enter the partial sum, terms[N-1] is the bracketed next term
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (std::fabs(terms[i]) > std::fabs(terms[i - 1]))
            throw nonconvergence_error(
                "expansion: term magnitudes grow past order " + std::to_string(i) +
                "; optimal truncation exceeded");
    }
    KahanAccumulator<> acc;
    acc += leading;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) acc += terms[i];
    ExpansionResult res;
    res.partial_sum = acc.result();
    res.next_term = terms.back();
    res.orders_used = static_cast<int>(terms.size()) - 1;
    res.bracket = RemainderBracket(res.partial_sum, res.partial_sum + res.next_term);
    return res;
}

}  // namespace

HCoefficient h_coefficient(int r, std::int64_t n, std::int64_t nu, HMethod method) {
    if (r < 1) throw domain_error("h_coefficient: r must be >= 1");
    if (n < 2) throw domain_error("h_coefficient: n must be >= 2");
    const std::int64_t m = ((nu % n) + n) % n;
    if (m == 0) throw pole_error("h_coefficient: pole at nu = 0 mod n");
    HCoefficient h;
    h.r = r;
    h.method = method;
    switch (method) {
        case HMethod::cot_derivative: {
            // odd-order ctg derivatives are even under x -> pi - x, so the
            // well-conditioned half of the angle range suffices
            const double phi = pi * static_cast<double>(std::min(m, n - m)) /
                               static_cast<double>(n);
            h.value = cot_derivative(r, phi);
            break;
        }
        case HMethod::polygamma_pair: {
            const double x = static_cast<double>(m) / static_cast<double>(n);
            h.value = -(polygamma(2 * r - 1, x) + polygamma(2 * r - 1, 1.0 - x)) /
                      std::pow(pi, 2 * r);
            break;
        }
        case HMethod::bernoulli_cosine: {
            h.value = h_bernoulli_cosine(r, n, m);
            break;
        }
    }
    return h;
}

ExpansionResult main_expansion(const SumQuery& q, int N) {
    if (N < 2) throw domain_error("main_expansion: N must be >= 2");
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    if (nu == 0) throw domain_error("main_expansion: nu = 0 mod n is the Watson case");
    const double s = detail::sin_pi_ratio(nu, n);
    const double leading = -(2.0 * static_cast<double>(n) / pi) * std::log(2.0 * s);
    std::vector<double> terms(N);
    for (int r = 1; r <= N; ++r) {
        const double h = h_coefficient(r, n, nu).value;
        terms[r - 1] = 2.0 * main_coefficient(r).to_double() *
                       std::pow(pi / static_cast<double>(n), 2 * r - 1) * h;
    }
    return assemble(leading, terms);
}

double rough_asymptotic(const SumQuery& q) {
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    if (nu == 0) throw domain_error("rough_asymptotic: nu = 0 mod n is the Watson case");
    if (6 * nu == n || 6 * nu == 5 * n)
        throw excluded_point_error(
            "rough_asymptotic: leading term vanishes at nu = n/6 and 5n/6");
    const double s = detail::sin_pi_ratio(nu, n);
    return -(2.0 * static_cast<double>(n) / pi) * std::log(2.0 * s);
}

ExactRational alternating_expansion_coefficient(int r) {
    if (r < 1) throw domain_error("alternating_expansion_coefficient: r must be >= 1");
    const BigInt p = (BigInt(1) << (2 * r - 1));
    const ExactRational b = bernoulli_number(2 * r);
    ExactRational c = ExactRational(2 * (p - 1) * (2 * p - 1), 1) * b * b /
                      ExactRational(BigInt(r) * factorial(2 * r), 1);
    return (r % 2 == 0) ? -c : c;  // (-1)^{r+1}
}

ExpansionResult alternating_expansion(std::int64_t n, int N) {
    if (n < 2) throw domain_error("alternating_expansion: n must be >= 2");
    if (n % 2 != 0)
        throw parity_error("alternating_expansion: the sum is exactly 0 for odd n");
    if (N < 2) throw domain_error("alternating_expansion: N must be >= 2");
    const double nn = static_cast<double>(n);
    const double leading = 2.0 * nn * std::log(2.0) / pi;
    std::vector<double> terms(N);
    for (int r = 1; r <= N; ++r)
        terms[r - 1] = alternating_expansion_coefficient(r).to_double() *
                       std::pow(pi / nn, 2 * r - 1);
    return assemble(leading, terms);
}

ExactRational watson_expansion_coefficient(int r) {
    if (r < 1) throw domain_error("watson_expansion_coefficient: r must be >= 1");
    const BigInt p = (BigInt(1) << (2 * r - 1));
    const ExactRational b = bernoulli_number(2 * r);
    ExactRational c = ExactRational(2 * (p - 1), 1) * b * b /
                      ExactRational(BigInt(r) * factorial(2 * r), 1);
    return (r % 2 == 1) ? -c : c;  // -(2/pi) pi^{2r} (-1)^{r+1} ... folded in
}

ExpansionResult watson_expansion(std::int64_t n, int N) {
    if (n < 2) throw domain_error("watson_expansion: n must be >= 2");
    if (N < 2) throw domain_error("watson_expansion: N must be >= 2");
    const double nn = static_cast<double>(n);
    const double leading = (2.0 * nn / pi) * (std::log(2.0 * nn / pi) + euler_gamma);
    std::vector<double> terms(N);
    for (int r = 1; r <= N; ++r)
        terms[r - 1] =
            watson_expansion_coefficient(r).to_double() * std::pow(pi / nn, 2 * r - 1);
    return assemble(leading, terms);
}

RemainderBracket bounds(const SumQuery& q) {
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    if (nu == 0) throw domain_error("bounds: nu = 0 mod n is the Watson case");
    const double nn = static_cast<double>(n);
    const double s = detail::sin_pi_ratio(nu, n);
    const double c = detail::cos_pi_ratio(nu, n);
    const double leading = -(2.0 * nn / pi) * std::log(2.0 * s);
    const double csc2 = 1.0 / (s * s);
    const double A = -pi / (12.0 * nn) * csc2;
    const double B = A + 7.0 * pi * pi * pi / (1440.0 * nn * nn * nn) *
                             (1.0 + 2.0 * c * c) * csc2 * csc2;
    return RemainderBracket(leading + A, leading + B);
}

RemainderBracket alternating_bounds(std::int64_t n) {
    if (n < 2) throw domain_error("alternating_bounds: n must be >= 2");
    if (n % 2 != 0)
        throw parity_error("alternating_bounds: the sum is exactly 0 for odd n");
    const double nn = static_cast<double>(n);
    const double base = 2.0 * nn * std::log(2.0) / pi + pi / (12.0 * nn);
    return RemainderBracket(base - 7.0 * pi * pi * pi / (1440.0 * nn * nn * nn), base);
}

double simple_approximation(const SumQuery& q) {
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    if (nu == 0) throw domain_error("simple_approximation: nu = 0 mod n is the Watson case");
    const double nn = static_cast<double>(n);
    const double s = detail::sin_pi_ratio(nu, n);
    const double v = static_cast<double>(nu);
    return -(2.0 * nn / pi) * std::log(2.0 * s) - pi / (12.0 * nn * s * s) +
           7.0 * nn / (480.0 * pi * v * v * v * v);
}

double f_nu(std::int64_t nu) {
    if (nu < 1) throw domain_error("f_nu: nu must be >= 1");
    const double v = static_cast<double>(nu);
    return -(4.0 * harmonic(2 * nu) - 2.0 * harmonic(nu) - 2.0 * std::log(v) -
             4.0 * std::log(2.0) - 2.0 * euler_gamma - 1.0 / (12.0 * v * v)) /
           pi;
}

Evaluation refined_expansion(const SumQuery& q) {
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    if (nu == 0) throw domain_error("refined_expansion: nu = 0 mod n is the Watson case");
    const double nn = static_cast<double>(n);
    const double s = detail::sin_pi_ratio(nu, n);
    Evaluation ev;
    ev.method = Method::asymptotic_refined;
    ev.value = -(2.0 * nn / pi) * std::log(2.0 * s) - pi / (12.0 * nn * s * s) +
               nn * f_nu(nu) + 7.0 * pi * pi * pi / (21600.0 * nn * nn * nn);
    return ev;
}

}  // namespace cosec
