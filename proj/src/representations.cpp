#include "cosec/representations.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cosec/direct_sums.hpp"
#include "cosec/kahan.hpp"
#include "cosec/special.hpp"

namespace cosec {

namespace {

constexpr double pi = std::numbers::pi;

// Combined digamma term of the infinite series,
//   D(l) = Psi((l-1)/2n) - Psi((l+1)/2n) - Psi((l-1)/n) + Psi((l+1)/n),
// independent of nu and ~ -n/(l^2 - 1) at large l.  Once every argument is in
// the Stirling range the logarithms cancel exactly and D collapses to a short
// even series in 1/(l -+ 1), which avoids four full digamma evaluations on the
// long tail of the series.
double digamma_combo(std::int64_t l, std::int64_t n) {
    const double nn = static_cast<double>(n);
    if (l - 1 >= 16 * n) {
        // B_{2r}/(2r), r = 1..8
        static constexpr double b_over_2r[8] = {
            1.0 / 12.0,      -1.0 / 120.0,     1.0 / 252.0, -1.0 / 240.0,
            5.0 / 660.0,     -691.0 / 32760.0, 7.0 / 84.0,  -3617.0 / 8160.0};
        const double u2 = 1.0 / (static_cast<double>(l - 1) * static_cast<double>(l - 1));
        const double v2 = 1.0 / (static_cast<double>(l + 1) * static_cast<double>(l + 1));
        const double n2 = nn * nn;
        double acc = -nn / (static_cast<double>(l) * static_cast<double>(l) - 1.0);
        double up = u2, vp = v2;      // u^{2r}, v^{2r}
        double npow = n2;             // n^{2r}
        double four = 4.0;            // 2^{2r}
        for (int r = 1; r <= 8; ++r) {
            acc -= b_over_2r[r - 1] * npow * (four - 1.0) * (up - vp);
            up *= u2;
            vp *= v2;
            npow *= n2;
            four *= 4.0;
        }
        return acc;
    }
    return digamma((l - 1) / (2.0 * nn)) - digamma((l + 1) / (2.0 * nn)) -
           digamma((l - 1) / nn) + digamma((l + 1) / nn);
}

// |D(l)| <= 2n/(l^2 - 1) holds on the whole range; used for the tail bound.
double combo_magnitude_bound(double L, double n) { return 2.0 * n / (L * L - 1.0); }

struct SeriesState {
    std::int64_t nu = 0;
    double base = 0;        // leading log term plus the fixed digamma pair
    double prefactor = 0;   // -(2/pi) csc(2 pi nu / n)
    double csc_half = 0;    // csc(pi nu / n), Dirichlet-kernel bound factor
    KahanAccumulator<> inner;
    double last_term = 0;
    bool singular = false;
    bool done = false;
    long long terms = 0;
    double tail = 0;
    std::int64_t residue = 0;  // (nu * l) mod n for the current l
};

}  // namespace

double finite_series_eval(const SumQuery& q) {
    return watson_sum(q.n) - 2.0 * cotangent_partial_sum(q.n, q.nu_mod);
}

double finite_series_variants(const SumQuery& q, FiniteVariant variant) {
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    const double S = watson_sum(n);
    KahanAccumulator<> acc;
    switch (variant) {
        case FiniteVariant::sin2: {
            for (std::int64_t l = 1; l < n; ++l) {
                const double s = detail::sin_pi_ratio(nu * l, n);
                acc += s * s * detail::csc_pi_ratio(l, n);
            }
            return S - 2.0 * acc.result();
        }
        case FiniteVariant::cos2: {
            for (std::int64_t l = 1; l < n; ++l) {
                const double c = detail::cos_pi_ratio(nu * l, n);
                acc += c * c * detail::csc_pi_ratio(l, n);
            }
            return -S + 2.0 * acc.result();
        }
        case FiniteVariant::ctg_product: {
            for (std::int64_t l = 1; l < n; ++l) {
                acc += detail::cot_pi_ratio(l, n) * detail::sin_pi_ratio(l * nu, n) *
                       detail::sin_pi_ratio(l * (nu + 1), n);
            }
            return S - detail::cot_pi_ratio(1, 2 * n) + detail::cot_pi_ratio(2 * nu + 1, 2 * n) -
                   2.0 * acc.result();
        }
    }
    throw domain_error("finite_series_variants: unknown variant");
}

std::vector<Evaluation> infinite_series_sweep(std::int64_t n,
                                              const std::vector<std::int64_t>& nus,
                                              const PrecisionPolicy& policy) {
    if (n < 2) throw domain_error("infinite_series: n must be >= 2");
    policy.validate();
    const double nn = static_cast<double>(n);
    const double fixed = digamma(2.0 / nn) - digamma(1.0 / nn);

    // sin(2 pi m / n) for the residue classes m = (nu l) mod n
    std::vector<double> sin_tab(n);
    for (std::int64_t m = 0; m < n; ++m) sin_tab[m] = detail::sin_pi_ratio(2 * m, n);

    std::vector<SeriesState> states(nus.size());
    std::size_t active = 0;
    for (std::size_t i = 0; i < nus.size(); ++i) {
        SeriesState& st = states[i];
        const SumQuery q(n, nus[i]);
        st.nu = q.nu_mod;
        if (q.is_watson_case() || 2 * st.nu == n) {
            st.singular = true;
            continue;
        }
        const double s_half = detail::sin_pi_ratio(st.nu, n);
        st.base = (2.0 * nn / pi) * std::log(2.0 * s_half) - (2.0 / pi) * fixed;
        st.prefactor = -(2.0 / pi) * detail::csc_pi_ratio(2 * st.nu, n);
        st.csc_half = 1.0 / s_half;
        st.residue = (2 * st.nu) % n;  // l starts at 2
        ++active;
    }

    std::int64_t l = 2;
    while (active > 0) {
        if (l > policy.max_terms + 1)
            throw nonconvergence_error("infinite_series: max_terms exceeded at n = " +
                                       std::to_string(n));
        const double D = digamma_combo(l, n);
        for (auto& st : states) {
            if (st.singular || st.done) continue;
            const double term = D * sin_tab[st.residue];
            st.inner += term;
            st.last_term = st.prefactor * term;
            st.terms = l - 1;
            st.residue += st.nu;
            if (st.residue >= n) st.residue -= n;
            // Dirichlet-test tail: |sum_{j>l}| <= 2 |D(l+1)| csc(pi nu / n)
            const double value = st.base + st.prefactor * st.inner.result();
            const double tail = std::fabs(st.prefactor) * 2.0 * st.csc_half *
                                combo_magnitude_bound(static_cast<double>(l) + 1.0, nn);
            const double target = policy.target(value);
            if (tail <= target && std::fabs(st.last_term) <= target) {
                st.done = true;
                st.tail = tail;
                --active;
            }
        }
        ++l;
    }

    std::vector<Evaluation> out(nus.size());
    for (std::size_t i = 0; i < nus.size(); ++i) {
        const SeriesState& st = states[i];
        Evaluation ev;
        ev.method = Method::infinite_series;
        if (st.singular) {
            ev.terms_used = -1;
            out[i] = ev;
            continue;
        }
        ev.value = st.base + st.prefactor * st.inner.result();
        ev.terms_used = st.terms;
        ev.error_bracket = RemainderBracket(ev.value - st.tail, ev.value + st.tail);
        out[i] = ev;
    }
    return out;
}

Evaluation infinite_series_eval(const SumQuery& q, const PrecisionPolicy& policy) {
    if (q.is_watson_case())
        throw domain_error("infinite_series: undefined for nu = 0 mod n (Watson case)");
    if (2 * q.nu_mod == q.n)
        throw singularity_error("infinite_series: representation singular at nu = n/2");
    return infinite_series_sweep(q.n, {q.nu}, policy)[0];
}

Evaluation integral_eval_poisson(const SumQuery& q, const QuadratureSpec& spec) {
    spec.validate();
    if (q.is_watson_case())
        throw domain_error("integral_poisson: undefined for nu = 0 mod n");
    const std::int64_t n = q.n;
    const double nn = static_cast<double>(n);
    const double c = detail::cos_pi_ratio(2 * q.nu_mod, n);
    const auto f = [c, n](double x) {
        const double xn1 = std::pow(x, static_cast<double>(n - 1));
        const double xn = xn1 * x;
        return ((1.0 + xn) * c - xn1 - x) / ((1.0 + xn) * (x * x - 2.0 * x * c + 1.0));
    };
    const QuadratureResult r =
        integrate_adaptive(f, 0.0, 1.0, spec.target_tol, spec.max_subdivisions);
    Evaluation ev;
    ev.method = Method::integral_poisson;
    ev.value = (2.0 * nn / pi) * r.value;
    ev.terms_used = r.evaluations;
    const double err = (2.0 * nn / pi) * r.error_estimate;
    ev.error_bracket = RemainderBracket(ev.value - err, ev.value + err);
    return ev;
}

Evaluation integral_eval_hyperbolic(const SumQuery& q, const QuadratureSpec& spec) {
    spec.validate();
    if (q.is_watson_case())
        throw domain_error("integral_hyperbolic: undefined for nu = 0 mod n");
    const std::int64_t n = q.n;
    const std::int64_t nu = q.nu_mod;
    const double nn = static_cast<double>(n);
    const double c = detail::cos_pi_ratio(2 * nu, n);
    // x = -ln u maps the exponentially decaying integrand onto (0, 1):
    //   ch[x(n/2-1)] / (ch(xn/2)(ch x - cos t)) dx
    //     -> 2u(1 + u^{n-2}) / ((1 + u^n)(u^2 - 2u cos t + 1)) du
    const auto f = [c, n](double u) {
        const double un2 = std::pow(u, static_cast<double>(n - 2));
        return 2.0 * u * (1.0 + un2) / ((1.0 + un2 * u * u) * (u * u - 2.0 * u * c + 1.0));
    };
    const QuadratureResult r =
        integrate_adaptive(f, 0.0, 1.0, spec.target_tol, spec.max_subdivisions);
    // Boundary term (n - 2 nu) ctg(2 pi nu / n); at nu = n/2 the 0 * pole form
    // has the finite limit -n/pi.
    const double boundary =
        (2 * nu == n) ? -nn / pi
                      : static_cast<double>(n - 2 * nu) * detail::cot_pi_ratio(2 * nu, n);
    Evaluation ev;
    ev.method = Method::integral_hyperbolic;
    ev.value = boundary - (nn / pi) * r.value;
    ev.terms_used = r.evaluations;
    const double err = (nn / pi) * r.error_estimate;
    ev.error_bracket = RemainderBracket(ev.value - err, ev.value + err);
    return ev;
}

Evaluation pv_sum_series(std::int64_t n, std::int64_t k, std::int64_t R) {
    if (n < 2) throw domain_error("pv_sum_series: n must be >= 2");
    if (k < 1 || k >= n) throw domain_error("pv_sum_series: need 1 <= k <= n-1");
    if (R < 1) throw domain_error("pv_sum_series: need R >= 1");
    const double S = watson_sum(n);
    std::vector<double> table(n);
    table[0] = S;  // nu = 0 mod n contributes the Watson sum
    for (std::int64_t m = 1; m < n; ++m) table[m] = cos_cosecant_sum(SumQuery(n, m));
    KahanAccumulator<> acc;
    std::int64_t residue = k % n;
    for (std::int64_t r = 1; r <= R; ++r) {
        acc += table[residue] / (4.0 * static_cast<double>(r) * static_cast<double>(r) - 1.0);
        residue += k;
        if (residue >= n) residue -= n;
    }
    Evaluation ev;
    ev.method = Method::infinite_series;
    ev.value = 2.0 * S / pi - (4.0 / pi) * acc.result();
    ev.terms_used = R;
    // |C_n| <= S_n and sum_{r>R} 1/(4r^2-1) telescopes to 1/(2(2R+1))
    const double tail = 2.0 * S / (pi * (2.0 * static_cast<double>(R) + 1.0));
    ev.error_bracket = RemainderBracket(ev.value - tail, ev.value + tail);
    return ev;
}

double four_digamma_integral(double alpha, double beta, double b) {
    if (!(b > 0)) throw domain_error("four_digamma_integral: b must be > 0");
    if (!(alpha + b - beta > 0))
        throw domain_error("four_digamma_integral: convergence requires alpha + b - beta > 0");
    const double q = 0.25 / b;
    return q * (digamma(0.75 + (alpha + beta) * q) - digamma(0.25 + (alpha - beta) * q) +
                digamma(0.75 + (alpha - beta) * q) - digamma(0.25 + (alpha + beta) * q));
}

}  // namespace cosec
