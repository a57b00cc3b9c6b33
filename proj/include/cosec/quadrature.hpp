#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "cosec/errors.hpp"

namespace cosec {

// Quadrature request: the interval scheme subdivides [a, b] adaptively; the
// semi-infinite scheme is the same engine applied after the x = -ln u map,
// which turns exponential decay on [0, inf) into a smooth integrand on (0, 1].
struct QuadratureSpec {
    enum class Scheme { adaptive_interval, semi_infinite_decay };

    Scheme scheme = Scheme::adaptive_interval;
    double target_tol = 1e-12;
    int max_subdivisions = 1 << 16;

    static QuadratureSpec interval(double tol = 1e-12) {
        return QuadratureSpec{Scheme::adaptive_interval, tol, 1 << 16};
    }
    static QuadratureSpec semi_infinite(double tol = 1e-12) {
        return QuadratureSpec{Scheme::semi_infinite_decay, tol, 1 << 16};
    }

    void validate() const {
        if (!(target_tol > 0) || max_subdivisions < 1)
            throw domain_error("QuadratureSpec: target_tol > 0 and max_subdivisions >= 1 required");
    }
};

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    long long evaluations = 0;
};

namespace quad_detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xgk[i]);
        fv[14 - i] = f(c + h * xgk[i]);
    }
    fv[7] = f(c);
    double k = 0, g = 0;
    for (int i = 0; i < 7; ++i) k += wgk[i] * (fv[i] + fv[14 - i]);
    k += wgk[7] * fv[7];
    for (int i = 0; i < 3; ++i) g += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    g += wg[3] * fv[7];
    kronrod = k * h;
    err = std::fabs((k - g) * h);
}

struct Panel {
    double err;
    double a, b, value;
    std::uint64_t seq;  // tie-break for deterministic ordering
    bool operator<(const Panel& o) const {
        if (err != o.err) return err < o.err;
        return seq > o.seq;
    }
};

}  // namespace quad_detail

// Worst-panel-first adaptive bisection with the nested 7-15 rule.  Throws
// nonconvergence_error when the panel budget is exhausted before the mixed
// absolute/relative target is met.
template <typename F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double target_tol,
                                    int max_panels) {
    using quad_detail::Panel;
    double v, e;
    quad_detail::gk15(f, a, b, v, e);
    std::priority_queue<Panel> heap;
    std::uint64_t seq = 0;
    heap.push(Panel{e, a, b, v, seq++});
    double total = v, total_err = e;
    long long evals = 15;
    int panels = 1;
    while (true) {
        const double tol = target_tol * std::max(1.0, std::fabs(total));
        if (total_err <= tol) break;
        if (panels >= max_panels)
            throw nonconvergence_error("integrate_adaptive: subdivision limit reached");
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        double v1, e1, v2, e2;
        quad_detail::gk15(f, worst.a, mid, v1, e1);
        quad_detail::gk15(f, mid, worst.b, v2, e2);
        evals += 30;
        panels += 1;
        heap.push(Panel{e1, worst.a, mid, v1, seq++});
        heap.push(Panel{e2, mid, worst.b, v2, seq++});
        total += v1 + v2;
        total_err += e1 + e2;
    }
    // Final pass: re-sum the surviving panels so the result does not carry
    // the rounding drift of the incremental +/- bookkeeping.
    double sum = 0, comp = 0, err_sum = 0;
    while (!heap.empty()) {
        const Panel p = heap.top();
        heap.pop();
        const double y = p.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        err_sum += p.err;
    }
    return QuadratureResult{sum, err_sum, evals};
}

}  // namespace cosec
