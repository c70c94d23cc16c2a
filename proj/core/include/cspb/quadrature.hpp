#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cspb/algebra.hpp"
#include "cspb/errors.hpp"

namespace cspb {

struct QuadratureResult {
    cplx value{};
    double abs_error = 0;   // accumulated Kronrod error estimate
    std::size_t evals = 0;
    bool converged = false;
};

namespace detail {
// Gauss 7 / Kronrod 15 nodes on [0,1] half-interval: {node, gauss w, kronrod w}.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
inline cplx gk15_panel(F&& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);
    cplx y0 = f(c);
    cplx g7 = gk15[0][1] * y0;
    cplx k15 = gk15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = m * gk15[i][0];
        cplx yi = f(c + dx) + f(c - dx);
        g7 += gk15[i][1] * yi;
        k15 += gk15[i][2] * yi;
    }
    g7 *= m;
    k15 *= m;
    const double d = std::abs(k15 - g7);
    err = 200.0 * d;
    err *= std::sqrt(err);  // QUADPACK-style (200|G-K|)^1.5 estimate
    return k15;
}
}  // namespace detail

// Adaptive Gauss-Kronrod integration of a complex-valued integrand over [a, b].
// Subdivides until the per-panel error estimates meet rel_tol (against the
// running magnitude) or the evaluation cap is hit.
template <class F>
QuadratureResult integrate_gk(F&& f, double a, double b, double rel_tol = 1e-10,
                              std::size_t max_evals = 100000) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    struct Panel {
        double a, b;
        cplx value;
        double err;
    };
    std::vector<Panel> work;
    double err0;
    cplx v0 = detail::gk15_panel(f, a, b, err0);
    res.evals = 15;
    work.push_back({a, b, v0, err0});

    double total_err = err0;
    cplx total = v0;
    const double abs_floor = 1e-300;

    while (total_err > rel_tol * std::max(std::abs(total), abs_floor)) {
        if (res.evals + 30 > max_evals || work.empty()) {
            res.value = total;
            res.abs_error = total_err;
            res.converged = false;
            return res;
        }
        // split the panel with the largest error estimate
        std::size_t worst = 0;
        for (std::size_t i = 1; i < work.size(); ++i)
            if (work[i].err > work[worst].err) worst = i;
        Panel p = work[worst];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(worst));

        const double mid = 0.5 * (p.a + p.b);
        double e1, e2;
        cplx v1 = detail::gk15_panel(f, p.a, mid, e1);
        cplx v2 = detail::gk15_panel(f, mid, p.b, e2);
        res.evals += 30;
        work.push_back({p.a, mid, v1, e1});
        work.push_back({mid, p.b, v2, e2});

        total = {};
        total_err = 0;
        for (const auto& w : work) {
            total += w.value;
            total_err += w.err;
        }
    }
    res.value = total;
    res.abs_error = total_err;
    res.converged = true;
    return res;
}

template <class F>
cplx integrate_gk_or_throw(F&& f, double a, double b, double rel_tol = 1e-10,
                           std::size_t max_evals = 100000) {
    QuadratureResult r = integrate_gk(std::forward<F>(f), a, b, rel_tol, max_evals);
    if (!r.converged) {
        const double achieved = r.abs_error / std::max(std::abs(r.value), 1e-300);
        throw QuadratureError(achieved, "quadrature did not converge; achieved relative tolerance " +
                                            std::to_string(achieved));
    }
    return r.value;
}

}  // namespace cspb
