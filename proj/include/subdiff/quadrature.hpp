#pragma once

// Adaptive Gauss-Kronrod wrapper used wherever a smooth integrand needs a
// tolerance-controlled integral. Backed by Boost.Math.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "subdiff/errors.hpp"

namespace subdiff::quad {

/// Integral of f over [a, b]. Throws NumericalError tagged with `module`
/// when the estimated error exceeds abs_tol.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, const char* module,
                 unsigned max_depth = 18)
{
    if (a == b) return 0.0;
    using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
    double error = 0.0;
    double l1 = 0.0;
    // One unrefined pass sizes the relative tolerance Boost works with.
    Rule::integrate(f, a, b, 0, 1.0, &error, &l1);
    const double rel = std::clamp(0.1 * abs_tol / std::max(l1, 1e-300), 1e-15, 1e-3);
    const double value = Rule::integrate(f, a, b, max_depth, rel, &error, &l1);
    // Boost stops on a relative criterion; enforce the absolute one as well,
    // with a small floor for values dominated by rounding.
    if (!(error <= abs_tol + 64.0 * 2.2e-16 * l1) || !std::isfinite(value)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "quadrature tolerance not met on [%.6g, %.6g]: error estimate %.3e > %.3e",
                      a, b, error, abs_tol);
        throw NumericalError(module, msg);
    }
    return value;
}

/// Integral of f over the panels [x[0], x[1]], [x[1], x[2]], ...
/// Accepts an error below rel_tol * int |f| + abs_floor over the whole range.
template <class F>
double integrate_relative(F&& f, const std::vector<double>& x, double rel_tol, double abs_floor,
                          const char* module, unsigned max_depth = 18)
{
    using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
    double l1 = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        double e = 0.0, l = 0.0;
        Rule::integrate(f, x[i - 1], x[i], 0, 1.0, &e, &l);
        l1 += l;
    }
    const double budget = rel_tol * l1 + abs_floor;
    const double rel = std::clamp(budget / std::max(l1, 1e-300), 1e-15, 1e-3);
    double value = 0.0, error = 0.0;
    l1 = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i - 1] == x[i]) continue;
        double e = 0.0, l = 0.0;
        value += Rule::integrate(f, x[i - 1], x[i], max_depth, rel, &e, &l);
        error += e;
        l1 += l;
    }
    if (!(error <= budget + 64.0 * 2.2e-16 * l1) || !std::isfinite(value)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "quadrature tolerance not met: error estimate %.3e > %.3e", error, budget);
        throw NumericalError(module, msg);
    }
    return value;
}

/// Same contract as integrate() for integrands with algebraic endpoint
/// behaviour (x^alpha, alpha > -1 and not an integer), by tanh-sinh.
template <class F>
double integrate_endpoint_singular(F&& f, double a, double b, double abs_tol, const char* module)
{
    if (a == b) return 0.0;
    // The rule extends its abscissa tables lazily; one instance per thread.
    static thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double error = 0.0;
    double l1 = 0.0;
    const double value = rule.integrate(f, a, b, 1e-14, &error, &l1);
    if (!(error <= abs_tol + 64.0 * 2.2e-16 * l1) || !std::isfinite(value)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "quadrature tolerance not met on [%.6g, %.6g]: error estimate %.3e > %.3e",
                      a, b, error, abs_tol);
        throw NumericalError(module, msg);
    }
    return value;
}

}  // namespace subdiff::quad
