#pragma once

#include <functional>

namespace tcphonon {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    int intervals = 0;
    bool converged = false;
};

// Globally adaptive 7/15-point Gauss-Kronrod quadrature. Bisects the interval
// with the largest error estimate until error <= max(abs_tol, rel_tol |value|)
// or max_intervals is reached. Integrand is never evaluated at the end points.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                double rel_tol, int max_intervals = 2000);

// Bisection on [lo, hi] for a sign change of f; stops when the bracket is
// shorter than tol. Throws std::runtime_error if f(lo) and f(hi) share a sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol, int max_iter = 200);

}  // namespace tcphonon
