#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

// Adaptive one-dimensional integration (Gauss-Kronrod 7-15 with
// worst-panel-first bisection) plus support-truncation helpers.

namespace morsent::quad {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct non_convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_finite_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct support_not_found_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// t * ln(t) with the 0 ln 0 = 0 convention; t below 1e-300 is clamped to 0.
double xlnx(double t);

/// Integrate f over [a, b]. Panels are bisected worst-error-first until the
/// summed error estimate satisfies max(abs_tol, rel_tol*|value|) or the
/// subdivision budget is exhausted (non_convergence_error). A non-finite
/// integrand value at any node raises non_finite_error.
///
/// max_initial_width > 0 caps the width of the starting panels; oscillatory
/// integrands use it to guarantee the error estimator resolves the
/// oscillation. Zero means one starting panel.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg = {}, double max_initial_width = 0.0);

/// Locate a truncation interval (lo, hi) around x_peak outside which
/// g <= eps * g_max. g must be >= 0, positive at x_peak, and eventually
/// monotone decaying on both sides. g_max is estimated from a coarse scan;
/// the crossings are bracketed by doubling steps and refined by bisection.
/// The returned endpoints carry a 1% outward margin past the crossing.
std::pair<double, double> find_support(const std::function<double(double)>& g,
                                       double x_peak, double eps);

}  // namespace morsent::quad
