#include "morsent/morse.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "morsent/specfun.hpp"

namespace morsent::morse {

namespace {

void check_params(const MorseParams& p) {
    if (!(p.lambda > 0.0) || !(p.alpha > 0.0) || !(p.hbar > 0.0) || !(p.mu > 0.0))
        throw std::domain_error("MorseParams: lambda, alpha, hbar, mu must all be > 0");
}

}  // namespace

double MorseParams::dissociation_energy() const {
    return lambda * lambda * alpha * alpha * hbar * hbar / (2.0 * mu);
}

double MorseParams::omega() const { return hbar * alpha * alpha / (2.0 * mu); }

MorseParams MorseParams::from_physical(double dissociation_energy, double alpha,
                                       double hbar, double mu) {
    if (!(dissociation_energy > 0.0) || !(alpha > 0.0) || !(hbar > 0.0) || !(mu > 0.0))
        throw std::domain_error("MorseParams::from_physical: all inputs must be > 0");
    MorseParams p;
    p.lambda = std::sqrt(2.0 * mu * dissociation_energy) / (alpha * hbar);
    p.alpha = alpha;
    p.hbar = hbar;
    p.mu = mu;
    return p;
}

double potential(const MorseParams& params, double x) {
    check_params(params);
    const double ax = params.alpha * x;
    if (ax < -700.0) return std::numeric_limits<double>::infinity();
    const double u = std::exp(-ax);
    return params.dissociation_energy() * u * (u - 2.0);
}

int bound_state_count(const MorseParams& params) {
    check_params(params);
    int n = 0;
    while (2.0 * params.lambda - 2.0 * n - 1.0 > 0.0) ++n;
    return n;
}

Eigenstate eigenstate(const MorseParams& params, int n) {
    const int count = bound_state_count(params);
    if (n < 0 || n >= count)
        throw std::out_of_range("eigenstate: n = " + std::to_string(n) + " but only " +
                                std::to_string(count) + " bound states exist");
    Eigenstate st;
    st.n = n;
    st.s = 2.0 * params.lambda - 2.0 * n - 1.0;
    st.log_norm = 0.5 * (std::log(params.alpha) + std::log(st.s) +
                         specfun::ln_gamma(n + 1.0) -
                         specfun::ln_gamma(2.0 * params.lambda - n));
    const double a = params.alpha * params.hbar;
    st.energy = -(a * a / (8.0 * params.mu)) * st.s * st.s;
    return st;
}

double xi_of_x(const MorseParams& params, double x) {
    return 2.0 * params.lambda * std::exp(-params.alpha * x);
}

double psi(const MorseParams& params, const Eigenstate& state, double x) {
    const double xi = xi_of_x(params, x);
    const double log_env = state.log_norm - 0.5 * xi + 0.5 * state.s * std::log(xi);
    if (!(log_env > -745.0)) return 0.0;  // catches xi == 0 (log -> -inf) too
    return std::exp(log_env) * specfun::laguerre_eval(state.n, state.s, xi);
}

double rho_x(const MorseParams& params, const Eigenstate& state, double x) {
    const double a = psi(params, state, x);
    return a * a;
}

double density_peak(const MorseParams& params, const Eigenstate& state) {
    // The classically allowed region lies between the roots of V(xi) = E,
    // xi = 2 lambda +- sqrt(4 lambda^2 - s^2); scan a window generously
    // wider than that in x.
    const double lam = params.lambda;
    const double s = state.s;
    const double disc = std::sqrt(std::max(4.0 * lam * lam - s * s, 0.0));
    const double xi_hi = 2.0 * lam + disc + 10.0 * std::sqrt(s + 4.0) + 20.0;
    const double xi_lo = std::max((2.0 * lam - disc) * 1e-3, 1e-8 * s);
    const double x_lo = -std::log(xi_hi / (2.0 * lam)) / params.alpha;
    const double x_hi = -std::log(xi_lo / (2.0 * lam)) / params.alpha;
    const int points = 2001;
    double best_x = x_lo;
    double best_rho = -1.0;
    for (int i = 0; i < points; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / (points - 1.0);
        const double r = rho_x(params, state, x);
        if (r > best_rho) {
            best_rho = r;
            best_x = x;
        }
    }
    return best_x;
}

}  // namespace morsent::morse
