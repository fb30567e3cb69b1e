#include "morsent/momentum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "morsent/specfun.hpp"

namespace morsent::momentum {

namespace {

using std::complex;

// Per-term complex logs of the k-series, pivoted by the largest real part so
// the linear-domain sum neither overflows nor loses the leading digits to
// cancellation.
complex<double> phi_series(const morse::MorseParams& params,
                           const morse::Eigenstate& state, double p) {
    const double q = p / (params.alpha * params.hbar);
    const double s = state.s;
    const int n = state.n;
    const double ln2 = std::numbers::ln2;
    const double prefactor = state.log_norm - std::log(params.alpha) -
                             0.5 * std::log(2.0 * std::numbers::pi * params.hbar);
    const double ln_top = specfun::ln_gamma(n + s + 1.0);

    std::vector<complex<double>> term_logs(static_cast<std::size_t>(n) + 1);
    std::vector<double> term_signs(static_cast<std::size_t>(n) + 1);
    double max_re = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
        const double ln_ck = ln_top - specfun::ln_gamma(s + k + 1.0) -
                             specfun::ln_gamma(static_cast<double>(n - k) + 1.0) -
                             specfun::ln_gamma(static_cast<double>(k) + 1.0);
        const complex<double> exponent(0.5 * s + k, q);
        const complex<double> lg = specfun::ln_gamma_complex(exponent);
        term_logs[k] = prefactor + ln_ck + exponent * ln2 + lg +
                       complex<double>(0.0, -q * std::log(2.0 * params.lambda));
        term_signs[k] = (k % 2 == 0) ? 1.0 : -1.0;
        max_re = std::max(max_re, term_logs[k].real());
    }
    complex<double> sum = 0.0;
    for (int k = 0; k <= n; ++k)
        sum += term_signs[k] * std::exp(term_logs[k] - max_re);
    return std::exp(complex<double>(max_re, 0.0)) * sum;
}

}  // namespace

complex<double> phi_analytic(const morse::MorseParams& params,
                             const morse::Eigenstate& state, double p) {
    return phi_series(params, state, p);
}

complex<double> phi_quadrature(const morse::MorseParams& params,
                               const morse::Eigenstate& state, double p,
                               const quad::QuadConfig& cfg) {
    const double peak = morse::density_peak(params, state);
    const auto [lo, hi] = quad::find_support(
        [&](double x) { return morse::rho_x(params, state, x); }, peak, 1e-18);
    const double inv_hbar = 1.0 / params.hbar;
    const double max_width = std::numbers::pi * params.hbar / (2.0 * std::abs(p) + 1.0);
    const auto re = quad::integrate(
        [&](double x) { return morse::psi(params, state, x) * std::cos(p * x * inv_hbar); },
        lo, hi, cfg, max_width);
    const auto im = quad::integrate(
        [&](double x) { return -morse::psi(params, state, x) * std::sin(p * x * inv_hbar); },
        lo, hi, cfg, max_width);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * params.hbar);
    return {norm * re.value, norm * im.value};
}

double rho_p(const morse::MorseParams& params, const morse::Eigenstate& state,
             double p) {
    return std::norm(phi_analytic(params, state, p));
}

}  // namespace morsent::momentum
