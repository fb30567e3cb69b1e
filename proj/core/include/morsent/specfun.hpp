#pragma once

#include <complex>
#include <vector>

// Special-function kernel: log-Gamma (real and complex), digamma, and
// associated Laguerre polynomials. Everything here is pure and re-entrant.

namespace morsent::specfun {

/// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double digamma(double x);

/// A branch of ln Gamma(z) for Re(z) > 0 that is continuous in Im(z) along
/// vertical lines z = a + ip (the imaginary part is not wrapped to (-pi, pi]).
/// Throws std::domain_error for Re(z) <= 0.
std::complex<double> ln_gamma_complex(std::complex<double> z);

/// Value of the associated Laguerre polynomial L_n^s(xi) by the three-term
/// recurrence. Requires n >= 0, s > 0, xi >= 0.
double laguerre_eval(int n, double s, double xi);

/// Monomial coefficients of L_n^s: L_n^s(xi) = sum_k coeffs[k] * xi^k.
/// coeffs has n+1 entries with strictly alternating signs, coeffs[0] > 0.
struct LaguerreCoeffs {
    int n = 0;
    double s = 0.0;
    std::vector<double> coeffs;
};

/// c_k = (-1)^k Gamma(n+s+1) / (Gamma(s+k+1) (n-k)! k!), all factors taken
/// through ln_gamma so large n+s cannot overflow.
LaguerreCoeffs laguerre_coeffs(int n, double s);

}  // namespace morsent::specfun
