#pragma once

#include <complex>

#include "morsent/morse.hpp"
#include "morsent/quad.hpp"

// Momentum-space wavefunction phi(p) of a Morse eigenstate, by an exact
// Gamma-series evaluator and by an independent oscillatory-quadrature
// Fourier transform used as an oracle.

namespace morsent::momentum {

struct MomentumAmplitude {
    double p = 0.0;
    std::complex<double> value;
};

/// Closed-form amplitude. Substituting xi = 2 lambda e^{-alpha x} in the
/// Fourier integral maps each Laguerre monomial xi^{s/2+k} onto a Gamma
/// factor:
///
///   phi(p) = N/(alpha sqrt(2 pi hbar)) (2 lambda)^{-iq}
///            sum_k c_k 2^{s/2+k+iq} Gamma(s/2+k+iq),   q = p/(alpha hbar).
///
/// The k-series is summed in complex log-space with a largest-term pivot.
/// Normalized so that the integral of |phi|^2 dp is 1.
std::complex<double> phi_analytic(const morse::MorseParams& params,
                                  const morse::Eigenstate& state, double p);

/// (1/sqrt(2 pi hbar)) * integral of psi(x) e^{-ipx/hbar} dx over the
/// truncated support, with starting panels no wider than
/// pi*hbar/(2|p|+1) so the error estimator resolves the oscillation.
std::complex<double> phi_quadrature(const morse::MorseParams& params,
                                    const morse::Eigenstate& state, double p,
                                    const quad::QuadConfig& cfg = {});

/// Momentum probability density |phi_analytic(p)|^2.
double rho_p(const morse::MorseParams& params, const morse::Eigenstate& state,
             double p);

}  // namespace morsent::momentum
