#pragma once

// One-dimensional Morse potential V(x) = D e^{-ax}(e^{-ax} - 2): bound-state
// parameterization, energies, and position-space wavefunctions.

namespace morsent::morse {

/// Physical parameters of the well. lambda = sqrt(2 mu D)/(alpha hbar) is the
/// dimensionless depth; at least one bound state exists for lambda > 1/2.
struct MorseParams {
    double lambda = 1.0;
    double alpha = 1.0;
    double hbar = 1.0;
    double mu = 0.5;

    /// Dissociation energy D = lambda^2 alpha^2 hbar^2 / (2 mu).
    double dissociation_energy() const;
    /// omega = hbar alpha^2 / (2 mu).
    double omega() const;

    /// Build from the physical well depth instead of lambda.
    static MorseParams from_physical(double dissociation_energy, double alpha = 1.0,
                                     double hbar = 1.0, double mu = 0.5);
};

/// One bound level. s = 2 lambda - 2n - 1 > 0 sets the decay power xi^{s/2}
/// and the binding energy E = -(alpha^2 hbar^2 / 8 mu) s^2.
struct Eigenstate {
    int n = 0;
    double s = 0.0;
    double log_norm = 0.0;
    double energy = 0.0;
};

double potential(const MorseParams& params, double x);

/// Number of integers n >= 0 with 2 lambda - 2n - 1 > 0.
int bound_state_count(const MorseParams& params);

/// Throws std::out_of_range when n >= bound_state_count(params).
Eigenstate eigenstate(const MorseParams& params, int n);

/// xi = 2 lambda e^{-alpha x}; underflows to 0 for very large x.
double xi_of_x(const MorseParams& params, double x);

/// Real amplitude psi_n(x) = N e^{-xi/2} xi^{s/2} L_n^s(xi). The envelope is
/// evaluated in log-domain so nothing overflows for lambda <= 200; returns
/// exactly 0 once the envelope log drops below -745.
double psi(const MorseParams& params, const Eigenstate& state, double x);

/// Probability density |psi(x)|^2.
double rho_x(const MorseParams& params, const Eigenstate& state, double x);

/// Grid-scan estimate of the position of the density maximum; seeds
/// quad::find_support.
double density_peak(const MorseParams& params, const Eigenstate& state);

}  // namespace morsent::morse
