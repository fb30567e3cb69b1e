#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morsent/morse.hpp"
#include "morsent/quad.hpp"

// Shannon information entropies S_x and S_p of Morse eigenstates, entropy
// densities, the BBM entropic-uncertainty bound check, the Robertson
// variance product, and (n, lambda) scans.

namespace morsent::entropy {

struct ValueWithError {
    double value = 0.0;
    double error = 0.0;
};

struct EntropyResult {
    int n = 0;
    double lambda = 0.0;
    double s_x = 0.0;
    double s_x_err = 0.0;
    double s_p = 0.0;
    double s_p_err = 0.0;
    double sum = 0.0;
    double bound = 0.0;   // N(1 + ln pi), N = 1 here
    double margin = 0.0;  // sum - bound; >= -(s_x_err + s_p_err) for any state
};

struct UncertaintyResult {
    double delta_x = 0.0;
    double delta_p = 0.0;
    double product = 0.0;
};

enum class Space { position, momentum };

struct DensityPoint {
    double coordinate = 0.0;
    double probability_density = 0.0;
    double entropy_density = 0.0;  // rho * ln(rho), signed, 0 where rho is 0
};

struct DensityCurve {
    Space space = Space::position;
    std::vector<DensityPoint> points;
};

/// Sampling grid: either explicit [lo, hi] with `count` points or automatic
/// (support truncated at 1e-12 of the density peak, 800 points).
struct GridSpec {
    bool automatic = true;
    double lo = 0.0;
    double hi = 0.0;
    int count = 800;

    static GridSpec auto_grid(int count = 800);
    static GridSpec explicit_grid(double lo, double hi, int count);
};

/// S_x = -integral of rho(x) ln rho(x) over the truncated support.
/// The error combines the quadrature estimate and a truncation bound.
ValueWithError entropy_x(const morse::MorseParams& params,
                         const morse::Eigenstate& state,
                         const quad::QuadConfig& cfg = {});

/// S_p = -integral of rho(p) ln rho(p), rho from the analytic amplitude.
ValueWithError entropy_p(const morse::MorseParams& params,
                         const morse::Eigenstate& state,
                         const quad::QuadConfig& cfg = {});

/// BBM lower bound N(1 + ln pi) for N spatial dimensions.
double bbm_bound(int dimensions = 1);

/// Full entropic-uncertainty record for one state.
EntropyResult bbm_check(const morse::MorseParams& params,
                        const morse::Eigenstate& state,
                        const quad::QuadConfig& cfg = {});

/// Sampled (coordinate, density, rho ln rho) curve for plotting.
DensityCurve entropy_density_curve(const morse::MorseParams& params,
                                   const morse::Eigenstate& state, Space space,
                                   const GridSpec& grid = {});

/// delta_x and delta_p from the second moments of the two densities.
UncertaintyResult variance_uncertainty(const morse::MorseParams& params,
                                       const morse::Eigenstate& state,
                                       const quad::QuadConfig& cfg = {});

/// One scan cell: either a result or a diagnostic for a skipped/failed pair.
struct ScanCell {
    int n = 0;
    double lambda = 0.0;
    bool ok = false;
    EntropyResult result{};
    std::string diagnostic;
};

/// Evaluate the given (n, lambda) pairs in order. Invalid pairs and per-cell
/// numerical failures are recorded as diagnostics; the scan continues.
/// Cells run in parallel (MORSENT_THREADS caps the worker count, 0 or unset
/// picks the hardware concurrency); assembly order is deterministic.
std::vector<ScanCell> scan_cells(const morse::MorseParams& base,
                                 const std::vector<std::pair<int, double>>& cells,
                                 const quad::QuadConfig& cfg = {});

/// Cross product of n_list and lambda_list, n-major / lambda-minor.
std::vector<ScanCell> scan_table(const morse::MorseParams& base,
                                 const std::vector<int>& n_list,
                                 const std::vector<double>& lambda_list,
                                 const quad::QuadConfig& cfg = {});

}  // namespace morsent::entropy
