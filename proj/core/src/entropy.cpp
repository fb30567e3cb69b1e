#include "morsent/entropy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "morsent/momentum.hpp"

namespace morsent::entropy {

namespace {

// Density truncation level relative to the peak; the omitted tail of
// -rho ln rho stays below ~1e-15 for exponentially decaying densities.
constexpr double kSupportEps = 1e-18;
constexpr double kCurveSupportEps = 1e-12;

double truncation_bound(double g_lo, double g_hi, double width) {
    const double g = std::max(std::max(g_lo, g_hi), 1e-300);
    return (g_lo + g_hi) * (1.0 + std::abs(std::log(g))) * width;
}

struct SupportedDensity {
    std::function<double(double)> rho;
    double lo = 0.0;
    double hi = 0.0;
};

SupportedDensity position_density(const morse::MorseParams& params,
                                  const morse::Eigenstate& state, double eps) {
    SupportedDensity d;
    d.rho = [params, state](double x) { return morse::rho_x(params, state, x); };
    const double peak = morse::density_peak(params, state);
    std::tie(d.lo, d.hi) = quad::find_support(d.rho, peak, eps);
    return d;
}

SupportedDensity momentum_density(const morse::MorseParams& params,
                                  const morse::Eigenstate& state, double eps) {
    SupportedDensity d;
    d.rho = [params, state](double p) { return momentum::rho_p(params, state, p); };
    std::tie(d.lo, d.hi) = quad::find_support(d.rho, 0.0, eps);
    return d;
}

ValueWithError shannon_entropy(const SupportedDensity& d, const quad::QuadConfig& cfg) {
    const auto integral = quad::integrate(
        [&](double x) { return quad::xlnx(d.rho(x)); }, d.lo, d.hi, cfg);
    const double trunc = truncation_bound(d.rho(d.lo), d.rho(d.hi), d.hi - d.lo);
    return {-integral.value, integral.error_estimate + trunc};
}

}  // namespace

GridSpec GridSpec::auto_grid(int count) {
    GridSpec g;
    g.automatic = true;
    g.count = count;
    return g;
}

GridSpec GridSpec::explicit_grid(double lo, double hi, int count) {
    GridSpec g;
    g.automatic = false;
    g.lo = lo;
    g.hi = hi;
    g.count = count;
    return g;
}

ValueWithError entropy_x(const morse::MorseParams& params,
                         const morse::Eigenstate& state, const quad::QuadConfig& cfg) {
    return shannon_entropy(position_density(params, state, kSupportEps), cfg);
}

ValueWithError entropy_p(const morse::MorseParams& params,
                         const morse::Eigenstate& state, const quad::QuadConfig& cfg) {
    return shannon_entropy(momentum_density(params, state, kSupportEps), cfg);
}

double bbm_bound(int dimensions) {
    if (dimensions < 1) throw std::domain_error("bbm_bound: dimensions must be >= 1");
    return dimensions * (1.0 + std::log(std::numbers::pi));
}

EntropyResult bbm_check(const morse::MorseParams& params,
                        const morse::Eigenstate& state, const quad::QuadConfig& cfg) {
    const auto sx = entropy_x(params, state, cfg);
    const auto sp = entropy_p(params, state, cfg);
    EntropyResult r;
    r.n = state.n;
    r.lambda = params.lambda;
    r.s_x = sx.value;
    r.s_x_err = sx.error;
    r.s_p = sp.value;
    r.s_p_err = sp.error;
    r.sum = sx.value + sp.value;
    r.bound = bbm_bound(1);
    r.margin = r.sum - r.bound;
    return r;
}

DensityCurve entropy_density_curve(const morse::MorseParams& params,
                                   const morse::Eigenstate& state, Space space,
                                   const GridSpec& grid) {
    if (grid.count < 2)
        throw std::invalid_argument("entropy_density_curve: grid needs >= 2 points");
    SupportedDensity d = (space == Space::position)
                             ? position_density(params, state, kCurveSupportEps)
                             : momentum_density(params, state, kCurveSupportEps);
    double lo = grid.lo;
    double hi = grid.hi;
    if (grid.automatic) {
        lo = d.lo;
        hi = d.hi;
        if (space == Space::momentum) {
            // rho_p is even; a symmetric grid keeps the sampled curve exactly
            // parity-symmetric.
            hi = std::max(std::abs(lo), std::abs(hi));
            lo = -hi;
        }
    } else if (!(lo < hi)) {
        throw std::invalid_argument("entropy_density_curve: grid lo must be < hi");
    }
    DensityCurve curve;
    curve.space = space;
    curve.points.reserve(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) {
        const double c = lo + (hi - lo) * i / (grid.count - 1.0);
        const double rho = d.rho(c);
        curve.points.push_back({c, rho, quad::xlnx(rho)});
    }
    return curve;
}

UncertaintyResult variance_uncertainty(const morse::MorseParams& params,
                                       const morse::Eigenstate& state,
                                       const quad::QuadConfig& cfg) {
    const auto deviation = [&](const SupportedDensity& d) {
        const double m0 = quad::integrate(d.rho, d.lo, d.hi, cfg).value;
        const double m1 =
            quad::integrate([&](double x) { return x * d.rho(x); }, d.lo, d.hi, cfg).value;
        const double m2 =
            quad::integrate([&](double x) { return x * x * d.rho(x); }, d.lo, d.hi, cfg)
                .value;
        const double mean = m1 / m0;
        return std::sqrt(std::max(m2 / m0 - mean * mean, 0.0));
    };
    UncertaintyResult u;
    u.delta_x = deviation(position_density(params, state, kSupportEps));
    u.delta_p = deviation(momentum_density(params, state, kSupportEps));
    u.product = u.delta_x * u.delta_p;
    return u;
}

namespace {

int worker_count(std::size_t cells) {
    long cap = 0;
    if (const char* env = std::getenv("MORSENT_THREADS")) {
        char* end = nullptr;
        cap = std::strtol(env, &end, 10);
        if (end == env || cap < 0) cap = 0;
    }
    if (cap == 0) cap = static_cast<long>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    return static_cast<int>(std::min<long>(cap, static_cast<long>(cells)));
}

ScanCell evaluate_cell(const morse::MorseParams& base, int n, double lambda,
                       const quad::QuadConfig& cfg) {
    ScanCell cell;
    cell.n = n;
    cell.lambda = lambda;
    morse::MorseParams params = base;
    params.lambda = lambda;
    try {
        if (n < 0 || n >= morse::bound_state_count(params)) {
            cell.diagnostic = "skipped: no bound state (requires n < lambda - 1/2)";
            return cell;
        }
        const auto state = morse::eigenstate(params, n);
        cell.result = bbm_check(params, state, cfg);
        cell.ok = true;
    } catch (const std::exception& e) {
        cell.diagnostic = e.what();
    }
    return cell;
}

}  // namespace

std::vector<ScanCell> scan_cells(const morse::MorseParams& base,
                                 const std::vector<std::pair<int, double>>& cells,
                                 const quad::QuadConfig& cfg) {
    std::vector<ScanCell> results(cells.size());
    const int workers = worker_count(cells.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            results[i] = evaluate_cell(base, cells[i].first, cells[i].second, cfg);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1))
                results[i] = evaluate_cell(base, cells[i].first, cells[i].second, cfg);
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

std::vector<ScanCell> scan_table(const morse::MorseParams& base,
                                 const std::vector<int>& n_list,
                                 const std::vector<double>& lambda_list,
                                 const quad::QuadConfig& cfg) {
    std::vector<std::pair<int, double>> cells;
    cells.reserve(n_list.size() * lambda_list.size());
    for (int n : n_list)
        for (double lambda : lambda_list) cells.emplace_back(n, lambda);
    return scan_cells(base, cells, cfg);
}

}  // namespace morsent::entropy
