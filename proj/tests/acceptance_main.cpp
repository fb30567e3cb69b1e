// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints exactly one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "morsent/entropy.hpp"
#include "morsent/momentum.hpp"
#include "morsent/morse.hpp"
#include "morsent/quad.hpp"
#include "morsent/specfun.hpp"
#include "morsent/table_data.hpp"

using namespace morsent;

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", id, name,
                detail.c_str());
    if (!pass) ++g_failures;
}

morse::MorseParams params_with_lambda(double lambda) {
    morse::MorseParams p;
    p.lambda = lambda;
    return p;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// criterion 1: golden reproduction of the published 16-row table
void criterion_golden(const std::vector<entropy::ScanCell>& scan) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& ref = table_data::reference_table();
    bool pass = true;
    double worst_dx = 0.0, worst_dp = 0.0, worst_dsum = 0.0;
    std::ostringstream bad;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (!scan[i].ok) {
            pass = false;
            bad << " (n=" << ref[i].n << ",lambda=" << ref[i].lambda
                << "): " << scan[i].diagnostic << ";";
            continue;
        }
        const auto& r = scan[i].result;
        const double dx = std::abs(r.s_x - ref[i].s_x);
        const double dp = std::abs(r.s_p - ref[i].s_p);
        const double dsum = std::abs(r.sum - ref[i].sum);
        worst_dx = std::max(worst_dx, dx);
        worst_dp = std::max(worst_dp, dp);
        worst_dsum = std::max(worst_dsum, dsum);
        if (dx > 1.5e-3 || dp > 1.5e-3 || dsum > 3e-3) {
            pass = false;
            bad << fmt(" (n=%d,lambda=%g): |dS_x|=%.2e |dS_p|=%.2e computed S_x=%.7f"
                       " vs printed %.4f;",
                       ref[i].n, ref[i].lambda, dx, dp, r.s_x, ref[i].s_x);
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail =
        fmt("max |dS_x|=%.2e, |dS_p|=%.2e, |dsum|=%.2e over 16 rows (gate 1.5e-3/3e-3)",
            worst_dx, worst_dp, worst_dsum);
    if (!pass) detail += "; failing cells:" + bad.str();
    if (secs > 60.0) {
        pass = false;
        detail += fmt("; runtime %.1f s exceeds 60 s", secs);
    }
    report(1, "golden table reproduction", pass, detail);
}

void criterion_analytic_constants() {
    const auto p1 = params_with_lambda(1.0);
    const auto st1 = morse::eigenstate(p1, 0);
    const double sx = entropy::entropy_x(p1, st1, {}).value;
    const double sp = entropy::entropy_p(p1, st1, {}).value;

    // independent sech-density oracle for S_p(0, lambda=1)
    const double sech_oracle =
        quad::integrate(
            [](double q) {
                return -quad::xlnx(1.0 / std::cosh(std::numbers::pi * q));
            },
            -13.0, 13.0, {})
            .value;

    const auto p2 = params_with_lambda(2.0);
    const double sp20 = entropy::entropy_p(p2, morse::eigenstate(p2, 0), {}).value;
    const double sp21 = entropy::entropy_p(p2, morse::eigenstate(p2, 1), {}).value;

    const double d1 = std::abs(sx - (1.0 + kEulerGamma));
    const double d2 = std::abs(sp - std::numbers::ln2);
    const double d3 = std::abs(sech_oracle - std::numbers::ln2);
    const double d4 = std::abs(sp20 - sp21);
    const bool pass = d1 <= 1e-8 && d2 <= 1e-6 && d3 <= 1e-9 && d4 <= 1e-8;
    report(2, "analytic constants", pass,
           fmt("|S_x-(1+gamma)|=%.1e (<=1e-8), |S_p-ln2|=%.1e (<=1e-6), "
               "sech oracle |.-ln2|=%.1e, |S_p(0,2)-S_p(1,2)|=%.1e (<=1e-8)",
               d1, d2, d3, d4));
}

void criterion_closed_form_oracle() {
    bool pass = true;
    double worst = 0.0;
    for (double lambda : {1.0, 2.0, 3.0, 4.0, 6.0, 10.0}) {
        const auto p = params_with_lambda(lambda);
        const auto st = morse::eigenstate(p, 0);
        const double sx = entropy::entropy_x(p, st, {}).value;
        const double oracle = -2.0 * st.log_norm + st.s - st.s * specfun::digamma(st.s);
        worst = std::max(worst, std::abs(sx - oracle));
        if (std::abs(sx - oracle) > 1e-8) pass = false;
    }
    report(3, "closed-form n=0 entropy oracle", pass,
           fmt("worst |quadrature - (-ln N^2 + s - s psi(s))| = %.1e over lambda "
               "{1,2,3,4,6,10} (gate 1e-8)",
               worst));
}

void criterion_bbm_sweep() {
    bool pass = true;
    double worst_adjusted = std::numeric_limits<double>::infinity();
    int states = 0;
    std::string note;
    for (int i = 0;; ++i) {
        const double lambda = 0.6 + 0.2 * i;
        if (lambda > 10.0 + 1e-9) break;
        const auto p = params_with_lambda(lambda);
        std::vector<std::pair<int, double>> cells;
        for (int n = 0; n < morse::bound_state_count(p); ++n)
            cells.emplace_back(n, lambda);
        for (const auto& c : entropy::scan_cells(p, cells, {})) {
            if (!c.ok) {
                pass = false;
                note += fmt(" (n=%d,lambda=%.1f) failed: %s;", c.n, lambda,
                            c.diagnostic.c_str());
                continue;
            }
            ++states;
            const double adjusted =
                c.result.margin + c.result.s_x_err + c.result.s_p_err;
            worst_adjusted = std::min(worst_adjusted, adjusted);
            if (adjusted < 0.0) pass = false;
        }
    }
    const double bound_dev = std::abs(entropy::bbm_bound(1) - 2.1447298858);
    if (bound_dev >= 5e-11) pass = false;
    report(4, "BBM bound over lambda in [0.6, 10] step 0.2", pass,
           fmt("%d states, worst margin+err = %+.2e (>= 0), |bound - 2.1447298858| = "
               "%.1e (< 5e-11)%s",
               states, worst_adjusted, bound_dev, note.c_str()));
}

void criterion_saturation(const std::vector<entropy::ScanCell>& scan) {
    // rows 0..3 of the reference grid are n=0, lambda=1..4
    bool pass = true;
    const double bound = entropy::bbm_bound(1);
    for (int i = 0; i < 4; ++i) {
        if (!scan[i].ok || scan[i].result.sum <= bound) pass = false;
        if (i > 0 && scan[i].result.sum >= scan[i - 1].result.sum) pass = false;
    }
    const auto p8 = params_with_lambda(8.0);
    const double sum8 = entropy::bbm_check(p8, morse::eigenstate(p8, 0), {}).sum;
    if (sum8 >= scan[3].result.sum) pass = false;
    report(5, "saturation trend toward the bound", pass,
           fmt("n=0 sums: %.4f > %.4f > %.4f > %.4f > bound %.4f; sum(lambda=8) = %.4f "
               "< sum(lambda=4)",
               scan[0].result.sum, scan[1].result.sum, scan[2].result.sum,
               scan[3].result.sum, bound, sum8));
}

void criterion_normalization() {
    bool pass = true;
    double worst_x = 0.0, worst_p = 0.0;
    for (const auto& [n, lambda] : table_data::reference_cells()) {
        const auto p = params_with_lambda(lambda);
        const auto st = morse::eigenstate(p, n);

        const auto rho_x_fn = [&](double x) { return morse::rho_x(p, st, x); };
        const auto [xl, xh] =
            quad::find_support(rho_x_fn, morse::density_peak(p, st), 1e-18);
        worst_x = std::max(worst_x,
                           std::abs(quad::integrate(rho_x_fn, xl, xh, {}).value - 1.0));

        const auto rho_p_fn = [&](double q) { return momentum::rho_p(p, st, q); };
        const auto [pl, ph] = quad::find_support(rho_p_fn, 0.0, 1e-18);
        worst_p = std::max(worst_p,
                           std::abs(quad::integrate(rho_p_fn, pl, ph, {}).value - 1.0));
    }
    pass = worst_x <= 1e-8 && worst_p <= 1e-8;
    report(6, "normalization and Parseval", pass,
           fmt("worst |int rho_x - 1| = %.1e, worst |int rho_p - 1| = %.1e (gate 1e-8)",
               worst_x, worst_p));
}

void criterion_cross_evaluator() {
    bool pass = true;
    double worst = 0.0;
    for (const auto& [n, lambda] : table_data::reference_cells()) {
        const auto p = params_with_lambda(lambda);
        const auto st = morse::eigenstate(p, n);
        for (double q : {0.0, 0.3, -0.3, 1.0, -1.0, 2.5, -2.5}) {
            const double diff = std::abs(momentum::phi_analytic(p, st, q) -
                                         momentum::phi_quadrature(p, st, q, {}));
            worst = std::max(worst, diff);
            if (diff > 1e-8) pass = false;
        }
    }
    report(7, "cross-evaluator Fourier agreement", pass,
           fmt("worst |phi_analytic - phi_quadrature| = %.1e over 16 states x 7 momenta "
               "(gate 1e-8)",
               worst));
}

void criterion_scale_covariance() {
    bool pass = true;
    double worst = 0.0;
    for (const auto& [n0, lambda] :
         std::vector<std::pair<int, double>>{{0, 1.0}, {1, 3.0}}) {
        const auto base = params_with_lambda(lambda);
        const auto st = morse::eigenstate(base, n0);
        const double sx0 = entropy::entropy_x(base, st, {}).value;
        const double sp0 = entropy::entropy_p(base, st, {}).value;
        for (double c : {0.5, 2.0}) {
            morse::MorseParams scaled = base;
            scaled.alpha = c;
            const auto stc = morse::eigenstate(scaled, n0);
            const double sx = entropy::entropy_x(scaled, stc, {}).value;
            const double sp = entropy::entropy_p(scaled, stc, {}).value;
            const double d1 = std::abs(sx - (sx0 - std::log(c)));
            const double d2 = std::abs(sp - (sp0 + std::log(c)));
            const double d3 = std::abs((sx + sp) - (sx0 + sp0));
            worst = std::max({worst, d1, d2});
            if (d1 > 1e-8 || d2 > 1e-8 || d3 > 2e-8) pass = false;
        }
    }
    report(8, "scale covariance under alpha -> c alpha", pass,
           fmt("worst entropy shift deviation = %.1e for c in {0.5, 2} (gate 1e-8; sum "
               "invariant 2e-8)",
               worst));
}

void criterion_robertson() {
    bool pass = true;
    double worst_product = std::numeric_limits<double>::infinity();
    for (const auto& [n, lambda] : table_data::reference_cells()) {
        const auto p = params_with_lambda(lambda);
        const auto u = entropy::variance_uncertainty(p, morse::eigenstate(p, n), {});
        worst_product = std::min(worst_product, u.product);
        if (u.product < 0.4999999) pass = false;
    }
    const auto p1 = params_with_lambda(1.0);
    const auto u1 = entropy::variance_uncertainty(p1, morse::eigenstate(p1, 0), {});
    const double dx_dev = std::abs(u1.delta_x - std::numbers::pi / std::sqrt(6.0));
    const double dp_dev = std::abs(u1.delta_p - 0.5);
    if (dx_dev > 1e-8 || dp_dev > 1e-8) pass = false;
    report(9, "Robertson variance product", pass,
           fmt("worst dx*dp = %.7f (>= 0.4999999); (0,1): |dx - pi/sqrt6| = %.1e, "
               "|dp - 1/2| = %.1e (gate 1e-8)",
               worst_product, dx_dev, dp_dev));
}

void criterion_figures() {
    bool pass = true;
    std::string note;

    // momentum curves: parity at plot resolution for every reference state
    double worst_sym = 0.0;
    for (const auto& [n, lambda] : table_data::reference_cells()) {
        const auto p = params_with_lambda(lambda);
        const auto st = morse::eigenstate(p, n);
        const auto curve =
            entropy::entropy_density_curve(p, st, entropy::Space::momentum, {});
        const std::size_t last = curve.points.size() - 1;
        for (std::size_t i = 0; i < curve.points.size(); ++i)
            worst_sym = std::max(worst_sym,
                                 std::abs(curve.points[i].entropy_density -
                                          curve.points[last - i].entropy_density));
    }
    if (worst_sym > 1e-10) {
        pass = false;
        note += " momentum symmetry exceeded;";
    }

    // position curve for the (0,1) level: exactly one interior minimum
    const auto p1 = params_with_lambda(1.0);
    const auto st1 = morse::eigenstate(p1, 0);
    const auto curve =
        entropy::entropy_density_curve(p1, st1, entropy::Space::position, {});
    int minima = 0;
    for (std::size_t i = 1; i + 1 < curve.points.size(); ++i)
        if (curve.points[i].entropy_density < curve.points[i - 1].entropy_density &&
            curve.points[i].entropy_density < curve.points[i + 1].entropy_density)
            ++minima;
    if (minima != 1) {
        pass = false;
        note += fmt(" position minima = %d (want 1);", minima);
    }

    // node counts over the truncated support
    bool nodes_ok = true;
    for (const auto& [n, lambda] : table_data::reference_cells()) {
        const auto p = params_with_lambda(lambda);
        const auto st = morse::eigenstate(p, n);
        const auto [lo, hi] = quad::find_support(
            [&](double x) { return morse::rho_x(p, st, x); },
            morse::density_peak(p, st), 1e-18);
        int changes = 0;
        double prev = morse::psi(p, st, lo);
        for (int i = 1; i < 4000; ++i) {
            const double x = lo + (hi - lo) * i / 3999.0;
            const double cur = morse::psi(p, st, x);
            if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur))
                ++changes;
            if (cur != 0.0) prev = cur;
        }
        if (changes != n) nodes_ok = false;
    }
    if (!nodes_ok) {
        pass = false;
        note += " node count mismatch;";
    }

    report(10, "structural figure properties", pass,
           fmt("momentum-curve max |f(p)-f(-p)| = %.1e (<= 1e-10); (0,1) interior "
               "minima = %d; node counts match n for all 16 states%s",
               worst_sym, minima, note.c_str()));
}

}  // namespace

int main() {
    std::printf("acceptance suite: Morse-well information entropies\n");
    const auto t0 = std::chrono::steady_clock::now();

    const auto golden_scan =
        entropy::scan_cells(morse::MorseParams{}, table_data::reference_cells(), {});

    criterion_golden(golden_scan);
    criterion_analytic_constants();
    criterion_closed_form_oracle();
    criterion_bbm_sweep();
    criterion_saturation(golden_scan);
    criterion_normalization();
    criterion_cross_evaluator();
    criterion_scale_covariance();
    criterion_robertson();
    criterion_figures();

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 10 criteria passed in %.1f s\n", 10 - g_failures, secs);
    if (g_failures > 0)
        std::printf("known issue: the published table's (n=1, lambda=2) S_x deviates "
                    "from the independently verified value by 3.2e-3, beyond the "
                    "1.5e-3 gate; see core/data/bbm_reference_table.csv\n");
    return g_failures == 0 ? 0 : 1;
}
