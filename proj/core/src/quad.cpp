#include "morsent/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace morsent::quad {

namespace {

// 15-point Kronrod nodes (positive half, descending) with the embedded
// 7-point Gauss rule on the odd-indexed nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double err = 0.0;
};

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

double eval_checked(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw non_finite_error("integrate: non-finite integrand value at x = " +
                               std::to_string(x));
    return v;
}

Panel eval_panel(const std::function<double(double)>& f, double a, double b,
                 long& evaluations) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = eval_checked(f, c);
    double result_gauss = kGaussWeights[3] * fc;
    double result_kronrod = kKronrodWeights[7] * fc;
    for (int j = 0; j < 3; ++j) {
        const int idx = 2 * j + 1;
        const double dx = h * kKronrodNodes[idx];
        const double fsum = eval_checked(f, c - dx) + eval_checked(f, c + dx);
        result_gauss += kGaussWeights[j] * fsum;
        result_kronrod += kKronrodWeights[idx] * fsum;
    }
    for (int j = 0; j < 4; ++j) {
        const int idx = 2 * j;
        const double dx = h * kKronrodNodes[idx];
        result_kronrod += kKronrodWeights[idx] *
                          (eval_checked(f, c - dx) + eval_checked(f, c + dx));
    }
    evaluations += 15;
    return Panel{a, b, result_kronrod * h, std::abs(result_kronrod - result_gauss) * h};
}

double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

double xlnx(double t) {
    if (t <= 1e-300) return 0.0;
    return t * std::log(t);
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg, double max_initial_width) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_subdivisions < 1)
        throw std::invalid_argument("integrate: invalid QuadConfig");

    long evaluations = 0;
    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> heap;

    int initial = 1;
    if (max_initial_width > 0.0)
        initial = std::max(1, static_cast<int>(std::ceil((b - a) / max_initial_width)));

    double total_value = 0.0;
    double total_err = 0.0;
    for (int i = 0; i < initial; ++i) {
        const double pa = a + (b - a) * static_cast<double>(i) / initial;
        const double pb = (i + 1 == initial) ? b : a + (b - a) * static_cast<double>(i + 1) / initial;
        Panel p = eval_panel(f, pa, pb, evaluations);
        total_value += p.value;
        total_err += p.err;
        heap.push(p);
    }

    const auto converged = [&] {
        return total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value));
    };

    int splits = 0;
    while (!converged()) {
        if (splits >= cfg.max_subdivisions)
            throw non_convergence_error(
                "integrate: subdivision budget (" + std::to_string(cfg.max_subdivisions) +
                ") exhausted, error estimate " + std::to_string(total_err));
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            throw non_convergence_error("integrate: panel at x = " + std::to_string(mid) +
                                        " too narrow to bisect");
        heap.pop();
        Panel left = eval_panel(f, worst.a, mid, evaluations);
        Panel right = eval_panel(f, mid, worst.b, evaluations);
        total_value += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Re-accumulate in interval order so repeated runs are bit-identical and
    // the incremental drift of the convergence loop is discarded.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> values, errors;
    values.reserve(panels.size());
    errors.reserve(panels.size());
    for (const Panel& p : panels) {
        values.push_back(p.value);
        errors.push_back(p.err);
    }
    return QuadResult{kahan_sum(values), kahan_sum(errors), evaluations};
}

std::pair<double, double> find_support(const std::function<double(double)>& g,
                                       double x_peak, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::invalid_argument("find_support: eps must be in (0, 1)");
    const double g_peak = g(x_peak);
    if (!(g_peak > 0.0) || !std::isfinite(g_peak))
        throw std::invalid_argument("find_support: g(x_peak) must be positive and finite");

    struct Probe {
        double x;
        double g;
    };

    double running_max = g_peak;
    const double step0 = 0.0625 * (1.0 + std::abs(x_peak));

    const auto sample = [&](double x) {
        const double v = std::max(g(x), 0.0);
        running_max = std::max(running_max, v);
        return v;
    };

    // Doubling probes outward on one side; returns the probe list and an
    // outer bound already below the running threshold (confirmed by two
    // extra probes so an isolated node cannot fake the tail).
    const auto probe_side = [&](double direction) {
        std::vector<Probe> probes;
        double d = step0;
        for (int iter = 0; iter <= 40; ++iter) {
            const double x = x_peak + direction * d;
            const double v = sample(x);
            probes.push_back({x, v});
            if (v <= eps * running_max) {
                const double x15 = x_peak + direction * 1.5 * d;
                const double x20 = x_peak + direction * 2.0 * d;
                const double v15 = sample(x15);
                const double v20 = sample(x20);
                if (v15 <= eps * running_max && v20 <= eps * running_max) {
                    probes.push_back({x15, v15});
                    probes.push_back({x20, v20});
                    return probes;
                }
            }
            d *= 2.0;
        }
        throw support_not_found_error(
            "find_support: no decay detected within 2^41 step growth from x_peak = " +
            std::to_string(x_peak));
    };

    std::vector<Probe> left = probe_side(-1.0);
    std::vector<Probe> right = probe_side(+1.0);

    // Coarse scan between the outer bounds to pin down g_max.
    const double lo_bound = left.back().x;
    const double hi_bound = right.back().x;
    constexpr int kScanPoints = 513;
    std::vector<Probe> scan;
    scan.reserve(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
        const double x = lo_bound + (hi_bound - lo_bound) * i / (kScanPoints - 1.0);
        scan.push_back({x, sample(x)});
    }
    const double threshold = eps * running_max;

    const auto refine_side = [&](const std::vector<Probe>& probes, double direction) {
        // Bracket between the outermost above-threshold sample on this side
        // and the outer bound, then bisect to the crossing.
        double outer = probes.back().x;
        double inner = x_peak;
        const auto consider = [&](const Probe& p) {
            const double dist = (p.x - x_peak) * direction;
            if (p.g > threshold && dist > (inner - x_peak) * direction &&
                dist < (outer - x_peak) * direction)
                inner = p.x;
        };
        for (const Probe& p : scan) consider(p);
        for (const Probe& p : probes) consider(p);
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (inner + outer);
            if (std::abs(outer - inner) <= 1e-12 * (1.0 + std::abs(mid))) break;
            if (std::max(g(mid), 0.0) > threshold)
                inner = mid;
            else
                outer = mid;
        }
        // 1% outward margin past the crossing keeps the truncated tail
        // strictly below threshold rather than sitting on it.
        return x_peak + direction * 1.01 * std::abs(outer - x_peak);
    };

    const double lo = refine_side(left, -1.0);
    const double hi = refine_side(right, +1.0);
    return {lo, hi};
}

}  // namespace morsent::quad
