#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "morsent/entropy.hpp"
#include "morsent/momentum.hpp"
#include "morsent/morse.hpp"
#include "morsent/quad.hpp"
#include "morsent/table_data.hpp"
#include "svg.hpp"

using nlohmann::json;
using namespace morsent;

namespace {

// Exit-code contract: 0 success, 1 usage/validation, 2 numerical
// non-convergence, 3 invariant violation.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitViolation = 3;

constexpr double kGoldenTolerance = 1.5e-3;

struct RunConfig {
    std::string lambda_arg;
    std::string n_arg;
    std::string space_arg = "x";
    std::string grid_arg = "auto";
    double alpha = 1.0;
    double hbar = 1.0;
    double mu = 0.5;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::string format = "pretty";
    std::string out_path;
    int precision = 4;
    bool golden = false;
    bool svg = false;

    morse::MorseParams params(double lambda) const {
        morse::MorseParams p;
        p.lambda = lambda;
        p.alpha = alpha;
        p.hbar = hbar;
        p.mu = mu;
        return p;
    }

    quad::QuadConfig quad_config() const {
        quad::QuadConfig cfg;
        cfg.rel_tol = rel_tol;
        cfg.abs_tol = abs_tol;
        return cfg;
    }
};

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string scientific(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, v);
    return buf;
}

std::string compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> parse_lambda_list(const std::string& arg) {
    std::vector<double> values;
    if (arg.empty()) return values;
    if (arg.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(arg);
        in >> lo >> c1 >> hi >> c2 >> step;
        if (!in || c1 != ':' || c2 != ':' || !(step > 0.0) || hi < lo)
            throw std::invalid_argument("--lambda range must be lo:hi:step with step > 0");
        const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) values.push_back(lo + i * step);
    } else {
        std::istringstream in(arg);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            values.push_back(std::stod(tok));
        }
    }
    for (double v : values)
        if (!(v > 0.0)) throw std::invalid_argument("--lambda values must be > 0");
    if (values.empty()) throw std::invalid_argument("--lambda resolved to an empty list");
    return values;
}

std::vector<int> parse_n_list(const std::string& arg) {
    std::vector<int> values;
    if (arg.empty()) return values;
    std::istringstream in(arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        const int n = std::stoi(tok);
        if (n < 0) throw std::invalid_argument("--n values must be >= 0");
        values.push_back(n);
    }
    if (values.empty()) throw std::invalid_argument("--n resolved to an empty list");
    return values;
}

entropy::GridSpec parse_grid(const std::string& arg) {
    if (arg == "auto") return entropy::GridSpec::auto_grid();
    double lo = 0, hi = 0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(arg);
    in >> lo >> c1 >> hi >> c2 >> count;
    if (!in || c1 != ':' || c2 != ':' || count < 2 || !(lo < hi))
        throw std::invalid_argument("--grid must be lo:hi:count (count >= 2) or auto");
    return entropy::GridSpec::explicit_grid(lo, hi, count);
}

// Output sink: --out writes the artifact file, otherwise stdout.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

json result_to_json(const entropy::EntropyResult& r) {
    return json{{"n", r.n},         {"lambda", r.lambda}, {"S_x", r.s_x},
                {"S_x_err", r.s_x_err}, {"S_p", r.s_p},   {"S_p_err", r.s_p_err},
                {"sum", r.sum},     {"bound", r.bound},   {"margin", r.margin}};
}

void write_result_csv(std::ostream& out, const std::vector<entropy::EntropyResult>& rows,
                      int precision) {
    out << "n,lambda,S_x,S_x_err,S_p,S_p_err,sum,bound,margin\n";
    for (const auto& r : rows) {
        out << r.n << ',' << fixed(r.lambda, precision) << ',' << fixed(r.s_x, precision)
            << ',' << scientific(r.s_x_err, 2) << ',' << fixed(r.s_p, precision) << ','
            << scientific(r.s_p_err, 2) << ',' << fixed(r.sum, precision) << ','
            << fixed(r.bound, precision) << ',' << fixed(r.margin, precision) << '\n';
    }
}

void write_result_pretty(std::ostream& out,
                         const std::vector<entropy::EntropyResult>& rows, int precision) {
    out << "   n  lambda";
    for (const char* h : {"S_x", "S_p", "sum", "bound", "margin"})
        out << "  " << h;
    out << '\n';
    for (const auto& r : rows) {
        char line[256];
        std::snprintf(line, sizeof line, "%4d  %6s  %s  %s  %s  %s  %s\n", r.n,
                      compact(r.lambda).c_str(), fixed(r.s_x, precision).c_str(),
                      fixed(r.s_p, precision).c_str(), fixed(r.sum, precision).c_str(),
                      fixed(r.bound, precision).c_str(),
                      fixed(r.margin, precision).c_str());
        out << line;
    }
}

void write_results(const RunConfig& cfg, const std::vector<entropy::EntropyResult>& rows) {
    Sink sink(cfg.out_path);
    if (cfg.format == "csv") {
        write_result_csv(sink.stream(), rows, cfg.precision);
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(result_to_json(r));
        sink.stream() << arr.dump(2) << '\n';
    } else {
        write_result_pretty(sink.stream(), rows, cfg.precision);
    }
}

// Valid (n, lambda) pairs in n-major, lambda-minor order; invalid explicit
// requests are reported on stderr.
std::vector<std::pair<int, double>> select_cells(const RunConfig& cfg,
                                                 bool note_invalid) {
    const std::vector<double> lambdas = parse_lambda_list(cfg.lambda_arg);
    std::vector<int> ns = parse_n_list(cfg.n_arg);
    if (ns.empty()) {
        int max_count = 0;
        for (double l : lambdas)
            max_count = std::max(max_count, morse::bound_state_count(cfg.params(l)));
        for (int n = 0; n < max_count; ++n) ns.push_back(n);
    }
    std::vector<std::pair<int, double>> cells;
    for (int n : ns) {
        for (double l : lambdas) {
            if (n < morse::bound_state_count(cfg.params(l))) {
                cells.emplace_back(n, l);
            } else if (note_invalid) {
                std::cerr << "note: skipping (n=" << n << ", lambda=" << compact(l)
                          << "): no such bound state (requires n < lambda - 1/2)\n";
            }
        }
    }
    return cells;
}

int cmd_table(const RunConfig& cfg) {
    std::vector<std::pair<int, double>> cells;
    if (cfg.golden || (cfg.lambda_arg.empty() && cfg.n_arg.empty())) {
        cells = table_data::reference_cells();
    } else if (cfg.lambda_arg.empty()) {
        throw std::invalid_argument("table: --n without --lambda is not a grid");
    } else {
        cells = select_cells(cfg, true);
        if (cells.empty())
            throw std::invalid_argument("table: selectors resolve to no valid state");
    }

    const auto scan = entropy::scan_cells(cfg.params(1.0), cells, cfg.quad_config());
    std::vector<entropy::EntropyResult> rows;
    for (const auto& cell : scan) {
        if (!cell.ok) {
            std::cerr << "error: (n=" << cell.n << ", lambda=" << compact(cell.lambda)
                      << "): " << cell.diagnostic << '\n';
            return kExitNumerical;
        }
        rows.push_back(cell.result);
    }
    write_results(cfg, rows);

    if (cfg.golden) {
        const auto& ref = table_data::reference_table();
        double max_dx = 0.0, max_dp = 0.0;
        int worst_dx_row = 0, worst_dp_row = 0;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            const double dx = std::abs(rows[i].s_x - ref[i].s_x);
            const double dp = std::abs(rows[i].s_p - ref[i].s_p);
            if (dx > max_dx) {
                max_dx = dx;
                worst_dx_row = static_cast<int>(i);
            }
            if (dp > max_dp) {
                max_dp = dp;
                worst_dp_row = static_cast<int>(i);
            }
        }
        const bool pass = max_dx <= kGoldenTolerance && max_dp <= kGoldenTolerance;
        std::cerr << "golden comparison over " << ref.size() << " reference rows:\n"
                  << "  max |dS_x| = " << scientific(max_dx, 2) << " at (n="
                  << ref[worst_dx_row].n << ", lambda=" << compact(ref[worst_dx_row].lambda)
                  << ")\n"
                  << "  max |dS_p| = " << scientific(max_dp, 2) << " at (n="
                  << ref[worst_dp_row].n << ", lambda=" << compact(ref[worst_dp_row].lambda)
                  << ")\n"
                  << "  tolerance " << scientific(kGoldenTolerance, 1) << " per entropy: "
                  << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? kExitOk : kExitViolation;
    }
    return kExitOk;
}

int cmd_entropy(const RunConfig& cfg) {
    if (cfg.lambda_arg.empty())
        throw std::invalid_argument("entropy: --lambda is required");
    const auto lambdas = parse_lambda_list(cfg.lambda_arg);
    auto ns = parse_n_list(cfg.n_arg);
    if (ns.empty()) ns.push_back(0);
    if (lambdas.size() != 1 || ns.size() != 1)
        throw std::invalid_argument("entropy: exactly one state (one --lambda, one --n)");

    const auto params = cfg.params(lambdas.front());
    if (morse::bound_state_count(params) == 0)
        throw std::invalid_argument("no bound states for lambda = " +
                                    compact(params.lambda));
    const auto state = morse::eigenstate(params, ns.front());  // may throw out_of_range
    const auto result = entropy::bbm_check(params, state, cfg.quad_config());
    const auto robertson = entropy::variance_uncertainty(params, state, cfg.quad_config());

    Sink sink(cfg.out_path);
    auto& out = sink.stream();
    if (cfg.format == "json") {
        json j = result_to_json(result);
        j["delta_x"] = robertson.delta_x;
        j["delta_p"] = robertson.delta_p;
        j["product"] = robertson.product;
        j["energy"] = state.energy;
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        write_result_csv(out, {result}, cfg.precision);
    } else {
        const int p = cfg.precision;
        out << "n       = " << result.n << '\n'
            << "lambda  = " << compact(result.lambda) << '\n'
            << "energy  = " << fixed(state.energy, p) << '\n'
            << "S_x     = " << fixed(result.s_x, p) << "  (err est "
            << scientific(result.s_x_err, 1) << ")\n"
            << "S_p     = " << fixed(result.s_p, p) << "  (err est "
            << scientific(result.s_p_err, 1) << ")\n"
            << "sum     = " << fixed(result.sum, p) << '\n'
            << "bound   = " << fixed(result.bound, p) << '\n'
            << "margin  = " << fixed(result.margin, p) << '\n'
            << "delta_x = " << fixed(robertson.delta_x, p) << '\n'
            << "delta_p = " << fixed(robertson.delta_p, p) << '\n'
            << "dx*dp   = " << fixed(robertson.product, p) << "  (>= "
            << fixed(0.5 * params.hbar, p) << ")\n";
    }
    return kExitOk;
}

std::string with_lambda_suffix(const std::string& path, double lambda, bool multi) {
    if (!multi) return path;
    const auto dot = path.find_last_of('.');
    const std::string tag = ".lambda" + std::string(compact(lambda));
    if (dot == std::string::npos || dot == 0) return path + tag;
    return path.substr(0, dot) + tag + path.substr(dot);
}

void write_curve_csv(std::ostream& out, const entropy::DensityCurve& curve,
                     int precision) {
    out << "coordinate,density,entropy_density\n";
    for (const auto& pt : curve.points)
        out << fixed(pt.coordinate, precision) << ',' << fixed(pt.probability_density, precision)
            << ',' << fixed(pt.entropy_density, precision) << '\n';
}

int cmd_density(const RunConfig& cfg) {
    if (cfg.lambda_arg.empty())
        throw std::invalid_argument("density: --lambda is required");
    if (cfg.space_arg != "x" && cfg.space_arg != "p")
        throw std::invalid_argument("density: --space must be x or p");
    const auto space = cfg.space_arg == "x" ? entropy::Space::position
                                            : entropy::Space::momentum;
    const auto lambdas = parse_lambda_list(cfg.lambda_arg);
    auto ns = parse_n_list(cfg.n_arg);
    if (ns.empty()) ns.push_back(0);
    if (ns.size() != 1)
        throw std::invalid_argument("density: exactly one --n per invocation");
    const int n = ns.front();
    const auto grid = parse_grid(cfg.grid_arg);

    std::vector<std::pair<double, entropy::DensityCurve>> curves;
    for (double lambda : lambdas) {
        const auto params = cfg.params(lambda);
        if (n >= morse::bound_state_count(params))
            throw std::invalid_argument("density: (n=" + std::to_string(n) +
                                        ", lambda=" + compact(lambda) +
                                        ") is not a bound state");
        const auto state = morse::eigenstate(params, n);
        curves.emplace_back(lambda, entropy::entropy_density_curve(params, state, space, grid));
    }

    const bool multi = curves.size() > 1;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& [lambda, curve] : curves) {
            json points = json::array();
            for (const auto& pt : curve.points)
                points.push_back({{"coordinate", pt.coordinate},
                                  {"density", pt.probability_density},
                                  {"entropy_density", pt.entropy_density}});
            arr.push_back({{"space", cfg.space_arg},
                           {"n", n},
                           {"lambda", lambda},
                           {"points", std::move(points)}});
        }
        Sink sink(cfg.out_path);
        sink.stream() << arr.dump(2) << '\n';
    } else if (!cfg.out_path.empty()) {
        for (const auto& [lambda, curve] : curves) {
            Sink sink(with_lambda_suffix(cfg.out_path, lambda, multi));
            write_curve_csv(sink.stream(), curve, cfg.precision);
        }
    } else {
        for (const auto& [lambda, curve] : curves) {
            if (multi) std::cout << "# lambda=" << compact(lambda) << '\n';
            write_curve_csv(std::cout, curve, cfg.precision);
            if (multi) std::cout << '\n';
        }
    }

    if (cfg.svg) {
        std::vector<svg::Series> series;
        for (const auto& [lambda, curve] : curves) {
            svg::Series s;
            s.label = "lambda = " + std::string(compact(lambda));
            for (const auto& pt : curve.points)
                s.points.emplace_back(pt.coordinate, pt.entropy_density);
            series.push_back(std::move(s));
        }
        std::string svg_path = cfg.out_path.empty() ? "entropy_density.svg"
                                                    : cfg.out_path;
        const auto dot = svg_path.find_last_of('.');
        if (dot != std::string::npos && dot != 0) svg_path = svg_path.substr(0, dot);
        svg_path += ".svg";
        const std::string coord = cfg.space_arg == "x" ? "x" : "p";
        svg::write_chart(svg_path,
                         "entropy density (" + coord + "-space), n = " + std::to_string(n),
                         coord, "rho ln rho", series);
        std::cerr << "wrote " << svg_path << '\n';
    }
    return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
    if (cfg.lambda_arg.empty())
        throw std::invalid_argument("check: --lambda (value, list, or lo:hi:step) is required");
    const auto cells = select_cells(cfg, false);
    if (cells.empty())
        throw std::invalid_argument("check: no valid states in the requested range");

    // lambda-major sweep order reads more naturally for a range scan
    auto ordered = cells;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });

    const auto scan = entropy::scan_cells(cfg.params(1.0), ordered, cfg.quad_config());
    int violations = 0;
    std::vector<entropy::EntropyResult> rows;
    for (const auto& cell : scan) {
        if (!cell.ok) {
            std::cerr << "error: (n=" << cell.n << ", lambda=" << compact(cell.lambda)
                      << "): " << cell.diagnostic << '\n';
            return kExitNumerical;
        }
        rows.push_back(cell.result);
        if (cell.result.margin < -(cell.result.s_x_err + cell.result.s_p_err))
            ++violations;
    }

    Sink sink(cfg.out_path);
    auto& out = sink.stream();
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(result_to_json(r));
        json j{{"states", std::move(arr)},
               {"violations", violations},
               {"verdict", violations == 0 ? "pass" : "violation"}};
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        write_result_csv(out, rows, cfg.precision);
    } else {
        write_result_pretty(out, rows, cfg.precision);
        out << (violations == 0 ? "bound holds" : "BOUND VIOLATED") << " for "
            << rows.size() << " state(s)\n";
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--lambda", cfg.lambda_arg,
                    "depth parameter: value, comma list, or lo:hi:step range");
    cmd->add_option("--n", cfg.n_arg, "vibrational quantum number(s), comma list");
    cmd->add_option("--alpha", cfg.alpha, "range parameter alpha")->check(CLI::PositiveNumber);
    cmd->add_option("--hbar", cfg.hbar, "action unit")->check(CLI::PositiveNumber);
    cmd->add_option("--mu", cfg.mu, "reduced mass")->check(CLI::PositiveNumber);
    cmd->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    cmd->add_option("--out", cfg.out_path, "write the artifact to this path");
    cmd->add_option("--precision", cfg.precision, "display decimals for csv/pretty")
        ->check(CLI::Range(0, 17));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse-well information entropies and the BBM uncertainty bound"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* table = app.add_subcommand(
        "table", "entropy table over an (n, lambda) grid; default grid matches the "
                 "published reference table");
    add_common_options(table, cfg);
    table->add_flag("--golden", cfg.golden,
                    "compare the default grid against the embedded reference table");

    auto* entropy_cmd =
        app.add_subcommand("entropy", "S_x, S_p, BBM margin, and the Robertson product "
                                      "for a single state");
    add_common_options(entropy_cmd, cfg);

    auto* density = app.add_subcommand(
        "density", "sampled density and entropy-density curve(s) for one level");
    add_common_options(density, cfg);
    density->add_option("--space", cfg.space_arg, "x (position) or p (momentum)")
        ->check(CLI::IsMember({"x", "p"}));
    density->add_option("--grid", cfg.grid_arg, "sampling grid lo:hi:count or auto");
    density->add_flag("--svg", cfg.svg, "also write an SVG line chart");

    auto* check = app.add_subcommand(
        "check", "verify the BBM bound over a lambda range (all bound states)");
    add_common_options(check, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(cfg);
        if (entropy_cmd->parsed()) return cmd_entropy(cfg);
        if (density->parsed()) return cmd_density(cfg);
        if (check->parsed()) return cmd_check(cfg);
    } catch (const quad::non_convergence_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const quad::non_finite_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const quad::support_not_found_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
