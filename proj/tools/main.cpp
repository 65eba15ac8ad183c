// Command-line driver: wall-law cell solves, radial reference radii, rough
// free-boundary solves, order-of-convergence tables, figure polylines and
// curve-metric reports. Subcommands: cell, radial, solve, table, figure,
// metrics. Exit codes: 0 success, 1 numeric failure, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rb/cell.hpp"
#include "rb/elliptic.hpp"
#include "rb/errors.hpp"
#include "rb/free_boundary.hpp"
#include "rb/io.hpp"
#include "rb/metrics.hpp"
#include "rb/radial.hpp"
#include "rb/roughness.hpp"
#include "rb/star_curve.hpp"

namespace {

using rb::fmt;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

rb::RoughnessProfile parse_shape(const std::string& shape) {
    if (shape == "h1") return rb::RoughnessProfile::h1();
    if (shape == "h2") return rb::RoughnessProfile::h2();
    if (shape == "zero") return rb::RoughnessProfile::zero();
    if (shape.rfind("file:", 0) == 0) return rb::RoughnessProfile::from_file(shape.substr(5));
    throw UsageError("unknown shape '" + shape + "' (expected h1|h2|zero|file:PATH)");
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    const double v = to_double(s);
    const int i = static_cast<int>(std::llround(v));
    if (static_cast<double>(i) != v) throw UsageError("not an integer: '" + s + "'");
    return i;
}

bool to_bool(const std::string& s) {
    if (s == "1" || s == "true" || s == "yes") return true;
    if (s == "0" || s == "false" || s == "no") return false;
    throw UsageError("not a boolean: '" + s + "'");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw UsageError("empty list: '" + s + "'");
    return out;
}

/** Binds command parameters to config keys so that a key=value file can
 * override the parsed flags, and so that the effective configuration can be
 * serialized back out. */
class ConfigBinder {
  public:
    template <typename T>
    void bind(const std::string& key, T* target) {
        setters_[key] = [target](const std::string& v) {
            if constexpr (std::is_same_v<T, double>)
                *target = to_double(v);
            else if constexpr (std::is_same_v<T, int>)
                *target = to_int(v);
            else if constexpr (std::is_same_v<T, bool>)
                *target = to_bool(v);
            else
                *target = v;
        };
        writers_.emplace_back(key, [target]() {
            if constexpr (std::is_same_v<T, double>)
                return fmt(*target);
            else if constexpr (std::is_same_v<T, int>)
                return std::to_string(*target);
            else if constexpr (std::is_same_v<T, bool>)
                return std::string(*target ? "true" : "false");
            else
                return std::string(*target);
        });
    }

    void apply(const std::string& config_path) {
        for (const auto& [key, value] : rb::read_key_values(config_path)) {
            auto it = setters_.find(key);
            if (it == setters_.end()) throw UsageError("unknown config key '" + key + "'");
            it->second(value);
        }
    }

    std::vector<std::string> provenance(const std::string& command) const {
        std::vector<std::string> lines{"tool: rough-bernoulli", "command: " + command};
        for (const auto& [key, writer] : writers_) lines.push_back(key + " = " + writer());
        return lines;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw rb::ParseError("cannot open for writing: " + path);
        for (const auto& [key, writer] : writers_) out << key << " = " << writer() << "\n";
    }

  private:
    std::map<std::string, std::function<void(const std::string&)>> setters_;
    std::vector<std::pair<std::string, std::function<std::string()>>> writers_;
};

std::string out_path(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / name).string();
}

rb::WallLawConstant auto_b0(const rb::RoughnessProfile& profile, double lambda, double m_trunc) {
    const auto cell = rb::solve_cell(profile, m_trunc, 257, 256);
    const double rho0 = rb::RadialSolution::unperturbed(lambda).rho;
    return rb::compute_b0(lambda, rho0, rb::trace_mean(cell));
}

// ---------------------------------------------------------------- cell ----

struct CellOpts {
    std::string shape = "h1";
    double m_trunc = 6.0;
    int nr = 257;
    int ntheta = 256;
    double lambda = 2.0 * std::exp(-0.5);
    double mu = 0.9;
    std::string out = ".";
    bool dump_field = false;
    std::string config, save_config;
};

int run_cell(CellOpts& o, ConfigBinder& binder) {
    if (!o.config.empty()) binder.apply(o.config);
    if (!o.save_config.empty()) binder.save(o.save_config);
    const auto profile = parse_shape(o.shape);
    const auto header = binder.provenance("cell");

    const auto cell = rb::solve_cell(profile, o.m_trunc, o.nr, o.ntheta);
    const double mean = rb::trace_mean(cell);
    const auto wall = rb::compute_b0(o.lambda, rb::RadialSolution::unperturbed(o.lambda).rho, mean);
    const auto decay = rb::decay_check(cell, o.mu);

    const auto trace = cell.trace_at_height(0.0);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < cell.n_theta; ++i)
        rows.push_back({cell.theta(i), trace[static_cast<std::size_t>(i)]});
    rb::write_csv(out_path(o.out, "cell_" + profile.name() + "_trace.csv"), header,
                  {"Theta", "u(0,Theta)"}, rows);

    std::ofstream report(out_path(o.out, "cell_" + profile.name() + "_report.txt"));
    for (const auto& line : header) report << "# " << line << "\n";
    report << "mean_trace = " << fmt(mean) << "\n";
    report << "rho0 = " << fmt(wall.rho0) << "\n";
    report << "lambda = " << fmt(wall.lambda) << "\n";
    report << "b0 = " << fmt(wall.b0) << "\n";
    report << "decay_mu = " << fmt(decay.mu) << "\n";
    report << "decay_c = " << fmt(decay.c_estimate) << "\n";
    report << "decay_monotone = " << (decay.monotone ? "true" : "false") << "\n";
    for (std::size_t k = 0; k < decay.heights.size(); ++k)
        report << "deviation R=" << fmt(decay.heights[k]) << " : " << fmt(decay.deviations[k])
               << "\n";

    if (o.dump_field)
        rb::write_cell_solution(out_path(o.out, "cell_" + profile.name() + "_field.txt"), cell,
                                header);

    std::printf("trace mean = %.5f\n", mean);
    std::printf("b0 = %.5f (lambda = %s, rho0 = %s)\n", wall.b0, fmt(wall.lambda).c_str(),
                fmt(wall.rho0).c_str());
    return 0;
}

// -------------------------------------------------------------- radial ----

struct RadialOpts {
    double lambda = 2.0 * std::exp(-0.5);
    std::optional<double> b0;
    std::optional<double> eps;
    std::string out;
    std::string config, save_config;
};

int run_radial(RadialOpts& o, ConfigBinder& binder) {
    if (!o.config.empty()) binder.apply(o.config);
    if (!o.save_config.empty()) binder.save(o.save_config);
    const auto base = rb::RadialSolution::unperturbed(o.lambda);
    std::printf("rho0 = %s\n", fmt(base.rho).c_str());
    std::optional<rb::RadialSolution> corrected;
    if (o.b0 && o.eps) {
        corrected = rb::RadialSolution::corrected(o.lambda, *o.b0, *o.eps);
        std::printf("rho_eps0 = %s\n", fmt(corrected->rho).c_str());
    }
    if (!o.out.empty()) {
        std::ofstream report(out_path(o.out, "radial_report.txt"));
        for (const auto& line : binder.provenance("radial")) report << "# " << line << "\n";
        report << "rho0 = " << fmt(base.rho) << "\n";
        if (corrected) report << "rho_eps0 = " << fmt(corrected->rho) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- solve ----

struct SolveOpts {
    std::string shape = "h1";
    double eps = 0.1;
    double lambda = 2.0 * std::exp(-0.5);
    int nr = 64;
    int ntheta = 0;  // 0: pick a multiple of 1/eps near 256
    double tau = 0.5;
    double tol = 1e-8;
    int max_iter = 200;
    std::optional<double> b0;
    double m_trunc = 6.0;
    bool plain = false;
    bool smooth = false;
    std::string out = ".";
    std::string config, save_config;
};

int choose_ntheta(int requested, double eps, int target) {
    const int periods = rb::roughness_periods(eps);
    if (requested > 0) {
        if (requested % periods != 0)
            throw UsageError("ntheta must be a multiple of 1/eps = " + std::to_string(periods));
        return requested;
    }
    const int mult = std::max(1, static_cast<int>(std::lround(static_cast<double>(target) / periods)));
    return mult * periods;
}

rb::BernoulliParams make_params(const SolveOpts& o, const rb::RoughnessProfile& profile,
                                double b0_value) {
    rb::BernoulliParams p;
    p.lambda = o.lambda;
    p.profile = profile;
    p.eps = o.eps;
    p.nr = o.nr;
    p.ntheta = choose_ntheta(o.ntheta, o.eps, 256);
    p.tau = o.tau;
    p.tolerance = o.tol;
    p.max_iter = o.max_iter;
    p.b0 = b0_value;
    p.scheme = o.plain ? rb::UpdateScheme::plain : rb::UpdateScheme::modal;
    p.smooth_gradient = o.smooth;
    return p;
}

int run_solve(SolveOpts& o, ConfigBinder& binder) {
    if (!o.config.empty()) binder.apply(o.config);
    if (!o.save_config.empty()) binder.save(o.save_config);
    const auto profile = parse_shape(o.shape);
    const double b0 = o.b0 ? *o.b0 : auto_b0(profile, o.lambda, o.m_trunc).b0;
    const auto params = make_params(o, profile, b0);
    auto header = binder.provenance("solve");
    header.push_back("b0 = " + fmt(b0) + (o.b0 ? " (given)" : " (computed)"));
    header.push_back("ntheta_effective = " + std::to_string(params.ntheta));
    header.push_back("gradient_smoothing = " + std::string(params.smooth_gradient ? "on" : "off"));

    const auto state = rb::solve_free_boundary(params);
    const auto cmp = rb::compare_to_effective(state, params, b0);

    std::vector<std::vector<double>> boundary_rows;
    for (int i = 0; i < state.outer.size(); ++i)
        boundary_rows.push_back({state.outer.theta(i), state.outer.radius(i)});
    rb::write_csv(out_path(o.out, "solve_" + profile.name() + "_boundary.csv"), header,
                  {"theta", "rho"}, boundary_rows);

    std::vector<std::vector<double>> resid_rows;
    for (std::size_t k = 0; k < state.residual_history.size(); ++k)
        resid_rows.push_back({static_cast<double>(k), state.residual_history[k]});
    rb::write_csv(out_path(o.out, "solve_" + profile.name() + "_residuals.csv"), header,
                  {"iteration", "residual"}, resid_rows);

    std::ofstream report(out_path(o.out, "solve_" + profile.name() + "_report.txt"));
    for (const auto& line : header) report << "# " << line << "\n";
    report << "residual = " << fmt(state.residual) << "\n";
    report << "iterations = " << state.iterations << "\n";
    report << "tau_final = " << fmt(state.tau_final) << "\n";
    report << "rho0 = " << fmt(cmp.rho0) << "\n";
    report << "rho_eps0 = " << fmt(cmp.rho_eps0) << "\n";
    report << "dh_corrected = " << fmt(cmp.corrected.dh) << "\n";
    report << "d1_corrected = " << fmt(cmp.corrected.d1) << "\n";
    report << "d2_corrected = " << fmt(cmp.corrected.d2) << "\n";
    report << "dh_over_eps2_corrected = " << fmt(cmp.corrected.dh_over_eps2) << "\n";
    report << "dh_uncorrected = " << fmt(cmp.uncorrected.dh) << "\n";
    report << "dh_over_eps_uncorrected = " << fmt(cmp.uncorrected.dh_over_eps) << "\n";

    std::printf("converged: residual = %s after %d iterations\n", fmt(state.residual).c_str(),
                state.iterations);
    std::printf("D_H(A_eps, A_eps^0)/eps^2 = %s\n", fmt(cmp.corrected.dh_over_eps2).c_str());
    return 0;
}

// --------------------------------------------------------------- table ----

struct TableOpts {
    std::string shape = "h1";
    std::string eps_list = "0.1,0.05,0.025";
    std::string nr_list = "48,96,192";
    std::string ntheta_list = "480,960,1920";
    double lambda = 2.0 * std::exp(-0.5);
    double tau = 0.5;
    double tol = 1e-6;
    int max_iter = 400;
    std::optional<double> b0;
    double m_trunc = 6.0;
    int jobs = 2;
    bool plain = false;
    bool smooth = false;
    std::string out = ".";
    std::string config, save_config;
};

struct TableCell {
    bool ok = false;
    std::string error;
    double ratio2 = std::numeric_limits<double>::quiet_NaN();  // D_H(A_eps,A_eps^0)/eps^2
    double ratio1 = std::numeric_limits<double>::quiet_NaN();  // D_H(A_eps,A_0)/eps
};

int run_table(TableOpts& o, ConfigBinder& binder) {
    if (!o.config.empty()) binder.apply(o.config);
    if (!o.save_config.empty()) binder.save(o.save_config);
    const auto profile = parse_shape(o.shape);

    std::vector<double> eps_values;
    for (const auto& t : split_list(o.eps_list)) eps_values.push_back(to_double(t));
    std::vector<int> nr_values, ntheta_values;
    for (const auto& t : split_list(o.nr_list)) nr_values.push_back(to_int(t));
    for (const auto& t : split_list(o.ntheta_list)) ntheta_values.push_back(to_int(t));
    if (nr_values.size() != ntheta_values.size())
        throw UsageError("--nr and --ntheta lists must have the same length");
    for (double e : eps_values) rb::roughness_periods(e);  // validate reciprocals

    const double b0 = o.b0 ? *o.b0 : auto_b0(profile, o.lambda, o.m_trunc).b0;
    const double rho0 = rb::RadialSolution::unperturbed(o.lambda).rho;

    const std::size_t n_mesh = nr_values.size(), n_eps = eps_values.size();
    std::vector<TableCell> cells(n_mesh * n_eps);
    auto run_one = [&](std::size_t row, std::size_t col) {
        TableCell c;
        try {
            SolveOpts so;
            so.shape = o.shape;
            so.eps = eps_values[col];
            so.lambda = o.lambda;
            so.nr = nr_values[row];
            so.ntheta = ntheta_values[row];
            so.tau = o.tau;
            so.tol = o.tol;
            so.max_iter = o.max_iter;
            so.plain = o.plain;
            so.smooth = o.smooth;
            const auto params = make_params(so, profile, b0);
            const auto state = rb::solve_free_boundary(params);
            const auto cmp = rb::compare_to_effective(state, params, b0);
            c.ratio2 = cmp.corrected.dh_over_eps2;
            c.ratio1 = cmp.uncorrected.dh_over_eps;
            c.ok = true;
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        return c;
    };

    const int jobs = std::max(1, o.jobs);
    for (std::size_t start = 0; start < cells.size(); start += static_cast<std::size_t>(jobs)) {
        std::vector<std::future<TableCell>> wave;
        const std::size_t end = std::min(cells.size(), start + static_cast<std::size_t>(jobs));
        for (std::size_t k = start; k < end; ++k)
            wave.push_back(std::async(std::launch::async, run_one, k / n_eps, k % n_eps));
        for (std::size_t k = start; k < end; ++k) cells[k] = wave[k - start].get();
    }

    auto header = binder.provenance("table");
    header.push_back("b0 = " + fmt(b0) + (o.b0 ? " (given)" : " (computed)"));
    header.push_back("rho0 = " + fmt(rho0));
    header.push_back(
        "columns r2_*: D_H(A_eps, A_eps^0)/eps^2; columns r1_*: D_H(A_eps, A_0)/eps");
    header.push_back(
        "dx_eq: outer-boundary arc spacing 2*pi*rho0/ntheta of the boundary-fitted mesh");
    std::vector<std::string> columns{"nr", "ntheta", "dx_eq"};
    for (double e : eps_values) {
        columns.push_back("r2_eps" + fmt(e));
        columns.push_back("r1_eps" + fmt(e));
    }

    bool any_failed = false;
    std::vector<std::vector<double>> rows;
    for (std::size_t row = 0; row < n_mesh; ++row) {
        std::vector<double> r{static_cast<double>(nr_values[row]),
                              static_cast<double>(ntheta_values[row]),
                              kTwoPi * rho0 / ntheta_values[row]};
        for (std::size_t col = 0; col < n_eps; ++col) {
            const TableCell& c = cells[row * n_eps + col];
            if (!c.ok) {
                any_failed = true;
                header.push_back("FAILED nr=" + std::to_string(nr_values[row]) +
                                 " eps=" + fmt(eps_values[col]) + ": " + c.error);
            }
            r.push_back(c.ratio2);
            r.push_back(c.ratio1);
        }
        rows.push_back(std::move(r));
    }
    rb::write_csv(out_path(o.out, "table_" + profile.name() + ".csv"), header, columns, rows);

    for (std::size_t row = 0; row < n_mesh; ++row) {
        std::printf("nr=%d ntheta=%d:", nr_values[row], ntheta_values[row]);
        for (std::size_t col = 0; col < n_eps; ++col) {
            const TableCell& c = cells[row * n_eps + col];
            if (c.ok)
                std::printf("  %s", fmt(c.ratio2).c_str());
            else
                std::printf("  FAILED");
        }
        std::printf("\n");
    }
    return any_failed ? 1 : 0;
}

// -------------------------------------------------------------- figure ----

struct FigureOpts {
    std::string shape = "h1";
    double eps = 0.1;
    double lambda = 8.0 * std::exp(-0.125);
    int nr = 64;
    int ntheta = 0;
    double tau = 0.5;
    double tol = 1e-6;
    int max_iter = 400;
    std::optional<double> b0;
    double m_trunc = 6.0;
    bool plain = false;
    bool smooth = false;
    std::string out = ".";
    std::string config, save_config;
};

void write_polyline(const std::string& path, const std::vector<std::string>& header,
                    const rb::StarCurve& curve) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= curve.size(); ++i) {
        const auto p = curve.point(i % curve.size());
        rows.push_back({p.x, p.y});
    }
    rb::write_csv(path, header, {"x", "y"}, rows);
}

int run_figure(FigureOpts& o, ConfigBinder& binder) {
    if (!o.config.empty()) binder.apply(o.config);
    if (!o.save_config.empty()) binder.save(o.save_config);
    const auto profile = parse_shape(o.shape);
    const double b0 = o.b0 ? *o.b0 : auto_b0(profile, o.lambda, o.m_trunc).b0;

    SolveOpts so;
    so.shape = o.shape;
    so.eps = o.eps;
    so.lambda = o.lambda;
    so.nr = o.nr;
    so.ntheta = o.ntheta;
    so.tau = o.tau;
    so.tol = o.tol;
    so.max_iter = o.max_iter;
    so.plain = o.plain;
    so.smooth = o.smooth;
    const auto params = make_params(so, profile, b0);
    const auto state = rb::solve_free_boundary(params);
    const auto inner = rb::inner_boundary(profile, o.eps, params.ntheta);

    // Zoom window around theta = 0 covering a few roughness periods, the way
    // the zoomed panels present the boundary oscillation.
    const double xmin = 1.0 - o.eps * profile.max_value() - 0.05;
    const double xmax = state.outer.max_radius() + 0.05;
    const double yspan = 3.0 * kTwoPi * o.eps;
    auto header = binder.provenance("figure");
    header.push_back("b0 = " + fmt(b0) + (o.b0 ? " (given)" : " (computed)"));
    header.push_back("ntheta_effective = " + std::to_string(params.ntheta));
    header.push_back("zoom: xmin=" + fmt(xmin) + " xmax=" + fmt(xmax) + " ymin=" + fmt(-yspan) +
                     " ymax=" + fmt(yspan));

    const std::string tag = profile.name() + "_eps" + fmt(o.eps);
    write_polyline(out_path(o.out, "figure_" + tag + "_inner.csv"), header, inner);
    write_polyline(out_path(o.out, "figure_" + tag + "_outer.csv"), header, state.outer);

    std::printf("figure polylines written (residual %s, %d iterations)\n",
                fmt(state.residual).c_str(), state.iterations);
    return 0;
}

// ------------------------------------------------------------- metrics ----

struct MetricsOpts {
    std::string file_a, file_b;
    double delta = 0.5;
    double m_bound = 4.0;
    std::string out;
    std::string config, save_config;
};

int run_metrics(MetricsOpts& o, ConfigBinder& binder) {
    if (!o.config.empty()) binder.apply(o.config);
    if (!o.save_config.empty()) binder.save(o.save_config);
    const auto a = rb::read_star_curve(o.file_a);
    const auto b = rb::read_star_curve(o.file_b);
    const rb::AnnulusBounds bounds(o.delta, o.m_bound);
    const auto rep = rb::metric_report(a, b, bounds);

    std::printf("d1 = %s\n", fmt(rep.d1).c_str());
    std::printf("d2 = %s\n", fmt(rep.d2).c_str());
    std::printf("hausdorff = %s\n", fmt(rep.hausdorff).c_str());
    std::printf("slack (hausdorff <= d1) = %s\n", fmt(rep.slack_dh_le_d1).c_str());
    std::printf("slack (d2 <= m/delta^2 * hausdorff) = %s\n", fmt(rep.slack_d2_le_dh).c_str());
    std::printf("slack (d1 <= m^2/delta * d2) = %s\n", fmt(rep.slack_d1_le_d2).c_str());

    if (!o.out.empty()) {
        std::ofstream report(o.out);
        if (!report) throw rb::ParseError("cannot open for writing: " + o.out);
        for (const auto& line : binder.provenance("metrics")) report << "# " << line << "\n";
        report << "d1 = " << fmt(rep.d1) << "\n";
        report << "d2 = " << fmt(rep.d2) << "\n";
        report << "hausdorff = " << fmt(rep.hausdorff) << "\n";
        report << "slack_dh_le_d1 = " << fmt(rep.slack_dh_le_d1) << "\n";
        report << "slack_d2_le_dh = " << fmt(rep.slack_d2_le_dh) << "\n";
        report << "slack_d1_le_d2 = " << fmt(rep.slack_d1_le_d2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernoulli free boundaries on rough discs and their wall-law correction"};
    app.require_subcommand(1);

    CellOpts cell_opts;
    ConfigBinder cell_binder;
    auto* cell_cmd = app.add_subcommand("cell", "solve the truncated cell problem, report b0");
    cell_cmd->add_option("--shape", cell_opts.shape, "h1|h2|zero|file:PATH");
    cell_cmd->add_option("--mtrunc", cell_opts.m_trunc, "truncation height");
    cell_cmd->add_option("--nr", cell_opts.nr, "node count across the strip");
    cell_cmd->add_option("--ntheta", cell_opts.ntheta, "angular node count (even)");
    cell_cmd->add_option("--lambda", cell_opts.lambda, "Bernoulli constant for b0");
    cell_cmd->add_option("--mu", cell_opts.mu, "decay-report rate in (0,1)");
    cell_cmd->add_option("--out", cell_opts.out, "output directory");
    cell_cmd->add_flag("--dump-field", cell_opts.dump_field, "also dump the strip solution");
    cell_cmd->add_option("--config", cell_opts.config, "key=value file overriding flags");
    cell_cmd->add_option("--save-config", cell_opts.save_config, "write effective config");
    cell_binder.bind("shape", &cell_opts.shape);
    cell_binder.bind("mtrunc", &cell_opts.m_trunc);
    cell_binder.bind("nr", &cell_opts.nr);
    cell_binder.bind("ntheta", &cell_opts.ntheta);
    cell_binder.bind("lambda", &cell_opts.lambda);
    cell_binder.bind("mu", &cell_opts.mu);
    cell_binder.bind("out", &cell_opts.out);
    cell_binder.bind("dump_field", &cell_opts.dump_field);

    RadialOpts radial_opts;
    ConfigBinder radial_binder;
    double radial_b0 = 0.0, radial_eps = 0.0;
    auto* radial_cmd = app.add_subcommand("radial", "closed-form radii rho0 / rho_eps0");
    radial_cmd->add_option("--lambda", radial_opts.lambda, "Bernoulli constant");
    auto* rb0 = radial_cmd->add_option("--b0", radial_b0, "wall-law constant");
    auto* reps = radial_cmd->add_option("--eps", radial_eps, "roughness size");
    radial_cmd->add_option("--out", radial_opts.out, "output directory");
    radial_cmd->add_option("--config", radial_opts.config, "key=value file overriding flags");
    radial_cmd->add_option("--save-config", radial_opts.save_config, "write effective config");
    radial_binder.bind("lambda", &radial_opts.lambda);
    radial_binder.bind("out", &radial_opts.out);

    SolveOpts solve_opts;
    ConfigBinder solve_binder;
    double solve_b0 = 0.0;
    auto* solve_cmd = app.add_subcommand("solve", "solve one rough free-boundary problem");
    solve_cmd->add_option("--shape", solve_opts.shape, "h1|h2|zero|file:PATH");
    solve_cmd->add_option("--eps", solve_opts.eps, "roughness size (1/integer)");
    solve_cmd->add_option("--lambda", solve_opts.lambda, "Bernoulli constant");
    solve_cmd->add_option("--nr", solve_opts.nr, "radial node count");
    solve_cmd->add_option("--ntheta", solve_opts.ntheta, "angular node count (0 = auto)");
    solve_cmd->add_option("--tau", solve_opts.tau, "relaxation in (0,1]");
    solve_cmd->add_option("--tol", solve_opts.tol, "residual tolerance");
    solve_cmd->add_option("--max-iter", solve_opts.max_iter, "iteration budget");
    auto* sb0 = solve_cmd->add_option("--b0", solve_b0, "wall-law constant (default: computed)");
    solve_cmd->add_option("--mtrunc", solve_opts.m_trunc, "cell truncation for computed b0");
    solve_cmd->add_flag("--plain", solve_opts.plain, "undamped pointwise update scheme");
    solve_cmd->add_flag("--smooth", solve_opts.smooth, "3-point filter on the update");
    solve_cmd->add_option("--out", solve_opts.out, "output directory");
    solve_cmd->add_option("--config", solve_opts.config, "key=value file overriding flags");
    solve_cmd->add_option("--save-config", solve_opts.save_config, "write effective config");
    solve_binder.bind("shape", &solve_opts.shape);
    solve_binder.bind("eps", &solve_opts.eps);
    solve_binder.bind("lambda", &solve_opts.lambda);
    solve_binder.bind("nr", &solve_opts.nr);
    solve_binder.bind("ntheta", &solve_opts.ntheta);
    solve_binder.bind("tau", &solve_opts.tau);
    solve_binder.bind("tol", &solve_opts.tol);
    solve_binder.bind("max_iter", &solve_opts.max_iter);
    solve_binder.bind("mtrunc", &solve_opts.m_trunc);
    solve_binder.bind("plain", &solve_opts.plain);
    solve_binder.bind("smooth", &solve_opts.smooth);
    solve_binder.bind("out", &solve_opts.out);

    TableOpts table_opts;
    ConfigBinder table_binder;
    double table_b0 = 0.0;
    auto* table_cmd = app.add_subcommand("table", "D_H/eps^2 sweep over meshes and eps");
    table_cmd->add_option("--shape", table_opts.shape, "h1|h2|zero|file:PATH");
    table_cmd->add_option("--eps", table_opts.eps_list, "comma list of eps values");
    table_cmd->add_option("--lambda", table_opts.lambda, "Bernoulli constant");
    table_cmd->add_option("--nr", table_opts.nr_list, "comma list of radial node counts");
    table_cmd->add_option("--ntheta", table_opts.ntheta_list, "comma list of angular counts");
    table_cmd->add_option("--tau", table_opts.tau, "relaxation in (0,1]");
    table_cmd->add_option("--tol", table_opts.tol, "residual tolerance");
    table_cmd->add_option("--max-iter", table_opts.max_iter, "iteration budget");
    auto* tb0 = table_cmd->add_option("--b0", table_b0, "wall-law constant (default: computed)");
    table_cmd->add_option("--mtrunc", table_opts.m_trunc, "cell truncation for computed b0");
    table_cmd->add_option("--jobs", table_opts.jobs, "parallel table cells");
    table_cmd->add_flag("--plain", table_opts.plain, "undamped pointwise update scheme");
    table_cmd->add_flag("--smooth", table_opts.smooth, "3-point filter on the update");
    table_cmd->add_option("--out", table_opts.out, "output directory");
    table_cmd->add_option("--config", table_opts.config, "key=value file overriding flags");
    table_cmd->add_option("--save-config", table_opts.save_config, "write effective config");
    table_binder.bind("shape", &table_opts.shape);
    table_binder.bind("eps", &table_opts.eps_list);
    table_binder.bind("lambda", &table_opts.lambda);
    table_binder.bind("nr", &table_opts.nr_list);
    table_binder.bind("ntheta", &table_opts.ntheta_list);
    table_binder.bind("tau", &table_opts.tau);
    table_binder.bind("tol", &table_opts.tol);
    table_binder.bind("max_iter", &table_opts.max_iter);
    table_binder.bind("mtrunc", &table_opts.m_trunc);
    table_binder.bind("jobs", &table_opts.jobs);
    table_binder.bind("plain", &table_opts.plain);
    table_binder.bind("smooth", &table_opts.smooth);
    table_binder.bind("out", &table_opts.out);

    FigureOpts figure_opts;
    ConfigBinder figure_binder;
    double figure_b0 = 0.0;
    auto* figure_cmd = app.add_subcommand("figure", "boundary polylines for plotting");
    figure_cmd->add_option("--shape", figure_opts.shape, "h1|h2|zero|file:PATH");
    figure_cmd->add_option("--eps", figure_opts.eps, "roughness size (1/integer)");
    figure_cmd->add_option("--lambda", figure_opts.lambda, "Bernoulli constant");
    figure_cmd->add_option("--nr", figure_opts.nr, "radial node count");
    figure_cmd->add_option("--ntheta", figure_opts.ntheta, "angular node count (0 = auto)");
    figure_cmd->add_option("--tau", figure_opts.tau, "relaxation in (0,1]");
    figure_cmd->add_option("--tol", figure_opts.tol, "residual tolerance");
    figure_cmd->add_option("--max-iter", figure_opts.max_iter, "iteration budget");
    auto* fb0 = figure_cmd->add_option("--b0", figure_b0, "wall-law constant (default: computed)");
    figure_cmd->add_option("--mtrunc", figure_opts.m_trunc, "cell truncation for computed b0");
    figure_cmd->add_flag("--plain", figure_opts.plain, "undamped pointwise update scheme");
    figure_cmd->add_flag("--smooth", figure_opts.smooth, "3-point filter on the update");
    figure_cmd->add_option("--out", figure_opts.out, "output directory");
    figure_cmd->add_option("--config", figure_opts.config, "key=value file overriding flags");
    figure_cmd->add_option("--save-config", figure_opts.save_config, "write effective config");
    figure_binder.bind("shape", &figure_opts.shape);
    figure_binder.bind("eps", &figure_opts.eps);
    figure_binder.bind("lambda", &figure_opts.lambda);
    figure_binder.bind("nr", &figure_opts.nr);
    figure_binder.bind("ntheta", &figure_opts.ntheta);
    figure_binder.bind("tau", &figure_opts.tau);
    figure_binder.bind("tol", &figure_opts.tol);
    figure_binder.bind("max_iter", &figure_opts.max_iter);
    figure_binder.bind("mtrunc", &figure_opts.m_trunc);
    figure_binder.bind("plain", &figure_opts.plain);
    figure_binder.bind("smooth", &figure_opts.smooth);
    figure_binder.bind("out", &figure_opts.out);

    MetricsOpts metrics_opts;
    ConfigBinder metrics_binder;
    auto* metrics_cmd = app.add_subcommand("metrics", "distances between two stored curves");
    metrics_cmd->add_option("curve_a", metrics_opts.file_a, "first curve file")->required();
    metrics_cmd->add_option("curve_b", metrics_opts.file_b, "second curve file")->required();
    metrics_cmd->add_option("--delta", metrics_opts.delta, "inner star-center ball radius");
    metrics_cmd->add_option("--mbound", metrics_opts.m_bound, "enclosing ball radius");
    metrics_cmd->add_option("--out", metrics_opts.out, "report file path");
    metrics_cmd->add_option("--config", metrics_opts.config, "key=value file overriding flags");
    metrics_cmd->add_option("--save-config", metrics_opts.save_config, "write effective config");
    metrics_binder.bind("delta", &metrics_opts.delta);
    metrics_binder.bind("mbound", &metrics_opts.m_bound);
    metrics_binder.bind("out", &metrics_opts.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cell_cmd) return run_cell(cell_opts, cell_binder);
        if (*radial_cmd) {
            if (*rb0) radial_opts.b0 = radial_b0;
            if (*reps) radial_opts.eps = radial_eps;
            return run_radial(radial_opts, radial_binder);
        }
        if (*solve_cmd) {
            if (*sb0) solve_opts.b0 = solve_b0;
            return run_solve(solve_opts, solve_binder);
        }
        if (*table_cmd) {
            if (*tb0) table_opts.b0 = table_b0;
            return run_table(table_opts, table_binder);
        }
        if (*figure_cmd) {
            if (*fb0) figure_opts.b0 = figure_b0;
            return run_figure(figure_opts, figure_binder);
        }
        if (*metrics_cmd) return run_metrics(metrics_opts, metrics_binder);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const rb::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 1;
    }
    return 2;
}
