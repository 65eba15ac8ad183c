#include "rb/cell.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "rb/errors.hpp"
#include "rb/mapped_laplace.hpp"

namespace rb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 4-point Lagrange interpolation on the uniform S grid of one column.
double interp_cubic(const CellSolution& cell, int column, double s) {
    const int ns = cell.n_s;
    const double ds = 1.0 / (ns - 1);
    const double x = std::clamp(s, 0.0, 1.0) / ds;
    int j0 = static_cast<int>(std::floor(x)) - 1;
    j0 = std::clamp(j0, 0, ns - 4);
    double result = 0.0;
    for (int m = 0; m < 4; ++m) {
        double basis = 1.0;
        for (int l = 0; l < 4; ++l) {
            if (l == m) continue;
            basis *= (x - (j0 + l)) / static_cast<double>(m - l);
        }
        result += basis * cell.at(j0 + m, column);
    }
    return result;
}

}  // namespace

double CellSolution::theta(int i) const { return kTwoPi * i / n_theta; }

double CellSolution::s_of(double r_height, int i) const {
    const double h = profile(theta(i));
    return (r_height + h) / (m_trunc + h);
}

std::vector<double> CellSolution::trace_at_height(double r_height) const {
    std::vector<double> trace(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i)
        trace[static_cast<std::size_t>(i)] = interp_cubic(*this, i, s_of(r_height, i));
    return trace;
}

CellSolution solve_cell_with_data(const RoughnessProfile& profile, double m_trunc, int n_s,
                                  int n_theta, const std::vector<double>& bottom,
                                  double tolerance) {
    if (!(m_trunc > 0.0)) throw std::invalid_argument("solve_cell: m_trunc must be positive");
    if (n_s < 3) throw std::invalid_argument("solve_cell: n_s must be >= 3");
    if (n_theta < 8 || n_theta % 2 != 0)
        throw std::invalid_argument("solve_cell: n_theta must be even and >= 8");
    if (static_cast<int>(bottom.size()) != n_theta)
        throw std::invalid_argument("solve_cell: bottom data size mismatch");

    // Profile and slope on the half-index angular grid.
    const int n2 = 2 * n_theta;
    std::vector<double> h(static_cast<std::size_t>(n2)), dh(static_cast<std::size_t>(n2));
    for (int t = 0; t < n2; ++t) {
        const double theta = kTwoPi * t / n2;
        h[static_cast<std::size_t>(t)] = profile(theta);
        dh[static_cast<std::size_t>(t)] = profile.derivative(theta);
    }

    // Flat Laplacian on the strip S = (R + h)/(m_trunc + h):
    //   alpha = (1 + (1-S)^2 h'^2)/W,  beta = (1-S) h',  gamma = W,
    // with W = m_trunc + h. alpha is even and beta odd in (1-S), so the
    // zero-flux ghost row evaluates the same formulas past S = 1.
    const double ds2 = 0.5 / (n_s - 1);
    MappedLaplaceProblem problem;
    problem.ns = n_s;
    problem.ntheta = n_theta;
    problem.alpha = [&h, &dh, ds2, m_trunc](int js2, int it2) {
        const double oms = 1.0 - js2 * ds2;
        const double hp = dh[static_cast<std::size_t>(it2)];
        return (1.0 + oms * oms * hp * hp) / (m_trunc + h[static_cast<std::size_t>(it2)]);
    };
    problem.beta = [&dh, ds2](int js2, int it2) {
        return (1.0 - js2 * ds2) * dh[static_cast<std::size_t>(it2)];
    };
    problem.gamma = [&h, m_trunc](int, int it2) {
        return m_trunc + h[static_cast<std::size_t>(it2)];
    };
    problem.bottom = bottom;
    problem.top = TopCondition::zero_flux;
    problem.tolerance = tolerance;

    return CellSolution{profile, m_trunc, n_s, n_theta, solve_mapped_laplace(problem)};
}

CellSolution solve_cell(const RoughnessProfile& profile, double m_trunc, int n_s, int n_theta,
                        double tolerance) {
    std::vector<double> bottom(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i)
        bottom[static_cast<std::size_t>(i)] = -profile(kTwoPi * i / n_theta);
    return solve_cell_with_data(profile, m_trunc, n_s, n_theta, bottom, tolerance);
}

double trace_mean(const CellSolution& cell) {
    const auto trace = cell.trace_at_height(0.0);
    double sum = 0.0;
    for (double v : trace) sum += v;
    return sum / static_cast<double>(trace.size());
}

WallLawConstant compute_b0(double lambda, double rho0, double mean_trace) {
    if (!(lambda > 0.0)) throw std::invalid_argument("compute_b0: lambda must be positive");
    if (!(rho0 > 1.0)) throw std::invalid_argument("compute_b0: rho0 must exceed 1");
    return WallLawConstant{mean_trace, lambda * rho0 * mean_trace, lambda, rho0};
}

std::vector<std::complex<double>> fourier_trace(const CellSolution& cell, double r_height) {
    if (!(r_height >= 0.0) || !(r_height <= cell.m_trunc - 1.0))
        throw std::out_of_range("fourier_trace: height must lie in [0, m_trunc - 1]");
    const auto trace = cell.trace_at_height(r_height);
    const int n = cell.n_theta;
    std::vector<std::complex<double>> coef(static_cast<std::size_t>(n / 2 + 1));
    for (int k = 0; k <= n / 2; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            const double phase = -kTwoPi * k * i / n;
            acc += trace[static_cast<std::size_t>(i)] *
                   std::complex<double>(std::cos(phase), std::sin(phase));
        }
        coef[static_cast<std::size_t>(k)] = acc / static_cast<double>(n);
    }
    return coef;
}

DecayReport decay_check(const CellSolution& cell, double mu) {
    if (!(mu > 0.0) || !(mu < 1.0))
        throw std::invalid_argument("decay_check: mu must lie in (0, 1)");
    DecayReport report;
    report.mu = mu;
    report.c_estimate = 0.0;
    report.monotone = true;
    const double mean = trace_mean(cell);
    const double top = cell.m_trunc - 1.0;
    const int samples = std::max(2, static_cast<int>(std::round(top / 0.5)) + 1);
    double prev = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double r_height = top * k / (samples - 1);
        const auto trace = cell.trace_at_height(r_height);
        double dev = 0.0;
        for (double v : trace) dev = std::max(dev, std::abs(v - mean));
        report.heights.push_back(r_height);
        report.deviations.push_back(dev);
        report.c_estimate = std::max(report.c_estimate, std::exp(mu * r_height) * dev);
        if (k > 0 && dev > prev * (1.0 + 1e-12)) report.monotone = false;
        prev = dev;
    }
    return report;
}

void write_cell_solution(const std::string& path, const CellSolution& cell,
                         const std::vector<std::string>& header_lines) {
    std::ofstream fout(path);
    if (!fout) throw ParseError("cannot open for writing: " + path);
    for (const auto& h : header_lines) fout << "# " << h << "\n";
    fout << cell.n_s << " " << cell.n_theta << "\n";
    char buf[32];
    for (int j = 0; j < cell.n_s; ++j) {
        for (int i = 0; i < cell.n_theta; ++i) {
            std::snprintf(buf, sizeof(buf), "%.12g", cell.at(j, i));
            fout << buf << (i + 1 == cell.n_theta ? "\n" : " ");
        }
    }
}

}  // namespace rb
