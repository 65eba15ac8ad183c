#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rb/roughness.hpp"

namespace rb {

/** Discrete solution of the truncated periodic cell problem
 *
 *   Laplacian(u) = 0        on -h(Theta) < R < m_trunc, Theta periodic,
 *   u(-h(Theta), Theta) = -h(Theta),
 *   dR u(m_trunc, Theta) = 0,
 *
 * computed on the mapped strip S = (R + h(Theta))/(m_trunc + h(Theta))
 * with n_s nodes in S and n_theta periodic nodes in Theta. */
struct CellSolution {
    RoughnessProfile profile;
    double m_trunc;
    int n_s;
    int n_theta;
    std::vector<double> values;  // v[j*n_theta + i]

    double at(int j, int i) const {
        return values[static_cast<std::size_t>(j) * n_theta + i];
    }
    double theta(int i) const;
    /// Map height R to the strip coordinate of column i.
    double s_of(double r_height, int i) const;
    /** Values of u(R, Theta_i) for all columns, by cubic interpolation along
     * S (constant-R lines do not coincide with grid lines). */
    std::vector<double> trace_at_height(double r_height) const;
};

/// Solves the truncated cell problem for the given profile.
/// Requires m_trunc > 0, n_s >= 3 and n_theta >= 8 even (an even angular
/// count pins a node at Theta = pi, where the h2 profile has its kink).
CellSolution solve_cell(const RoughnessProfile& profile, double m_trunc, int n_s, int n_theta,
                        double tolerance = 1e-10);

/// Same discretization with arbitrary Dirichlet data on the rough boundary
/// (used by convergence tests against manufactured harmonic solutions).
CellSolution solve_cell_with_data(const RoughnessProfile& profile, double m_trunc, int n_s,
                                  int n_theta, const std::vector<double>& bottom,
                                  double tolerance = 1e-10);

/// Mean of the boundary-layer trace at R = 0 w.r.t. the normalized measure
/// dTheta/(2*pi) (periodic trapezoidal rule = mean of the samples).
double trace_mean(const CellSolution& cell);

/** Wall-law constant b0 = lambda * rho0 * mean_trace used as the Dirichlet
 * correction -eps*b0 of the effective problem. */
struct WallLawConstant {
    double mean_trace;
    double b0;
    double lambda;
    double rho0;
};

WallLawConstant compute_b0(double lambda, double rho0, double mean_trace);

/** One-sided Fourier coefficients c_k, k = 0..n_theta/2, of the trace
 * Theta -> u(R, Theta); c_k = (1/n) sum u_i exp(-i k Theta_i). The trace of
 * a real field satisfies c_{-k} = conj(c_k). Requires
 * 0 <= R <= m_trunc - 1 (away from the Neumann cap). */
std::vector<std::complex<double>> fourier_trace(const CellSolution& cell, double r_height);

/** Empirical check of the exponential decay of the angular oscillation:
 * deviation(R) = sup_Theta |u(R,Theta) - mean| should obey
 * deviation(R) <= C exp(-mu R). Samples R over [0, m_trunc - 1] and returns
 * the smallest admissible C together with a monotonicity flag. */
struct DecayReport {
    double mu;
    double c_estimate;
    bool monotone;
    std::vector<double> heights;
    std::vector<double> deviations;
};

DecayReport decay_check(const CellSolution& cell, double mu);

/// Text dump in the grid-field matrix format ("n_s n_theta" header).
void write_cell_solution(const std::string& path, const CellSolution& cell,
                         const std::vector<std::string>& header_lines = {});

}  // namespace rb
