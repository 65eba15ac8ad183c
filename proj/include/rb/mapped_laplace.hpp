#pragma once

#include <functional>
#include <vector>

namespace rb {

/// Condition closing the strip at s = 1.
enum class TopCondition { dirichlet, zero_flux };

/** Second-order conservative finite-difference problem
 *
 *   d/ds(alpha v_s + beta v_theta) + d/dtheta(beta v_s + gamma v_theta) = 0
 *
 * on s in [0,1], theta in [0,2*pi) periodic, with Dirichlet data at s = 0
 * and either Dirichlet data or a zero-flux reflection row at s = 1.
 *
 * Coefficients are sampled on the half-index grid: a callable receives
 * (js2, it2) meaning s = js2*ds/2, theta = it2*dtheta/2 with ds = 1/(ns-1),
 * dtheta = 2*pi/ntheta. it2 is already reduced mod 2*ntheta. For the
 * zero-flux row js2 exceeds 2*(ns-1) by one (ghost midpoint); the maps used
 * here extend smoothly past s = 1, so the formulas evaluate as-is. */
struct MappedLaplaceProblem {
    int ns = 0;
    int ntheta = 0;
    std::function<double(int, int)> alpha;
    std::function<double(int, int)> beta;
    std::function<double(int, int)> gamma;
    std::vector<double> bottom;      // Dirichlet at s = 0, size ntheta
    TopCondition top = TopCondition::dirichlet;
    std::vector<double> top_values;  // Dirichlet at s = 1 (ignored for zero_flux)
    double tolerance = 1e-10;        // relative residual bound for the linear solve
};

/** Assembles the 9-point stencil, solves the sparse system by LU
 * factorization and verifies the relative residual against the tolerance.
 * Returns nodal values v[j*ntheta + i], j = 0..ns-1. Throws SolverError
 * (carrying the residual) if the factorization fails or the residual bound
 * is not met. */
std::vector<double> solve_mapped_laplace(const MappedLaplaceProblem& problem);

}  // namespace rb
