#pragma once

#include <optional>
#include <vector>

#include "rb/elliptic.hpp"
#include "rb/roughness.hpp"
#include "rb/star_curve.hpp"

namespace rb {

/// Damping of the trial-boundary update.
enum class UpdateScheme {
    /// rho <- rho * (1 + tau * P[|grad u|/lambda - 1]) where P divides each
    /// angular Fourier mode k by 1 + k*coth(k*ln(rho_mean)), the exact gain
    /// of the radial linearization. Converges at a k-independent rate.
    modal,
    /// rho <- rho * (1 + tau * (|grad u|/lambda - 1)). Only stable for
    /// tau < 2/(1 + k_max), so fine angular grids need tiny steps.
    plain,
};

struct BernoulliParams {
    double lambda = 1.0;
    RoughnessProfile profile = RoughnessProfile::zero();
    double eps = 1.0;  // reciprocal of a positive integer
    int nr = 64;
    int ntheta = 256;
    double tau = 0.5;
    double tolerance = 1e-8;  // relative sup-norm of |grad u|/lambda - 1
    int max_iter = 200;
    std::optional<double> b0;  // wall-law constant; picks the initial circle
    UpdateScheme scheme = UpdateScheme::modal;
    bool smooth_gradient = false;  // optional 3-point angular filter on the update
    double linear_tolerance = 1e-10;
};

struct FreeBoundaryState {
    StarCurve outer;
    GridField field;
    double residual;
    int iterations;
    std::vector<double> residual_history;  // accepted iterates only
    double tau_final;
    bool smoothed;
};

/** Solves the exterior Bernoulli problem on the rough domain by damped
 * fixed-point iteration on the outer star curve: each step solves the
 * Dirichlet problem (u = 1 inner, u = 0 outer) and moves the trial boundary
 * by the relative excess of |grad u| over lambda. Starts from the circle of
 * radius rho_eps^0 (when b0 is given) or rho_0. Steps that increase the
 * residual are rejected and tau is halved. Throws NonConvergenceError when
 * the iteration budget runs out and GeometryError if the trial boundary
 * keeps colliding with the inner one. */
FreeBoundaryState solve_free_boundary(const BernoulliParams& params);

/// sup over the outer boundary of ||grad u| - lambda| / lambda.
double boundary_residual(const GridField& field, double lambda);
double residual(const FreeBoundaryState& state, double lambda);

struct CurveMetricSet {
    double dh;
    double d1;
    double d2;
    double dh_over_eps;
    double dh_over_eps2;
};

/** Distances of the computed free boundary to the two rotationally symmetric
 * references: the corrected circle of radius rho_eps^0 (Dirichlet offset
 * -eps*b0) and the uncorrected circle of radius rho_0. */
struct EffectiveComparison {
    double eps;
    double b0;
    double rho0;
    double rho_eps0;
    CurveMetricSet corrected;
    CurveMetricSet uncorrected;
};

EffectiveComparison compare_to_effective(const FreeBoundaryState& state,
                                         const BernoulliParams& params, double b0);

}  // namespace rb
