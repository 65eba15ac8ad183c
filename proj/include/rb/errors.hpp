#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rb {

/// Bad roughness profile data (negative samples, non-monotone angles, ...).
struct InvalidProfileError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The roughness wavelength must be the reciprocal of a positive integer.
struct InvalidEpsilonError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// eps * max(h) >= 1: the perturbed boundary would reach the origin.
struct DegenerateDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid annular mesh (boundary crossing, mismatched grids, too coarse).
struct MeshError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Geometric failure during a free-boundary iteration (boundary collision).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear or nonlinear solve failed to meet its tolerance.
struct SolverError : std::runtime_error {
    SolverError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

/// Fixed-point iteration exhausted its budget; keeps the residual history.
struct NonConvergenceError : SolverError {
    NonConvergenceError(const std::string& what, std::vector<double> history)
        : SolverError(what, history.empty() ? 0.0 : history.back()),
          residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

/// The scalar equation lambda*rho*ln(rho) = rhs has no root with rho > 1.
struct NoSolutionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed input file (profiles, curves, configs).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rb
