#pragma once

namespace rb {

/** Rotationally symmetric exterior Bernoulli solution on the annulus
 * 1 <= r <= rho. The outer radius solves lambda * rho * ln(rho) = rhs and
 * the potential is
 *     u(r) = rhs * (ln(rho) - ln(r)) / ln(rho) + offset,
 * so u(1) = rhs + offset, u(rho) = offset and |u'(rho)| = lambda.
 * The uncorrected problem has rhs = 1, offset = 0; the wall-law corrected
 * one has rhs = 1 + b0*eps, offset = -b0*eps. */
struct RadialSolution {
    RadialSolution(double lambda, double rhs, double offset);

    /// rhs = 1, offset = 0.
    static RadialSolution unperturbed(double lambda);
    /// rhs = 1 + b0*eps, offset = -b0*eps.
    static RadialSolution corrected(double lambda, double b0, double eps);

    /// u(r) for 1 <= r <= rho; throws std::out_of_range otherwise.
    double eval_u(double r) const;
    /// du/dr at r (negative; |u'(rho)| = lambda by construction).
    double eval_du(double r) const;

    double lambda;
    double rhs;
    double rho;
    double offset;
};

/** Unique rho > 1 with lambda * rho * ln(rho) = rhs, to absolute tolerance
 * 1e-12 (the left side is strictly increasing for rho > 1). Safeguarded
 * Newton iteration with a bisection fallback on [1, exp(rhs/lambda) + 1].
 * Throws NoSolutionError for rhs <= 0 and SolverError on non-convergence. */
double solve_radius(double lambda, double rhs);

}  // namespace rb
