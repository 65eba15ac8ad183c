#include "rb/radial.hpp"

#include <cmath>
#include <stdexcept>

#include "rb/errors.hpp"

namespace rb {

double solve_radius(double lambda, double rhs) {
    if (!(lambda > 0.0)) throw std::invalid_argument("solve_radius: lambda must be positive");
    if (!(rhs > 0.0))
        throw NoSolutionError("solve_radius: no rho > 1 exists for rhs <= 0");

    // Bracket: g(rho) = lambda*rho*ln(rho) - rhs is negative at 1+ and, since
    // rho*ln(rho) >= ln(rho) for rho >= 1, nonnegative at exp(rhs/lambda).
    double lo = 1.0;
    double hi = std::exp(rhs / lambda) + 1.0;
    auto g = [&](double rho) { return lambda * rho * std::log(rho) - rhs; };
    auto dg = [&](double rho) { return lambda * (std::log(rho) + 1.0); };

    double x = 0.5 * (lo + hi);
    constexpr double kTol = 1e-12;
    for (int it = 0; it < 200; ++it) {
        const double gx = g(x);
        if (gx > 0.0)
            hi = x;
        else
            lo = x;
        double step = gx / dg(x);
        double next = x - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        if (std::abs(next - x) <= kTol && std::abs(g(next)) <= kTol * (lambda + rhs)) {
            return next;
        }
        x = next;
    }
    throw SolverError("solve_radius: Newton/bisection did not converge", std::abs(g(x)));
}

RadialSolution::RadialSolution(double lambda_, double rhs_, double offset_)
    : lambda(lambda_), rhs(rhs_), rho(solve_radius(lambda_, rhs_)), offset(offset_) {}

RadialSolution RadialSolution::unperturbed(double lambda_) {
    return RadialSolution(lambda_, 1.0, 0.0);
}

RadialSolution RadialSolution::corrected(double lambda_, double b0, double eps) {
    return RadialSolution(lambda_, 1.0 + b0 * eps, -b0 * eps);
}

double RadialSolution::eval_u(double r) const {
    if (!(r >= 1.0) || !(r <= rho))
        throw std::out_of_range("RadialSolution::eval_u: r outside [1, rho]");
    return rhs * (std::log(rho) - std::log(r)) / std::log(rho) + offset;
}

double RadialSolution::eval_du(double r) const {
    if (!(r >= 1.0) || !(r <= rho))
        throw std::out_of_range("RadialSolution::eval_du: r outside [1, rho]");
    return -rhs / (r * std::log(rho));
}

}  // namespace rb
