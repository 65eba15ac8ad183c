#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rb/elliptic.hpp"
#include "rb/errors.hpp"
#include "rb/free_boundary.hpp"
#include "rb/radial.hpp"

using namespace rb;

namespace {

BernoulliParams flat_params(double lambda, int nr, int ntheta) {
    BernoulliParams p;
    p.lambda = lambda;
    p.profile = RoughnessProfile::zero();
    p.eps = 1.0;
    p.nr = nr;
    p.ntheta = ntheta;
    p.tolerance = 1e-6;
    return p;
}

}  // namespace

TEST_CASE("flat problem converges to the circle of radius rho0") {
    const double lambda = 2.0 * std::exp(-0.5);
    const auto state = solve_free_boundary(flat_params(lambda, 48, 128));
    const double rho0 = std::exp(0.5);
    CHECK(state.residual <= 1e-6);
    for (int i = 0; i < state.outer.size(); ++i)
        CHECK(std::abs(state.outer.radius(i) - rho0) / rho0 <= 1e-3);
    // accepted-step residuals end below where they started
    REQUIRE(!state.residual_history.empty());
    CHECK(state.residual_history.back() < state.residual_history.front());
}

TEST_CASE("thin annulus case converges to the circle of radius e^{1/8}") {
    const double lambda = 8.0 * std::exp(-0.125);
    const auto state = solve_free_boundary(flat_params(lambda, 48, 128));
    const double rho0 = std::exp(0.125);
    CHECK(state.residual <= 1e-6);
    for (int i = 0; i < state.outer.size(); ++i)
        CHECK(std::abs(state.outer.radius(i) - rho0) / rho0 <= 1e-3);
}

TEST_CASE("plain update scheme still converges on a modest grid") {
    auto p = flat_params(2.0 * std::exp(-0.5), 32, 64);
    p.scheme = UpdateScheme::plain;
    p.tau = 0.05;
    p.max_iter = 2000;
    const auto state = solve_free_boundary(p);
    CHECK(state.residual <= 1e-6);
    for (int i = 0; i < state.outer.size(); ++i)
        CHECK(std::abs(state.outer.radius(i) - std::exp(0.5)) <= 2e-3);
}

TEST_CASE("circle of radius rho0 is a discrete near-fixed point") {
    const double lambda = 2.0 * std::exp(-0.5);
    const double rho0 = std::exp(0.5);
    const int nt = 128;
    AnnularMesh mesh(StarCurve::circle(nt, 1.0), StarCurve::circle(nt, rho0), 48, nt);
    const std::vector<double> one(static_cast<std::size_t>(nt), 1.0);
    const std::vector<double> zero(static_cast<std::size_t>(nt), 0.0);
    const GridField u = solve_dirichlet(mesh, one, zero);
    // residual of the exact continuous solution = discretization level
    CHECK(boundary_residual(u, lambda) <= 5e-4);
    // the multiplicative update therefore moves the curve by O(mesh^2)
    for (double g : boundary_gradient(u, Side::outer))
        CHECK(std::abs(rho0 * 0.5 * (g / lambda - 1.0)) <= 5e-4);
}

TEST_CASE("outward perturbation of the converged circle raises the residual") {
    const double lambda = 2.0 * std::exp(-0.5);
    const auto state = solve_free_boundary(flat_params(lambda, 48, 128));
    std::vector<double> grown(static_cast<std::size_t>(state.outer.size()));
    for (int i = 0; i < state.outer.size(); ++i)
        grown[static_cast<std::size_t>(i)] = 1.01 * state.outer.radius(i);
    AnnularMesh mesh(StarCurve::circle(state.outer.size(), 1.0), StarCurve(grown), 48,
                     state.outer.size());
    const std::vector<double> one(static_cast<std::size_t>(state.outer.size()), 1.0);
    const std::vector<double> zero(one.size(), 0.0);
    const GridField u = solve_dirichlet(mesh, one, zero);
    CHECK(boundary_residual(u, lambda) > state.residual);
    // growing the domain weakens the field: gradient drops below lambda
    for (double g : boundary_gradient(u, Side::outer)) CHECK(g < lambda);
}

TEST_CASE("iteration budget exhaustion reports the residual history") {
    auto p = flat_params(2.0 * std::exp(-0.5), 24, 64);
    p.tolerance = 1e-14;  // unreachable on this mesh
    p.max_iter = 3;
    CHECK_THROWS_AS(solve_free_boundary(p), NonConvergenceError);
    try {
        solve_free_boundary(p);
    } catch (const NonConvergenceError& e) {
        CHECK(!e.residual_history.empty());
        CHECK(e.residual == e.residual_history.back());
    }
}

TEST_CASE("rough h1 case converges and stays star-shaped") {
    BernoulliParams p;
    p.lambda = 2.0 * std::exp(-0.5);
    p.profile = RoughnessProfile::h1();
    p.eps = 0.1;
    p.nr = 32;
    p.ntheta = 160;
    p.tolerance = 1e-5;
    p.b0 = -1.17476;
    const auto state = solve_free_boundary(p);
    CHECK(state.residual <= 1e-5);
    for (int i = 0; i < state.outer.size(); ++i) {
        CHECK(state.outer.radius(i) > 1.0);
        CHECK(state.outer.radius(i) < 4.0);
    }
    const auto cmp = compare_to_effective(state, p, *p.b0);
    CHECK(cmp.corrected.dh < cmp.uncorrected.dh);
    CHECK(cmp.corrected.dh_over_eps2 < 3.0);

    const double recomputed = residual(state, p.lambda);
    CHECK(recomputed == doctest::Approx(state.residual).epsilon(1e-12));
}

TEST_CASE("flat comparison distances vanish at mesh accuracy") {
    const double lambda = 2.0 * std::exp(-0.5);
    auto p = flat_params(lambda, 48, 128);
    p.b0 = 0.0;  // zero roughness has a zero wall-law constant
    const auto state = solve_free_boundary(p);
    const auto cmp = compare_to_effective(state, p, 0.0);
    CHECK(cmp.rho_eps0 == doctest::Approx(cmp.rho0));
    CHECK(cmp.corrected.dh <= 2e-3);
    CHECK(cmp.corrected.d1 <= 2e-3);
    CHECK(cmp.corrected.d2 <= 2e-3);
}

TEST_CASE("smoothing flag is carried into the state") {
    auto p = flat_params(2.0 * std::exp(-0.5), 32, 64);
    p.smooth_gradient = true;
    const auto state = solve_free_boundary(p);
    CHECK(state.smoothed);
    CHECK(state.residual <= p.tolerance);
}

TEST_CASE("degenerate roughness is rejected up front") {
    BernoulliParams p;
    p.lambda = 2.0 * std::exp(-0.5);
    p.profile = RoughnessProfile::tabulated({{0.0, 0.0}, {std::numbers::pi, 11.0}});
    p.eps = 0.1;
    CHECK_THROWS_AS(solve_free_boundary(p), DegenerateDomainError);
}
