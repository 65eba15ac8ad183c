#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rb/errors.hpp"
#include "rb/radial.hpp"

using namespace rb;

TEST_CASE("solve_radius reproduces the closed-form radii") {
    CHECK(solve_radius(2.0 * std::exp(-0.5), 1.0) ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(solve_radius(8.0 * std::exp(-0.125), 1.0) ==
          doctest::Approx(std::exp(0.125)).epsilon(1e-12));
}

TEST_CASE("solve_radius agrees with an independent bisection") {
    const double lambda = 2.0 * std::exp(-0.5);
    const double rhs = 1.0 - 1.17476 * 0.1;
    CHECK(solve_radius(lambda, rhs) ==
          doctest::Approx(oracle::radius_bisect(lambda, rhs)).epsilon(1e-10));
}

TEST_CASE("root-finder idempotence on random parameters") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> lam(0.05, 10.0);
    std::uniform_real_distribution<double> rho(1.0 + 1e-6, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double lambda = lam(rng);
        const double r = rho(rng);
        const double rhs = lambda * r * std::log(r);
        if (!(rhs > 0.0)) continue;
        CHECK(std::abs(solve_radius(lambda, rhs) - r) <= 1e-10 * std::max(1.0, r));
    }
}

TEST_CASE("invalid right-hand sides are rejected") {
    CHECK_THROWS_AS(solve_radius(1.0, 0.0), NoSolutionError);
    CHECK_THROWS_AS(solve_radius(1.0, -0.5), NoSolutionError);
    CHECK_THROWS_AS(solve_radius(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("radial solution satisfies its boundary data and gradient") {
    const double lambda = 2.0 * std::exp(-0.5);
    const double b0 = -1.17476;
    const double eps = 0.1;
    const auto sol = RadialSolution::corrected(lambda, b0, eps);

    CHECK(sol.eval_u(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.eval_u(sol.rho) == doctest::Approx(-b0 * eps).epsilon(1e-12));
    // |u'(rho)| = lambda because rhs = lambda*rho*ln(rho)
    CHECK(std::abs(sol.eval_du(sol.rho)) == doctest::Approx(lambda).epsilon(1e-12));
    CHECK(sol.lambda * sol.rho * std::log(sol.rho) == doctest::Approx(sol.rhs).epsilon(1e-12));

    CHECK_THROWS_AS(sol.eval_u(0.5), std::out_of_range);
    CHECK_THROWS_AS(sol.eval_u(sol.rho + 0.01), std::out_of_range);
}

TEST_CASE("radial potential decreases monotonically in r") {
    const auto sol = RadialSolution::unperturbed(2.0 * std::exp(-0.5));
    double prev = sol.eval_u(1.0);
    for (int i = 1; i <= 50; ++i) {
        const double r = 1.0 + (sol.rho - 1.0) * i / 50.0;
        const double u = sol.eval_u(r);
        CHECK(u < prev);
        prev = u;
    }
}
