#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rb/cell.hpp"
#include "rb/errors.hpp"

using namespace rb;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mms_cell_error(const RoughnessProfile& profile, double m_trunc, int ns, int nt, int k) {
    // cosh(k(M-R)) cos(k Theta) / cosh(kM) is harmonic and satisfies the
    // zero-flux cap exactly, so only the rough Dirichlet row is manufactured.
    auto exact = [&](double r_height, double theta) {
        return std::cosh(k * (m_trunc - r_height)) * std::cos(k * theta) / std::cosh(k * m_trunc);
    };
    std::vector<double> bottom(static_cast<std::size_t>(nt));
    for (int i = 0; i < nt; ++i) {
        const double theta = kTwoPi * i / nt;
        bottom[static_cast<std::size_t>(i)] = exact(-profile(theta), theta);
    }
    const auto cell = solve_cell_with_data(profile, m_trunc, ns, nt, bottom);
    double err = 0.0;
    for (int j = 0; j < ns; ++j)
        for (int i = 0; i < nt; ++i) {
            const double theta = kTwoPi * i / nt;
            const double h = profile(theta);
            const double r_height = (static_cast<double>(j) / (ns - 1)) * (m_trunc + h) - h;
            err = std::max(err, std::abs(cell.at(j, i) - exact(r_height, theta)));
        }
    return err;
}

}  // namespace

TEST_CASE("flat profile gives the zero solution") {
    const auto cell = solve_cell(RoughnessProfile::zero(), 6.0, 33, 32);
    for (double v : cell.values) CHECK(std::abs(v) <= 1e-13);
    CHECK(trace_mean(cell) == doctest::Approx(0.0));
    for (const auto& c : fourier_trace(cell, 0.0)) CHECK(std::abs(c) <= 1e-13);
    const auto decay = decay_check(cell, 0.9);
    CHECK(decay.c_estimate == doctest::Approx(0.0));
}

TEST_CASE("constant profile gives the constant solution") {
    const auto flat = RoughnessProfile::tabulated({{0.0, 0.8}});
    const auto cell = solve_cell(flat, 6.0, 33, 32);
    for (double v : cell.values) CHECK(v == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(trace_mean(cell) == doctest::Approx(-0.8).epsilon(1e-12));
    const auto decay = decay_check(cell, 0.5);
    CHECK(decay.c_estimate <= 1e-10);
}

TEST_CASE("manufactured cap-compatible harmonic converges at second order") {
    const auto h1 = RoughnessProfile::h1();
    const double e1 = mms_cell_error(h1, 2.0, 17, 24, 1);
    const double e2 = mms_cell_error(h1, 2.0, 33, 48, 1);
    const double e3 = mms_cell_error(h1, 2.0, 65, 96, 1);
    CHECK(e1 / e2 > 3.2);
    CHECK(e1 / e2 < 4.8);
    CHECK(e2 / e3 > 3.4);
    CHECK(e2 / e3 < 4.6);
}

TEST_CASE("trace means land on the reference wall-law integrals") {
    // Reference values for the two built-in shapes: -0.58738 and -0.87754.
    const auto c1 = solve_cell(RoughnessProfile::h1(), 6.0, 193, 192);
    CHECK(trace_mean(c1) == doctest::Approx(-0.58738).epsilon(9e-3));
    const auto c2 = solve_cell(RoughnessProfile::h2(), 6.0, 193, 192);
    CHECK(trace_mean(c2) == doctest::Approx(-0.87754).epsilon(9e-3));
}

TEST_CASE("compute_b0 multiplies the pieces") {
    const double lambda = 2.0 * std::exp(-0.5);
    const double rho0 = std::exp(0.5);
    const auto w1 = compute_b0(lambda, rho0, -0.58738);
    CHECK(w1.b0 == doctest::Approx(-1.17476).epsilon(1e-9));
    const auto w2 = compute_b0(lambda, rho0, -0.87754);
    CHECK(w2.b0 == doctest::Approx(-1.75508).epsilon(1e-9));
    CHECK(compute_b0(3.0, 2.0, 0.0).b0 == 0.0);
    CHECK_THROWS_AS(compute_b0(-1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_b0(1.0, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("fourier trace: mean mode, decay ratio and range checks") {
    const auto cell = solve_cell(RoughnessProfile::h1(), 6.0, 129, 128);
    const auto at0 = fourier_trace(cell, 0.0);
    CHECK(at0[0].real() == doctest::Approx(trace_mean(cell)).epsilon(1e-12));
    CHECK(at0[0].imag() == doctest::Approx(0.0));

    const auto at1 = fourier_trace(cell, 1.0);
    const auto at2 = fourier_trace(cell, 2.0);
    const double ratio = std::abs(at2[1]) / std::abs(at1[1]);
    CHECK(ratio == doctest::Approx(std::exp(-1.0)).epsilon(0.05));

    CHECK_THROWS_AS(fourier_trace(cell, -0.5), std::out_of_range);
    CHECK_THROWS_AS(fourier_trace(cell, 5.5), std::out_of_range);
}

TEST_CASE("mean mode is flat in R at discretization accuracy") {
    const auto cell = solve_cell(RoughnessProfile::h1(), 6.0, 129, 128);
    const double c0_at_0 = fourier_trace(cell, 0.0)[0].real();
    for (double r_height : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
        const double c0 = fourier_trace(cell, r_height)[0].real();
        CHECK(std::abs(c0 - c0_at_0) <= 2e-3);
    }
}

TEST_CASE("nonzero modes decay like exp(-|k| R)") {
    const auto cell = solve_cell(RoughnessProfile::h1(), 6.0, 257, 256);
    for (int k = 1; k <= 4; ++k) {
        // least-squares slope of ln|c_k| over R = 1..4
        std::vector<double> xs, ys;
        for (double r_height = 1.0; r_height <= 4.0 + 1e-9; r_height += 0.5) {
            const auto coef = fourier_trace(cell, r_height);
            xs.push_back(r_height);
            ys.push_back(std::log(std::abs(coef[static_cast<std::size_t>(k)])));
        }
        const auto n = static_cast<double>(xs.size());
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t m = 0; m < xs.size(); ++m) {
            sx += xs[m];
            sy += ys[m];
            sxx += xs[m] * xs[m];
            sxy += xs[m] * ys[m];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(slope == doctest::Approx(-k).epsilon(0.05));
    }
}

TEST_CASE("decay report for h1 shows the exponential envelope") {
    const auto cell = solve_cell(RoughnessProfile::h1(), 6.0, 129, 128);
    const auto decay = decay_check(cell, 0.9);
    CHECK(decay.c_estimate > 0.0);
    CHECK(std::isfinite(decay.c_estimate));
    REQUIRE(decay.heights.front() == doctest::Approx(0.0));
    REQUIRE(decay.heights.back() == doctest::Approx(5.0));
    CHECK(decay.deviations.back() < 0.02 * decay.deviations.front());
    CHECK(decay.monotone);
    CHECK_THROWS_AS(decay_check(cell, 1.5), std::invalid_argument);
}

TEST_CASE("truncation height barely moves the trace mean") {
    // matched physical resolution: n_s scales with the strip height
    const auto c6 = solve_cell(RoughnessProfile::h1(), 6.0, 145, 144);
    const auto c8 = solve_cell(RoughnessProfile::h1(), 8.0, 193, 144);
    CHECK(std::abs(trace_mean(c6) - trace_mean(c8)) <= 5e-4);
}

TEST_CASE("solver rejects bad discretization parameters") {
    const auto h1 = RoughnessProfile::h1();
    CHECK_THROWS_AS(solve_cell(h1, -1.0, 33, 32), std::invalid_argument);
    CHECK_THROWS_AS(solve_cell(h1, 6.0, 2, 32), std::invalid_argument);
    CHECK_THROWS_AS(solve_cell(h1, 6.0, 33, 31), std::invalid_argument);
}
