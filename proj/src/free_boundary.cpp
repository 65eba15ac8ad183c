#include "rb/free_boundary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "rb/errors.hpp"
#include "rb/metrics.hpp"
#include "rb/radial.hpp"

namespace rb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mean(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

/// Divide angular mode k of the excess by 1 + k*coth(k*L), the linearized
/// gain of |grad u|/lambda on a circle of log-radius L. Direct real DFT.
std::vector<double> modal_precondition(const std::vector<double>& excess, double log_rho) {
    const int n = static_cast<int>(excess.size());
    const int kmax = n / 2;
    std::vector<double> out(excess.size(), 0.0);
    for (int k = 0; k <= kmax; ++k) {
        double ac = 0.0, as = 0.0;
        for (int i = 0; i < n; ++i) {
            const double phase = kTwoPi * k * i / n;
            ac += excess[static_cast<std::size_t>(i)] * std::cos(phase);
            as += excess[static_cast<std::size_t>(i)] * std::sin(phase);
        }
        const double norm = (k == 0 || 2 * k == n) ? 1.0 : 2.0;
        ac *= norm / n;
        as *= norm / n;
        const double x = k * log_rho;
        const double kcoth = (k == 0) ? 1.0 / log_rho : (x > 20.0 ? k : k / std::tanh(x));
        const double gain = 1.0 + kcoth;
        for (int i = 0; i < n; ++i) {
            const double phase = kTwoPi * k * i / n;
            out[static_cast<std::size_t>(i)] +=
                (ac * std::cos(phase) + as * std::sin(phase)) / gain;
        }
    }
    return out;
}

std::vector<double> smooth3(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(v.size());
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = 0.25 * v[static_cast<std::size_t>((i + n - 1) % n)] +
                                           0.5 * v[static_cast<std::size_t>(i)] +
                                           0.25 * v[static_cast<std::size_t>((i + 1) % n)];
    return out;
}

struct Trial {
    GridField field;
    std::vector<double> gradient;
    double residual;
};

Trial evaluate(const StarCurve& inner, const StarCurve& outer, const BernoulliParams& p) {
    AnnularMesh mesh(inner, outer, p.nr, p.ntheta);
    const std::vector<double> one(static_cast<std::size_t>(p.ntheta), 1.0);
    const std::vector<double> zero(static_cast<std::size_t>(p.ntheta), 0.0);
    GridField field = solve_dirichlet(mesh, one, zero, p.linear_tolerance);
    std::vector<double> grad = boundary_gradient(field, Side::outer);
    double res = 0.0;
    for (double g : grad) res = std::max(res, std::abs(g - p.lambda) / p.lambda);
    return Trial{std::move(field), std::move(grad), res};
}

}  // namespace

double boundary_residual(const GridField& field, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("boundary_residual: lambda must be positive");
    double res = 0.0;
    for (double g : boundary_gradient(field, Side::outer))
        res = std::max(res, std::abs(g - lambda) / lambda);
    return res;
}

double residual(const FreeBoundaryState& state, double lambda) {
    return boundary_residual(state.field, lambda);
}

FreeBoundaryState solve_free_boundary(const BernoulliParams& p) {
    if (!(p.lambda > 0.0)) throw std::invalid_argument("free boundary: lambda must be positive");
    if (!(p.tau > 0.0) || !(p.tau <= 1.0))
        throw std::invalid_argument("free boundary: tau must lie in (0, 1]");
    if (p.eps * p.profile.max_value() >= 1.0)
        throw DegenerateDomainError("free boundary: eps * max(h) >= 1");

    const StarCurve inner = inner_boundary(p.profile, p.eps, p.ntheta);
    const double rho_init = p.b0 ? RadialSolution::corrected(p.lambda, *p.b0, p.eps).rho
                                 : RadialSolution::unperturbed(p.lambda).rho;
    if (!(rho_init > inner.max_radius()))
        throw GeometryError("free boundary: initial circle lies inside the rough boundary");

    StarCurve outer = StarCurve::circle(p.ntheta, rho_init);
    Trial current = evaluate(inner, outer, p);
    std::vector<double> history{current.residual};
    double tau = p.tau;
    int iterations = 0;
    int collisions = 0;

    while (current.residual > p.tolerance) {
        if (iterations >= p.max_iter)
            throw NonConvergenceError("free boundary: iteration budget exhausted", history);
        ++iterations;

        std::vector<double> excess(static_cast<std::size_t>(p.ntheta));
        for (int i = 0; i < p.ntheta; ++i)
            excess[static_cast<std::size_t>(i)] =
                current.gradient[static_cast<std::size_t>(i)] / p.lambda - 1.0;
        if (p.smooth_gradient) excess = smooth3(excess);
        if (p.scheme == UpdateScheme::modal) {
            const double rho_mean = mean(outer.radii());
            if (!(rho_mean > 1.0 + 1e-9))
                throw GeometryError("free boundary: outer curve collapsed onto the unit circle");
            excess = modal_precondition(excess, std::log(rho_mean));
        }

        std::vector<double> trial_radii(static_cast<std::size_t>(p.ntheta));
        bool collided = false;
        for (int i = 0; i < p.ntheta; ++i) {
            const double r =
                outer.radius(i) * (1.0 + tau * excess[static_cast<std::size_t>(i)]);
            if (!(r > inner.radius(i))) collided = true;
            trial_radii[static_cast<std::size_t>(i)] = r;
        }
        if (collided) {
            if (++collisions > 60)
                throw GeometryError("free boundary: trial boundary keeps hitting the inner one");
            tau *= 0.5;
            continue;
        }

        StarCurve trial_curve{std::move(trial_radii)};
        Trial trial = evaluate(inner, trial_curve, p);
        if (trial.residual <= current.residual || tau <= 1e-6) {
            outer = std::move(trial_curve);
            current = std::move(trial);
            history.push_back(current.residual);
        } else {
            tau *= 0.5;  // reject the step, shrink the relaxation
        }
    }

    return FreeBoundaryState{std::move(outer), std::move(current.field), current.residual,
                             iterations, std::move(history), tau, p.smooth_gradient};
}

namespace {

CurveMetricSet metrics_against_circle(const StarCurve& curve, double radius, double eps) {
    const StarCurve circle = StarCurve::circle(curve.size(), radius);
    CurveMetricSet m{};
    m.dh = metric_hausdorff(curve, circle);
    m.d1 = metric_d1(curve, circle);
    m.d2 = metric_d2(curve, circle);
    m.dh_over_eps = m.dh / eps;
    m.dh_over_eps2 = m.dh / (eps * eps);
    return m;
}

}  // namespace

EffectiveComparison compare_to_effective(const FreeBoundaryState& state,
                                         const BernoulliParams& params, double b0) {
    EffectiveComparison cmp{};
    cmp.eps = params.eps;
    cmp.b0 = b0;
    cmp.rho0 = RadialSolution::unperturbed(params.lambda).rho;
    cmp.rho_eps0 = RadialSolution::corrected(params.lambda, b0, params.eps).rho;
    cmp.corrected = metrics_against_circle(state.outer, cmp.rho_eps0, params.eps);
    cmp.uncorrected = metrics_against_circle(state.outer, cmp.rho0, params.eps);
    return cmp;
}

}  // namespace rb
