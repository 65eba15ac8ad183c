#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// closed-form metric implementations: distances are evaluated by dense
// sampling and scanning so the production formulas can be checked against
// something independent.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "rb/star_curve.hpp"

namespace oracle {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Pt {
    double x, y;
};

/// Dense point sampling of the polyline through the curve's nodes.
inline std::vector<Pt> dense_polyline_points(const rb::StarCurve& c, int per_segment) {
    std::vector<Pt> pts;
    const int n = c.size();
    pts.reserve(static_cast<std::size_t>(n) * per_segment);
    for (int i = 0; i < n; ++i) {
        const double t0 = c.theta(i);
        const double r0 = c.radius(i);
        const double t1 = kTwoPi * (i + 1) / n;
        const double r1 = c.radius((i + 1) % n);
        const double x0 = r0 * std::cos(t0), y0 = r0 * std::sin(t0);
        const double x1 = r1 * std::cos(t1), y1 = r1 * std::sin(t1);
        for (int m = 0; m < per_segment; ++m) {
            const double w = static_cast<double>(m) / per_segment;
            pts.push_back({(1.0 - w) * x0 + w * x1, (1.0 - w) * y0 + w * y1});
        }
    }
    return pts;
}

/// Brute-force Hausdorff distance: double loop over dense point samples.
inline double hausdorff_bruteforce(const rb::StarCurve& a, const rb::StarCurve& b,
                                   int per_segment = 10) {
    const auto pa = dense_polyline_points(a, per_segment);
    const auto pb = dense_polyline_points(b, per_segment);
    auto directed = [](const std::vector<Pt>& from, const std::vector<Pt>& to) {
        double worst = 0.0;
        for (const Pt& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Pt& q : to) {
                const double dx = p.x - q.x, dy = p.y - q.y;
                best = std::min(best, dx * dx + dy * dy);
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(pa, pb), directed(pb, pa));
}

/// Brute-force sup-norm distance of the polar parametrizations on a grid
/// `factor` times finer than the curves' own.
inline double d1_bruteforce(const rb::StarCurve& a, const rb::StarCurve& b, int factor = 10) {
    const int n = factor * std::max(a.size(), b.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = kTwoPi * i / n;
        worst = std::max(worst, std::abs(a.interp(t) - b.interp(t)));
    }
    return worst;
}

/// Proper segment-segment intersection test (touching counts).
inline bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    auto orient = [](const Pt& p, const Pt& q, const Pt& r) {
        const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        if (v > 1e-15) return 1;
        if (v < -1e-15) return -1;
        return 0;
    };
    auto on_segment = [](const Pt& p, const Pt& q, const Pt& r) {
        return std::min(p.x, q.x) - 1e-15 <= r.x && r.x <= std::max(p.x, q.x) + 1e-15 &&
               std::min(p.y, q.y) - 1e-15 <= r.y && r.y <= std::max(p.y, q.y) + 1e-15;
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

inline bool scaled_curves_intersect(const rb::StarCurve& a, const rb::StarCurve& b,
                                    double lambda) {
    const int n = a.size();
    std::vector<Pt> pa(static_cast<std::size_t>(n)), pb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto qa = a.point(i);
        const auto qb = b.point(i);
        pa[static_cast<std::size_t>(i)] = {lambda * qa.x, lambda * qa.y};
        pb[static_cast<std::size_t>(i)] = {qb.x, qb.y};
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (segments_intersect(pa[static_cast<std::size_t>(i)],
                                   pa[static_cast<std::size_t>((i + 1) % n)],
                                   pb[static_cast<std::size_t>(j)],
                                   pb[static_cast<std::size_t>((j + 1) % n)]))
                return true;
    return false;
}

/** Scaling-metric oracle: scan lambda over a bracket of the radius ratios
 * and return sup |ln lambda| over scalings whose scaled curve intersects the
 * other curve. `steps` controls the scan resolution. */
inline double d2_scan(const rb::StarCurve& a, const rb::StarCurve& b, int steps = 2000) {
    const rb::StarCurve ca = a.resampled(std::max(a.size(), b.size()));
    const rb::StarCurve cb = b.resampled(ca.size());
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < ca.size(); ++i) {
        const double ratio = cb.radius(i) / ca.radius(i);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    lo *= 0.999;
    hi *= 1.001;
    double best = 0.0;
    for (int s = 0; s <= steps; ++s) {
        const double lambda = lo + (hi - lo) * s / steps;
        if (scaled_curves_intersect(ca, cb, lambda))
            best = std::max(best, std::abs(std::log(lambda)));
    }
    return best;
}

/** Random curve in the star-shaped class: radii in [delta, m_bound] and the
 * bounded polygon star-shaped w.r.t. the ball of radius delta (every edge's
 * supporting line stays at distance >= delta from the origin). Rejection
 * sampling over random low-order trigonometric log-radii. */
inline rb::StarCurve random_k_curve(std::mt19937& rng, int n, double delta, double m_bound) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double base = delta * 1.6 + (m_bound * 0.55 - delta * 1.6) * unif(rng);
        const double c0 = std::log(base);
        std::vector<double> ak(6, 0.0), bk(6, 0.0);
        for (int k = 1; k <= 5; ++k) {
            const double amp = 0.35 / (k * k);
            ak[static_cast<std::size_t>(k)] = amp * (2.0 * unif(rng) - 1.0);
            bk[static_cast<std::size_t>(k)] = amp * (2.0 * unif(rng) - 1.0);
        }
        std::vector<double> radii(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double t = kTwoPi * i / n;
            double lg = c0;
            for (int k = 1; k <= 5; ++k)
                lg += ak[static_cast<std::size_t>(k)] * std::cos(k * t) +
                      bk[static_cast<std::size_t>(k)] * std::sin(k * t);
            radii[static_cast<std::size_t>(i)] = std::exp(lg);
        }
        rb::StarCurve curve(std::move(radii));
        if (curve.min_radius() < delta || curve.max_radius() > m_bound) continue;
        bool star = true;
        for (int i = 0; i < n && star; ++i) {
            const auto p = curve.point(i);
            const auto q = curve.point((i + 1) % n);
            const double cross = std::abs(p.x * q.y - p.y * q.x);
            const double len = std::hypot(q.x - p.x, q.y - p.y);
            if (cross < delta * len) star = false;  // edge line too close to 0
        }
        if (star) return curve;
    }
    throw std::runtime_error("random_k_curve: rejection sampling failed");
}

/// Plain bisection for lambda*rho*ln(rho) = rhs, independent of the library
/// root finder.
inline double radius_bisect(double lambda, double rhs) {
    double lo = 1.0, hi = 2.0;
    auto g = [&](double rho) { return lambda * rho * std::log(rho) - rhs; };
    while (g(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
