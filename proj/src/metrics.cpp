#include "rb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rb/errors.hpp"

namespace rb {

namespace {

// Resample both curves onto the finer of the two grids.
std::pair<StarCurve, StarCurve> common_grid(const StarCurve& a, const StarCurve& b) {
    const int n = std::max(a.size(), b.size());
    return {a.resampled(n), b.resampled(n)};
}

std::vector<Point2> vertices(const StarCurve& c) {
    std::vector<Point2> pts(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) pts[static_cast<std::size_t>(i)] = c.point(i);
    return pts;
}

double directed_hausdorff(const std::vector<Point2>& from, const std::vector<Point2>& to) {
    const std::size_t m = to.size();
    double worst = 0.0;
    for (const Point2& x : from) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m; ++j) {
            best = std::min(best, point_segment_distance(x, to[j], to[(j + 1) % m]));
            if (best == 0.0) break;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double point_segment_distance(const Point2& x, const Point2& p, const Point2& q) {
    const double dx = q.x - p.x, dy = q.y - p.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((x.x - p.x) * dx + (x.y - p.y) * dy) / len2, 0.0, 1.0);
    const double ex = p.x + t * dx - x.x;
    const double ey = p.y + t * dy - x.y;
    return std::hypot(ex, ey);
}

double metric_d1(const StarCurve& a, const StarCurve& b) {
    const auto [ca, cb] = common_grid(a, b);
    double worst = 0.0;
    for (int i = 0; i < ca.size(); ++i)
        worst = std::max(worst, std::abs(cb.radius(i) - ca.radius(i)));
    return worst;
}

double metric_d2(const StarCurve& a, const StarCurve& b) {
    const auto [ca, cb] = common_grid(a, b);
    double worst = 0.0;
    for (int i = 0; i < ca.size(); ++i) {
        const double ra = ca.radius(i), rbv = cb.radius(i);
        if (!(ra > 0.0) || !(rbv > 0.0))
            throw std::domain_error("metric_d2 requires strictly positive radii");
        worst = std::max(worst, std::abs(std::log(rbv / ra)));
    }
    return worst;
}

double metric_hausdorff(const StarCurve& a, const StarCurve& b) {
    const auto [ca, cb] = common_grid(a, b);
    const auto pa = vertices(ca);
    const auto pb = vertices(cb);
    return std::max(directed_hausdorff(pa, pb), directed_hausdorff(pb, pa));
}

MetricReport metric_report(const StarCurve& a, const StarCurve& b, const AnnulusBounds& bounds) {
    MetricReport r;
    r.d1 = metric_d1(a, b);
    r.d2 = metric_d2(a, b);
    r.hausdorff = metric_hausdorff(a, b);
    r.slack_dh_le_d1 = r.d1 - r.hausdorff;
    r.slack_d2_le_dh = bounds.m_bound / (bounds.delta * bounds.delta) * r.hausdorff - r.d2;
    r.slack_d1_le_d2 = bounds.m_bound * bounds.m_bound / bounds.delta * r.d2 - r.d1;
    return r;
}

}  // namespace rb
