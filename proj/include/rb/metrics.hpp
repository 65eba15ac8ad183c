#pragma once

#include "rb/star_curve.hpp"

namespace rb {

/// Sup-norm distance between the polar parametrizations, sup |f_b - f_a|.
/// Curves on different grids are resampled to the finer one first.
double metric_d1(const StarCurve& a, const StarCurve& b);

/** Scaling metric sup{ |ln(lambda)| : lambda * Gamma_a intersects Gamma_b }.
 * For star-shaped curves the admissible scalings are exactly
 * [min f_b/f_a, max f_b/f_a], so the metric equals the sup over the grid of
 * |ln(f_b/f_a)|. */
double metric_d2(const StarCurve& a, const StarCurve& b);

/// Hausdorff distance between the two closed polylines; directed distances
/// take every vertex of one curve against the segments of the other.
double metric_hausdorff(const StarCurve& a, const StarCurve& b);

struct MetricReport {
    double d1 = 0.0;
    double d2 = 0.0;
    double hausdorff = 0.0;
    // Slack (>= 0 when satisfied) of the three equivalence inequalities on
    // the curve class with the given annulus bounds:
    //   hausdorff <= d1
    //   d2 <= (m_bound/delta^2) * hausdorff
    //   d1 <= (m_bound^2/delta) * d2
    double slack_dh_le_d1 = 0.0;
    double slack_d2_le_dh = 0.0;
    double slack_d1_le_d2 = 0.0;
};

MetricReport metric_report(const StarCurve& a, const StarCurve& b, const AnnulusBounds& bounds);

/// Euclidean distance from a point to the segment [p, q].
double point_segment_distance(const Point2& x, const Point2& p, const Point2& q);

}  // namespace rb
