#pragma once

#include <string>
#include <vector>

#include "rb/roughness.hpp"

namespace rb {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Annulus bounds for the star-shaped curve class: curves stay inside the
/// ball of radius m_bound and are star-shaped w.r.t. the ball of radius delta.
struct AnnulusBounds {
    AnnulusBounds(double delta_, double m_bound_);
    double delta;
    double m_bound;
};

/** Closed star-shaped curve stored as radii f(theta_i) >= 0 on the uniform
 * angular grid theta_i = 2*pi*i/N. Between nodes the curve is the polyline
 * through the sample points (equivalently, comparisons between curves on
 * different grids use the piecewise-linear interpolant of f). */
class StarCurve {
  public:
    /// Throws MeshError unless all radii are strictly positive.
    explicit StarCurve(std::vector<double> radii);
    static StarCurve circle(int n, double radius);

    int size() const { return static_cast<int>(radii_.size()); }
    double radius(int i) const { return radii_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& radii() const { return radii_; }
    double theta(int i) const;

    double min_radius() const;
    double max_radius() const;

    /// Piecewise-linear interpolant of f at an arbitrary angle.
    double interp(double theta) const;
    /// Curve resampled onto an n-point uniform grid by linear interpolation.
    StarCurve resampled(int n) const;
    Point2 point(int i) const;

    bool within(const AnnulusBounds& bounds) const;

  private:
    std::vector<double> radii_;
};

/** Inner rough boundary r = 1 - eps*h(theta/eps) sampled on n angles.
 * Requires 1/eps to be a positive integer, eps*max(h) < 1 and n a multiple
 * of 1/eps so the grid covers whole roughness periods. */
StarCurve inner_boundary(const RoughnessProfile& profile, double eps, int n);

/// 1/eps rounded to the nearest integer; throws InvalidEpsilonError unless
/// eps is (numerically) the reciprocal of a positive integer.
int roughness_periods(double eps);

/// Reads a two-column "theta radius" text file ('#' comments allowed); the
/// angles must be the uniform grid 2*pi*i/N in order.
StarCurve read_star_curve(const std::string& path);
void write_star_curve(const std::string& path, const StarCurve& curve,
                      const std::vector<std::string>& header_lines = {});

}  // namespace rb
