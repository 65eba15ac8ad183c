#include "rb/star_curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rb/errors.hpp"

namespace rb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AnnulusBounds::AnnulusBounds(double delta_, double m_bound_) : delta(delta_), m_bound(m_bound_) {
    if (!(0.0 < delta && delta < m_bound))
        throw std::invalid_argument("annulus bounds require 0 < delta < m_bound");
}

StarCurve::StarCurve(std::vector<double> radii) : radii_(std::move(radii)) {
    if (radii_.empty()) throw MeshError("star curve needs at least one radius");
    for (double r : radii_)
        if (!(r > 0.0) || !std::isfinite(r))
            throw MeshError("star curve radii must be strictly positive and finite");
}

StarCurve StarCurve::circle(int n, double radius) {
    return StarCurve(std::vector<double>(static_cast<std::size_t>(n), radius));
}

double StarCurve::theta(int i) const {
    return kTwoPi * static_cast<double>(i) / static_cast<double>(size());
}

double StarCurve::min_radius() const {
    return *std::min_element(radii_.begin(), radii_.end());
}

double StarCurve::max_radius() const {
    return *std::max_element(radii_.begin(), radii_.end());
}

double StarCurve::interp(double theta) const {
    const int n = size();
    const double t = wrap_angle(theta) / kTwoPi * static_cast<double>(n);
    const int i = std::min(static_cast<int>(t), n - 1);
    const double w = t - static_cast<double>(i);
    return (1.0 - w) * radii_[static_cast<std::size_t>(i)] +
           w * radii_[static_cast<std::size_t>((i + 1) % n)];
}

StarCurve StarCurve::resampled(int n) const {
    if (n == size()) return *this;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = interp(kTwoPi * i / n);
    return StarCurve(std::move(out));
}

Point2 StarCurve::point(int i) const {
    const double t = theta(i);
    const double r = radii_[static_cast<std::size_t>(i)];
    return {r * std::cos(t), r * std::sin(t)};
}

bool StarCurve::within(const AnnulusBounds& bounds) const {
    return min_radius() >= bounds.delta && max_radius() <= bounds.m_bound;
}

int roughness_periods(double eps) {
    if (!(eps > 0.0)) throw InvalidEpsilonError("eps must be positive");
    const double inv = 1.0 / eps;
    const double rounded = std::round(inv);
    if (rounded < 1.0 || std::abs(inv - rounded) > 1e-9 * inv)
        throw InvalidEpsilonError("1/eps must be a positive integer");
    return static_cast<int>(rounded);
}

StarCurve inner_boundary(const RoughnessProfile& profile, double eps, int n) {
    const int periods = roughness_periods(eps);
    if (eps * profile.max_value() >= 1.0)
        throw DegenerateDomainError("eps * max(h) >= 1: boundary reaches the origin");
    if (n <= 0 || n % periods != 0)
        throw std::invalid_argument("grid size must be a positive multiple of 1/eps");
    std::vector<double> radii(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        radii[static_cast<std::size_t>(i)] = 1.0 - eps * profile(theta / eps);
    }
    return StarCurve(std::move(radii));
}

StarCurve read_star_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve file: " + path);
    std::vector<double> thetas, radii;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        double theta, r;
        if (!(ls >> theta >> r))
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'theta radius'");
        thetas.push_back(theta);
        radii.push_back(r);
    }
    if (radii.empty()) throw ParseError(path + ": no samples");
    const int n = static_cast<int>(radii.size());
    for (int i = 0; i < n; ++i) {
        const double expect = kTwoPi * i / n;
        if (std::abs(thetas[static_cast<std::size_t>(i)] - expect) > 1e-8)
            throw ParseError(path + ": angles must be the uniform grid 2*pi*i/N");
    }
    try {
        return StarCurve(std::move(radii));
    } catch (const MeshError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_star_curve(const std::string& path, const StarCurve& curve,
                      const std::vector<std::string>& header_lines) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    for (const auto& h : header_lines) out << "# " << h << "\n";
    out << "# columns: theta radius\n";
    char buf[64];
    for (int i = 0; i < curve.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g %.12g", curve.theta(i), curve.radius(i));
        out << buf << "\n";
    }
}

}  // namespace rb
