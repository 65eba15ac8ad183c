#include "rb/roughness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rb/errors.hpp"

namespace rb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod can return exactly 2*pi after the correction when theta is a tiny
    // negative number.
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

RoughnessProfile::RoughnessProfile(Kind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {}

RoughnessProfile RoughnessProfile::h1() {
    RoughnessProfile p(Kind::h1, "h1");
    p.max_value_ = 2.0;
    p.lipschitz_ = 1.0;
    return p;
}

RoughnessProfile RoughnessProfile::h2() {
    RoughnessProfile p(Kind::h2, "h2");
    p.max_value_ = std::numbers::pi;
    p.lipschitz_ = 1.0;
    return p;
}

RoughnessProfile RoughnessProfile::zero() {
    return RoughnessProfile(Kind::zero, "zero");
}

RoughnessProfile RoughnessProfile::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.empty())
        throw InvalidProfileError("tabulated profile needs at least one sample");
    RoughnessProfile p(Kind::tabulated, "tabulated");
    double prev = -1.0;
    for (const auto& [theta, value] : samples) {
        if (theta < 0.0 || theta >= kTwoPi)
            throw InvalidProfileError("tabulated profile: angle outside [0, 2*pi)");
        if (theta <= prev)
            throw InvalidProfileError("tabulated profile: angles must be strictly increasing");
        if (value < 0.0)
            throw InvalidProfileError("tabulated profile: negative sample value");
        prev = theta;
        p.sample_theta_.push_back(theta);
        p.sample_value_.push_back(value);
    }
    p.max_value_ = *std::max_element(p.sample_value_.begin(), p.sample_value_.end());
    const std::size_t n = p.sample_theta_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double dt = (j == 0) ? (p.sample_theta_[0] + kTwoPi - p.sample_theta_[i])
                                   : (p.sample_theta_[j] - p.sample_theta_[i]);
        const double slope = (p.sample_value_[j] - p.sample_value_[i]) / dt;
        p.lipschitz_ = std::max(p.lipschitz_, std::abs(slope));
    }
    return p;
}

RoughnessProfile RoughnessProfile::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file: " + path);
    std::vector<std::pair<double, double>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        double theta, value;
        if (!(ls >> theta >> value))
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'Theta value'");
        samples.emplace_back(theta, value);
    }
    if (samples.empty()) throw ParseError(path + ": no samples");
    try {
        RoughnessProfile p = tabulated(std::move(samples));
        p.name_ = "file:" + path;
        return p;
    } catch (const InvalidProfileError& e) {
        throw InvalidProfileError(path + ": " + e.what());
    }
}

double RoughnessProfile::operator()(double theta) const {
    const double t = wrap_angle(theta);
    switch (kind_) {
        case Kind::h1:
            return 1.0 - std::cos(t);
        case Kind::h2:
            return std::numbers::pi - std::abs(t - std::numbers::pi);
        case Kind::zero:
            return 0.0;
        case Kind::tabulated:
            break;
    }
    const std::size_t n = sample_theta_.size();
    if (n == 1) return sample_value_[0];
    // Segment containing t, with wrap-around between the last and first node.
    auto it = std::upper_bound(sample_theta_.begin(), sample_theta_.end(), t);
    std::size_t j = static_cast<std::size_t>(it - sample_theta_.begin());
    std::size_t i = (j == 0) ? n - 1 : j - 1;
    j = j % n;
    double t0 = sample_theta_[i];
    double t1 = sample_theta_[j];
    double tt = t;
    if (j <= i) {  // wrap segment
        t1 += kTwoPi;
        if (tt < t0) tt += kTwoPi;
    }
    const double w = (tt - t0) / (t1 - t0);
    return (1.0 - w) * sample_value_[i] + w * sample_value_[j];
}

double RoughnessProfile::derivative(double theta) const {
    const double t = wrap_angle(theta);
    switch (kind_) {
        case Kind::h1:
            return std::sin(t);
        case Kind::h2: {
            // Kinks at 0 and pi carry the mean of the one-sided slopes.
            constexpr double kink_tol = 1e-9;
            if (t < kink_tol || t > kTwoPi - kink_tol ||
                std::abs(t - std::numbers::pi) < kink_tol)
                return 0.0;
            return t < std::numbers::pi ? 1.0 : -1.0;
        }
        case Kind::zero:
            return 0.0;
        case Kind::tabulated:
            break;
    }
    const std::size_t n = sample_theta_.size();
    if (n == 1) return 0.0;
    auto slope = [&](std::size_t i) {
        const std::size_t j = (i + 1) % n;
        const double dt = (j == 0) ? (sample_theta_[0] + kTwoPi - sample_theta_[i])
                                   : (sample_theta_[j] - sample_theta_[i]);
        return (sample_value_[j] - sample_value_[i]) / dt;
    };
    auto it = std::lower_bound(sample_theta_.begin(), sample_theta_.end(), t);
    if (it != sample_theta_.end() && *it == t) {
        const std::size_t i = static_cast<std::size_t>(it - sample_theta_.begin());
        const std::size_t prev = (i == 0) ? n - 1 : i - 1;
        return 0.5 * (slope(prev) + slope(i));
    }
    auto ub = std::upper_bound(sample_theta_.begin(), sample_theta_.end(), t);
    const std::size_t j = static_cast<std::size_t>(ub - sample_theta_.begin());
    const std::size_t i = (j == 0) ? n - 1 : j - 1;
    return slope(i);
}

bool RoughnessProfile::is_zero() const {
    if (kind_ == Kind::zero) return true;
    if (kind_ != Kind::tabulated) return false;
    return max_value_ == 0.0;
}

}  // namespace rb
