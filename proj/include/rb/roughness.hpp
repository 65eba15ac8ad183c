#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rb {

/** Periodic, nonnegative, Lipschitz boundary perturbation h on the torus
 * variable Theta in [0, 2*pi). Built-in shapes:
 *   h1(Theta) = 1 - cos(Theta)
 *   h2(Theta) = pi - |Theta - pi|   (triangular wave, kinks at 0 and pi)
 * Tabulated profiles use the piecewise-linear interpolant of their samples. */
class RoughnessProfile {
  public:
    enum class Kind { h1, h2, zero, tabulated };

    static RoughnessProfile h1();
    static RoughnessProfile h2();
    static RoughnessProfile zero();
    /** Builds a tabulated profile from (Theta_i, h_i) samples.
     * Angles must be strictly increasing in [0, 2*pi); values must be >= 0.
     * Throws InvalidProfileError otherwise. */
    static RoughnessProfile tabulated(std::vector<std::pair<double, double>> samples);
    /// Reads a two-column "Theta value" text file ('#' comments allowed).
    static RoughnessProfile from_file(const std::string& path);

    /// h(Theta); the argument is reduced to [0, 2*pi).
    double operator()(double theta) const;
    /** One-sided-average slope h'(Theta). Analytic for the built-ins; for
     * tabulated profiles the slope of the containing segment. At a kink the
     * mean of the two adjacent slopes is returned. */
    double derivative(double theta) const;

    double max_value() const { return max_value_; }
    double lipschitz_bound() const { return lipschitz_; }
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_zero() const;

  private:
    RoughnessProfile(Kind kind, std::string name);

    Kind kind_;
    std::string name_;
    std::vector<double> sample_theta_;
    std::vector<double> sample_value_;
    double max_value_ = 0.0;
    double lipschitz_ = 0.0;
};

/// 2*pi-periodic reduction to [0, 2*pi).
double wrap_angle(double theta);

}  // namespace rb
