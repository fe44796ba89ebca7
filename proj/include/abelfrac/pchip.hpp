#pragma once

#include <vector>

namespace abelfrac {

// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slope
// limiting). Shape-preserving: no overshoot between monotone samples.
class PchipInterpolant {
public:
    PchipInterpolant(std::vector<double> xs, std::vector<double> ys);

    // Evaluate at t; t is clamped to the sample range.
    double operator()(double t) const;

    const std::vector<double>& abscissae() const { return xs_; }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<double> slopes_;
};

} // namespace abelfrac
