#include "abelfrac/pchip.hpp"

#include "abelfrac/errors.hpp"

#include <algorithm>
#include <cmath>

namespace abelfrac {

PchipInterpolant::PchipInterpolant(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys))
{
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw InvalidArgument("pchip: need at least two samples of equal length");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw InvalidArgument("pchip: abscissae must be strictly increasing");

    const std::size_t m = n - 1; // cell count
    std::vector<double> h(m), d(m);
    for (std::size_t i = 0; i < m; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }

    slopes_.assign(n, 0.0);
    if (m == 1) {
        slopes_[0] = slopes_[1] = d[0];
        return;
    }

    // interior: weighted harmonic mean where secants share a sign
    for (std::size_t i = 1; i < m; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }

    // ends: one-sided three-point estimate, limited to preserve shape
    const auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    slopes_[0] = end_slope(h[0], h[1], d[0], d[1]);
    slopes_[n - 1] = end_slope(h[m - 1], h[m - 2], d[m - 1], d[m - 2]);
}

double PchipInterpolant::operator()(double t) const
{
    if (t <= xs_.front())
        return ys_.front();
    if (t >= xs_.back())
        return ys_.back();

    const auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double h = xs_[i + 1] - xs_[i];
    const double s = (t - xs_[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * ys_[i] + h * h10 * slopes_[i] + h01 * ys_[i + 1] + h * h11 * slopes_[i + 1];
}

} // namespace abelfrac
