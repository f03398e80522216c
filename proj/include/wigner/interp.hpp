#pragma once

#include <vector>

namespace wigner {

/// Monotonicity-safe local cubic interpolant (Steffen's method): C^1,
/// never overshoots the data, reproduces monotone runs monotonically.
/// Used for sampled Wigner data of unknown smoothness and for resampling
/// bound curves onto new grids.
class MonotoneCubic {
public:
    /// x must be strictly increasing with at least 2 points.
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    /// Evaluates the interpolant; clamps to the end values outside the grid.
    double operator()(double x) const;

    const std::vector<double>& knots() const { return x_; }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, slope_;
};

}  // namespace wigner
