#include "wigner/interp.hpp"

#include <algorithm>
#include <cmath>

#include "wigner/errors.hpp"

namespace wigner {

namespace {
double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw Error("MonotoneCubic: need >= 2 matching points");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1])) throw Error("MonotoneCubic: x must be strictly increasing");

    slope_.resize(n);
    std::vector<double> h(n - 1), s(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        s[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    for (size_t i = 1; i + 1 < n; ++i) {
        const double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
        slope_[i] = (sign(s[i - 1]) + sign(s[i])) *
                    std::min({std::abs(s[i - 1]), std::abs(s[i]), 0.5 * std::abs(p)});
    }
    // One-sided endpoint slopes with Steffen's boundary limiter.
    auto endpoint = [](double h0, double h1, double s0, double s1) {
        double p = s0 * (1.0 + h0 / (h0 + h1)) - s1 * h0 / (h0 + h1);
        if (p * s0 <= 0.0)
            p = 0.0;
        else if (std::abs(p) > 2.0 * std::abs(s0))
            p = 2.0 * s0;
        return p;
    };
    if (n == 2) {
        slope_[0] = slope_[1] = s[0];
    } else {
        slope_[0] = endpoint(h[0], h[1], s[0], s[1]);
        slope_[n - 1] = endpoint(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
    }
}

double MonotoneCubic::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const size_t i =
        std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1;
    const double h = x_[i + 1] - x_[i];
    const double s = (y_[i + 1] - y_[i]) / h;
    // Hermite form with the limited slopes.
    const double a = (slope_[i] + slope_[i + 1] - 2.0 * s) / (h * h);
    const double b = (3.0 * s - 2.0 * slope_[i] - slope_[i + 1]) / h;
    const double dx = x - x_[i];
    return y_[i] + dx * (slope_[i] + dx * (b + dx * a));
}

}  // namespace wigner
