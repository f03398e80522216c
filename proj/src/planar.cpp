#include "wigner/planar.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wigner/errors.hpp"

namespace wigner {

PlanarFunction::PlanarFunction(std::function<double(double, double)> f, Box box)
    : eval_(std::move(f)), box_(box) {
    if (!(box_.x_hi > box_.x_lo) || !(box_.p_hi > box_.p_lo))
        throw Error("PlanarFunction: degenerate bounding box");
}

PlanarFunction PlanarFunction::transformed_by(const Mat2& s) const {
    const Mat2 inv = s.inverse();
    auto f = eval_;
    auto g = [f, inv](double x, double p) {
        return f(inv.m00 * x + inv.m01 * p, inv.m10 * x + inv.m11 * p);
    };
    // Bounding box of the mapped corners.
    const double xs[4] = {box_.x_lo, box_.x_lo, box_.x_hi, box_.x_hi};
    const double ps[4] = {box_.p_lo, box_.p_hi, box_.p_lo, box_.p_hi};
    Box out{1e300, -1e300, 1e300, -1e300};
    for (int i = 0; i < 4; ++i) {
        const double x = s.m00 * xs[i] + s.m01 * ps[i];
        const double p = s.m10 * xs[i] + s.m11 * ps[i];
        out.x_lo = std::min(out.x_lo, x);
        out.x_hi = std::max(out.x_hi, x);
        out.p_lo = std::min(out.p_lo, p);
        out.p_hi = std::max(out.p_hi, p);
    }
    return PlanarFunction(std::move(g), out);
}

PlanarFunction coherent_mixture_wigner(double d) {
    if (d < 0.0) throw Error("coherent_mixture_wigner: d must be >= 0");
    auto f = [d](double x, double p) {
        const double dm = x - d, dp = x + d;
        return (std::exp(-(dm * dm + p * p)) + std::exp(-(dp * dp + p * p))) / (2.0 * M_PI);
    };
    const double half = d + 8.0;
    return PlanarFunction(std::move(f), Box{-half, half, -8.0, 8.0});
}

PlanarFunction wigner_of(const GaussianState& state) {
    state.cov.require_positive_definite();
    const CovarianceMatrix& g = state.cov;
    const double det = g.det();
    const double norm = 1.0 / (M_PI * std::sqrt(det));
    // Inverse of the symmetric covariance.
    const double i_xx = g.g_pp / det, i_pp = g.g_xx / det, i_xp = -g.g_xp / det;
    auto f = [=](double x, double p) {
        return norm * std::exp(-(i_xx * x * x + 2.0 * i_xp * x * p + i_pp * p * p));
    };
    const double sx = 8.0 * std::sqrt(g.g_xx), sp = 8.0 * std::sqrt(g.g_pp);
    return PlanarFunction(std::move(f), Box{-sx, sx, -sp, sp});
}

PlanarFunction to_planar(const RadialFunction& w) {
    auto f = [w](double x, double p) { return w(x * x + p * p); };
    const Support& s = w.support();
    const double r_eff = s.finite() ? s.hi : (s.bulk_range > 0.0 ? s.bulk_range
                                                                 : 45.0 * s.decay_scale);
    const double half = std::sqrt(std::max(r_eff, 1.0));
    return PlanarFunction(std::move(f), Box{-half, half, -half, half});
}

}  // namespace wigner
