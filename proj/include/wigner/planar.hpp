#pragma once

#include <functional>

#include "wigner/covariance.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/radial.hpp"

namespace wigner {

/// General Wigner function W(x, p) with a declared bounding box outside of
/// which the function is negligible (integrators grow the box until the
/// tail contribution is below tolerance, so the box only needs to cover the
/// bulk of the mass).
class PlanarFunction {
public:
    PlanarFunction(std::function<double(double, double)> f, Box box);

    double operator()(double x, double p) const { return eval_(x, p); }
    const Box& box() const { return box_; }

    /// W'(v) = W(S^{-1} v). For det S = 1 maps (area preserving), the
    /// normalization and all overlaps are unchanged.
    PlanarFunction transformed_by(const Mat2& s) const;

private:
    std::function<double(double, double)> eval_;
    Box box_;
};

/// Equal-weight mixture of two coherent states displaced to x = +d and
/// x = -d: W(x,p) = [e^{-((x-d)^2+p^2)} + e^{-((x+d)^2+p^2)}] / (2 pi).
/// Normalized, even in x and p; d = 0 degenerates to the vacuum.
PlanarFunction coherent_mixture_wigner(double d);

/// Centered Gaussian Wigner function of the given covariance:
/// W(v) = exp(-v^T gamma^{-1} v) / (pi sqrt(det gamma)).
PlanarFunction wigner_of(const GaussianState& state);

/// Planar view of a radial function (W(x,p) = W_rad(x^2 + p^2)).
PlanarFunction to_planar(const RadialFunction& w);

}  // namespace wigner
