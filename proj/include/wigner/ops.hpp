#pragma once

#include "wigner/covariance.hpp"
#include "wigner/planar.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/radial.hpp"

namespace wigner {

/// Tolerance to which inputs of overlap/purity must be normalized.
inline constexpr double NORMALIZATION_TOL = 1e-8;

struct OverlapOptions {
    /// Check |normalization - 1| <= NORMALIZATION_TOL on both arguments and
    /// throw NormalizationViolation on failure. Hot loops that have already
    /// validated their inputs disable this.
    bool check_normalization = true;
    double rel_tol = DEFAULT_REL_TOL;
};

/// pi * int W(r) dr  (equals 1 for a normalized radial Wigner function).
double normalization(const RadialFunction& w, double rel_tol = DEFAULT_REL_TOL);
/// Double integral of W over the plane, box-grown until the tail is below
/// tolerance (equals 1 for a normalized Wigner function).
double normalization(const PlanarFunction& w, double rel_tol = DEFAULT_REL_TOL);

/// Trace overlap Tr(rho rho') = 2 pi iint W W' dx dp. When both arguments
/// are radial this reduces to 2 pi^2 int W(r) W'(r) dr over the support
/// intersection. For physical states the result lies in [-2, 2] (purities
/// are at most 1); values outside are reported as computed, never clamped,
/// since non-physical candidate functions can exceed the band legitimately.
double overlap(const RadialFunction& w, const RadialFunction& w2,
               const OverlapOptions& opts = {});
double overlap(const PlanarFunction& w, const PlanarFunction& w2,
               const OverlapOptions& opts = {});
double overlap(const RadialFunction& w, const PlanarFunction& w2,
               const OverlapOptions& opts = {});
double overlap(const PlanarFunction& w, const RadialFunction& w2,
               const OverlapOptions& opts = {});

/// Tr(rho^2) = overlap of the function with itself; in (0, 1] for states.
double purity(const RadialFunction& w, const OverlapOptions& opts = {});
double purity(const PlanarFunction& w, const OverlapOptions& opts = {});

/// Covariance matrix of the state, gamma_xx = 2<x^2> etc. (displacement
/// zero). For radial functions this is (pi int W r dr) * identity. Throws
/// DivergentMoment if a tail moment fails to converge.
CovarianceMatrix covariance_of(const RadialFunction& w, double rel_tol = DEFAULT_REL_TOL);
CovarianceMatrix covariance_of(const PlanarFunction& w, double rel_tol = DEFAULT_REL_TOL);

}  // namespace wigner
