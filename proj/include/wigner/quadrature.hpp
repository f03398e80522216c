#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace wigner {

/// Default relative tolerance for all quadrature in this library. Derived
/// quantities are asserted at 1e-8, leaving two orders of headroom.
inline constexpr double DEFAULT_REL_TOL = 1e-10;

/// Integration domain of a radial function, with tail hints.
///
/// `decay_scale` is the e-folding scale of |f| as r -> infinity; the
/// semi-infinite integrator substitutes r = r0 - decay_scale * ln(u), which
/// turns a pure exponential tail into a constant integrand on (0, 1].
/// `bulk_range` marks where structure (oscillation, support edges) ends and
/// pure decay begins; 0 means "derive from decay_scale".
struct Support {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    double decay_scale = 1.0;
    double bulk_range = 0.0;

    bool finite() const { return hi < std::numeric_limits<double>::infinity(); }
};

struct QuadOptions {
    double rel_tol = DEFAULT_REL_TOL;
    /// Absolute error floor; negative means "use rel_tol as the floor".
    /// Needed because integrals of orthogonal states are exactly zero.
    double abs_tol = -1.0;
    /// Uniform pre-split of the range before adaptation. Oscillatory
    /// integrands (Laguerre products) must be pre-split so the error
    /// estimate cannot alias past entire oscillations.
    int initial_panels = 1;
    /// Forced panel edges (e.g. knots of a sampled function); entries
    /// outside the range are ignored.
    std::vector<double> breakpoints;
    int max_panels = 4000;

    double abs_floor() const { return abs_tol >= 0.0 ? abs_tol : rel_tol; }
};

/// Adaptive integral of f over the finite interval [a, b].
///
/// Panels are estimated with a nested Clenshaw-Curtis pair (17 and 33
/// points); the panel error is the difference of the two rules. Panels are
/// refined worst-first until the summed error is below
/// max(abs_floor, rel_tol * |I|). Throws NonConvergence if the panel budget
/// is exhausted first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {});

/// Integral of f over a radial support; semi-infinite supports are split
/// into a bulk part and an exponential-decay-aware transformed tail.
double integrate_radial(const std::function<double(double)>& f, const Support& support,
                        const QuadOptions& opts = {});
double integrate_radial(const std::function<double(double)>& f, const Support& support,
                        double rel_tol);

/// Axis-aligned phase-space rectangle.
struct Box {
    double x_lo, x_hi, p_lo, p_hi;

    Box scaled_about_center(double factor) const;
    static Box intersection(const Box& a, const Box& b);
    static Box hull(const Box& a, const Box& b);
};

/// Iterated adaptive 2D integral over a fixed box.
double integrate_planar(const std::function<double(double, double)>& f, const Box& box,
                        const QuadOptions& opts = {});

/// 2D integral with automatic box growth: the box is inflated until the
/// added shell contributes less than the tolerance, up to a hard cap on the
/// number of growth rounds. Intended for integrands that decay at least
/// exponentially outside the declared box.
double integrate_planar_grown(const std::function<double(double, double)>& f, const Box& box,
                              const QuadOptions& opts = {});

}  // namespace wigner
