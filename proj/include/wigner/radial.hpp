#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "wigner/interp.hpp"
#include "wigner/quadrature.hpp"

namespace wigner {

/// Rotation-invariant Wigner function W(r) of the squared radius
/// r = x^2 + p^2, with explicit support; evaluates to 0 outside it.
///
/// Convention: Tr(rho rho') = 2 pi^2 int W W' dr, normalization
/// pi int W dr = 1, vacuum W(r) = e^{-r}/pi. The thermal state of
/// parameter C is W(r) = e^{-r/2C}/(2 pi C) with covariance 2C * identity.
class RadialFunction {
public:
    struct Thermal {
        double c;
    };
    /// Truncated affine-plus-exponential form
    /// W(r) = a1 + a2 e^{-r/2c}/(2 pi c) + a3 r on [r_lo, r_hi].
    struct Extremal {
        double a1, a2, a3, c, r_lo, r_hi;
    };
    struct Fock {
        int n;
    };
    struct Sampled {
        std::vector<double> r;
        std::vector<double> w;
    };
    /// Catch-all for caller-supplied radial evaluators (mixtures, tests).
    struct Custom {};

    using Params = std::variant<Thermal, Extremal, Fock, Sampled, Custom>;

    static RadialFunction thermal(double c);
    static RadialFunction extremal(double a1, double a2, double a3, double c, double r_lo,
                                   double r_hi);
    static RadialFunction fock(int n);
    /// r strictly increasing, r[0] >= 0, >= 4 points; interpolated with a
    /// monotone-safe local cubic between samples.
    static RadialFunction sampled(std::vector<double> r, std::vector<double> w);
    static RadialFunction custom(std::function<double(double)> f, Support support,
                                 int min_panels = 1);

    /// W(r); 0 outside the support (and for r < 0).
    double operator()(double r) const;

    const Support& support() const { return support_; }
    const Params& params() const { return params_; }
    /// Minimum uniform pre-split a quadrature over this function needs to
    /// see all its sign structure (Fock states oscillate ~n times).
    int min_panels() const { return min_panels_; }
    /// Forced quadrature panel edges (knots of sampled data).
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    bool is_sampled() const { return std::holds_alternative<Sampled>(params_); }

private:
    RadialFunction(std::function<double(double)> f, Support support, Params params,
                   int min_panels, std::vector<double> breakpoints);

    std::function<double(double)> eval_;
    Support support_;
    Params params_;
    int min_panels_ = 1;
    std::vector<double> breakpoints_;
};

}  // namespace wigner
