#pragma once

#include <functional>

namespace wigner {

struct RootOptions {
    double x_tol = 1e-14;   // stop when the bracket is this tight (relative)
    double f_tol = 1e-12;   // or when |f| falls below this
    int max_iter = 200;
};

/// Root of f on [lo, hi] by a bracketing bisection/secant hybrid: a secant
/// step is taken when it lands safely inside the bracket, bisection
/// otherwise, so the bracket always shrinks. Throws NoBracket when
/// f(lo) and f(hi) have the same (nonzero) sign.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           const RootOptions& opts = {});

/// Golden-section minimizer on [lo, hi]; assumes a single interior minimum.
double minimize_golden(const std::function<double(double)>& f, double lo, double hi,
                       double x_tol = 1e-10);

}  // namespace wigner
