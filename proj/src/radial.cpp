#include "wigner/radial.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "wigner/errors.hpp"
#include "wigner/special.hpp"

namespace wigner {

RadialFunction::RadialFunction(std::function<double(double)> f, Support support, Params params,
                               int min_panels, std::vector<double> breakpoints)
    : eval_(std::move(f)),
      support_(support),
      params_(std::move(params)),
      min_panels_(min_panels),
      breakpoints_(std::move(breakpoints)) {}

double RadialFunction::operator()(double r) const {
    if (r < support_.lo || r > support_.hi) return 0.0;
    return eval_(r);
}

RadialFunction RadialFunction::thermal(double c) {
    if (!(c > 0.0)) throw Error("thermal: C must be positive");
    const double norm = 1.0 / (2.0 * M_PI * c);
    const double inv = 1.0 / (2.0 * c);
    Support s;
    s.decay_scale = 2.0 * c;
    return RadialFunction([norm, inv](double r) { return norm * std::exp(-r * inv); }, s,
                          Thermal{c}, 1, {});
}

RadialFunction RadialFunction::extremal(double a1, double a2, double a3, double c, double r_lo,
                                        double r_hi) {
    if (!(c > 0.0) || !(r_hi > r_lo) || r_lo < 0.0)
        throw Error("extremal: need C > 0 and 0 <= r_lo < r_hi");
    const double norm = a2 / (2.0 * M_PI * c);
    const double inv = 1.0 / (2.0 * c);
    Support s;
    s.lo = r_lo;
    s.hi = r_hi;
    return RadialFunction(
        [a1, a3, norm, inv](double r) { return a1 + norm * std::exp(-r * inv) + a3 * r; }, s,
        Extremal{a1, a2, a3, c, r_lo, r_hi}, 1, {});
}

RadialFunction RadialFunction::fock(int n) {
    if (n < 0) throw Error("fock: n must be non-negative");
    // W_n(r) = (-1)^n / pi * e^{-r} L_n(2r); the e^{-r} L_n(2r) product is
    // exactly the half-scaled Laguerre at argument 2r.
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    Support s;
    s.decay_scale = 1.0;
    // Oscillation ends near the largest Laguerre zero (2r ~ 4n), decay after.
    s.bulk_range = 4.0 * n + 40.0;
    return RadialFunction(
        [n, sign](double r) { return sign / M_PI * laguerre_scaled(n, 2.0 * r); }, s, Fock{n},
        std::max(1, 4 * (n + 1)), {});
}

RadialFunction RadialFunction::sampled(std::vector<double> r, std::vector<double> w) {
    if (r.size() < 4 || r.size() != w.size())
        throw Error("sampled: need >= 4 matching (r, w) samples");
    if (r.front() < 0.0) throw Error("sampled: r values must be >= 0");
    for (size_t i = 0; i + 1 < r.size(); ++i)
        if (!(r[i] < r[i + 1])) throw Error("sampled: r grid must be strictly increasing");
    for (double v : w)
        if (!std::isfinite(v)) throw Error("sampled: non-finite value");
    Support s;
    s.lo = r.front();
    s.hi = r.back();
    Sampled params{r, w};
    std::vector<double> knots = r;
    auto interp = std::make_shared<MonotoneCubic>(std::move(r), std::move(w));
    return RadialFunction([interp](double x) { return (*interp)(x); }, s, std::move(params), 1,
                          std::move(knots));
}

RadialFunction RadialFunction::custom(std::function<double(double)> f, Support support,
                                      int min_panels) {
    return RadialFunction(std::move(f), support, Custom{}, min_panels, {});
}

}  // namespace wigner
