#include "wigner/special.hpp"

#include <cassert>
#include <cmath>

namespace wigner {

double laguerre_eval(int n, double x) {
    assert(n >= 0);
    if (n == 0) return 1.0;
    double lm = 1.0;        // L_0
    double l = 1.0 - x;     // L_1
    for (int k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 - x) * l - k * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

double laguerre_scaled(int n, double x) {
    assert(n >= 0);
    const double s = std::exp(-0.5 * x);
    if (n == 0) return s;
    double lm = s;
    double l = (1.0 - x) * s;
    for (int k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 - x) * l - k * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

}  // namespace wigner
