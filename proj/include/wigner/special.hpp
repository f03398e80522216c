#pragma once

namespace wigner {

/// Laguerre polynomial L_n(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1},  L_0 = 1, L_1 = 1-x.
/// Exact for n <= 1; values grow like x^n/n! for x beyond the zero region.
double laguerre_eval(int n, double x);

/// e^{-x/2} L_n(x), evaluated by running the same recurrence on the scaled
/// values. The scaled sequence stays bounded by 1 in magnitude for x >= 0,
/// so this is safe where e^{-x/2} underflows the unscaled product.
double laguerre_scaled(int n, double x);

}  // namespace wigner
