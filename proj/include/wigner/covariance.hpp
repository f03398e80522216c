#pragma once

namespace wigner {

/// 2x2 real matrix acting on phase-space vectors (x, p).
struct Mat2 {
    double m00, m01, m10, m11;

    double det() const { return m00 * m11 - m01 * m10; }
    Mat2 transpose() const { return {m00, m10, m01, m11}; }
    Mat2 inverse() const;
    Mat2 operator*(const Mat2& o) const;
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 rotation(double angle);
};

/// Second-moment matrix of the quadratures (x, p), in the convention where
/// gamma_ij = Tr({r_i, r_j} rho) with the plain anticommutator (no 1/2) and
/// zero displacement, so the vacuum has gamma = identity. Symmetric by
/// construction: only g_xp is stored for the off-diagonal.
struct CovarianceMatrix {
    double g_xx = 1.0;
    double g_xp = 0.0;
    double g_pp = 1.0;

    double det() const { return g_xx * g_pp - g_xp * g_xp; }
    bool positive_definite() const { return g_xx > 0.0 && det() > 0.0; }
    /// det gamma >= 1 for physical states (vacuum saturates).
    bool satisfies_heisenberg(double tol = 0.0) const { return det() >= 1.0 - tol; }
    void require_positive_definite() const;

    static CovarianceMatrix identity() { return {1.0, 0.0, 1.0}; }
    static CovarianceMatrix isotropic(double g) { return {g, 0.0, g}; }

    /// Congruence transform S gamma S^T (covariance of the state after the
    /// phase-space map v -> S v).
    CovarianceMatrix transformed_by(const Mat2& s) const;
};

/// Centered Gaussian state: fully determined by its covariance matrix.
struct GaussianState {
    CovarianceMatrix cov;

    /// (det gamma)^{-1/2}, in (0, 1] for physical covariances.
    double purity() const;
    /// Thermal parameter of the rotation-invariant normal form:
    /// 2C = sqrt(det gamma) = 1 / purity.
    double thermal_c() const;
};

/// Gaussian state with the given covariance (the "Gaussian reference" of any
/// state sharing those second moments). Throws NotPositiveDefinite.
GaussianState gaussian_reference(const CovarianceMatrix& cov);

/// delta = (mu + mu_g - 2 * overlap) / (2 mu): the non-Gaussianity of a
/// state of purity mu relative to its Gaussian reference of purity mu_g,
/// given their trace overlap. Zero iff the state equals its reference.
double non_gaussianity(double mu, double mu_g, double overlap);

/// Result of the one-mode symplectic reduction to thermal form.
struct ThermalForm {
    Mat2 s;    ///< symplectic matrix, det s = 1
    double c;  ///< thermal parameter: s gamma s^T = 2c * identity
};

/// Symplectic S (det S = 1) with S gamma S^T = sqrt(det gamma) * identity,
/// i.e. the rotation-invariant (thermal) normal form, and C = sqrt(det)/2.
/// For one mode every det-1 matrix is symplectic, so an eigen-rotation
/// followed by a reciprocal rescaling suffices.
ThermalForm williamson_1mode(const CovarianceMatrix& cov);

}  // namespace wigner
