#include "wigner/covariance.hpp"

#include <cmath>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0) throw Error("Mat2: singular matrix has no inverse");
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

Mat2 Mat2::rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c, -s, s, c};
}

void CovarianceMatrix::require_positive_definite() const {
    if (!positive_definite()) {
        std::ostringstream msg;
        msg << "covariance matrix not positive definite: g_xx = " << g_xx
            << ", g_xp = " << g_xp << ", g_pp = " << g_pp << ", det = " << det();
        throw NotPositiveDefinite(msg.str());
    }
}

CovarianceMatrix CovarianceMatrix::transformed_by(const Mat2& s) const {
    const Mat2 g{g_xx, g_xp, g_xp, g_pp};
    const Mat2 r = s * g * s.transpose();
    return {r.m00, 0.5 * (r.m01 + r.m10), r.m11};
}

double GaussianState::purity() const { return 1.0 / std::sqrt(cov.det()); }

double GaussianState::thermal_c() const { return 0.5 * std::sqrt(cov.det()); }

GaussianState gaussian_reference(const CovarianceMatrix& cov) {
    cov.require_positive_definite();
    return GaussianState{cov};
}

double non_gaussianity(double mu, double mu_g, double overlap) {
    return (mu + mu_g - 2.0 * overlap) / (2.0 * mu);
}

ThermalForm williamson_1mode(const CovarianceMatrix& cov) {
    cov.require_positive_definite();
    // Eigen-rotation of the symmetric matrix, then rescale the principal
    // axes by reciprocal factors so the product stays det-1.
    const double angle = 0.5 * std::atan2(2.0 * cov.g_xp, cov.g_xx - cov.g_pp);
    const Mat2 rot = Mat2::rotation(-angle);
    const CovarianceMatrix diag = cov.transformed_by(rot);
    const double nu = std::sqrt(cov.det());  // = sqrt(lambda1 * lambda2)
    const Mat2 rescale{std::sqrt(nu / diag.g_xx), 0.0, 0.0, std::sqrt(nu / diag.g_pp)};
    return ThermalForm{rescale * rot, 0.5 * nu};
}

}  // namespace wigner
