#include <doctest.h>

#include <cmath>
#include <vector>

#include "wigner/covariance.hpp"
#include "wigner/errors.hpp"
#include "wigner/ops.hpp"
#include "wigner/planar.hpp"
#include "wigner/radial.hpp"
#include "wigner/special.hpp"

using namespace wigner;

namespace {
constexpr double DERIVED_TOL = 1e-8;
}

TEST_CASE("Laguerre recurrence basics") {
    CHECK(laguerre_eval(0, 3.7) == 1.0);
    CHECK(laguerre_eval(1, 2.0) == -1.0);
    CHECK(laguerre_eval(5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // L_2(x) = 1 - 2x + x^2/2
    CHECK(laguerre_eval(2, 1.5) == doctest::Approx(1.0 - 3.0 + 1.125).epsilon(1e-14));
    // scaled variant agrees with the plain one where both are representable
    for (double x : {0.1, 1.0, 7.5, 23.0}) {
        CHECK(laguerre_scaled(8, x) ==
              doctest::Approx(std::exp(-0.5 * x) * laguerre_eval(8, x)).epsilon(1e-12));
    }
}

TEST_CASE("thermal state: evaluator, normalization, covariance, purity") {
    for (double c : {0.5, 1.0, 5.0}) {
        const RadialFunction w = RadialFunction::thermal(c);
        CHECK(w(0.0) == doctest::Approx(1.0 / (2.0 * M_PI * c)).epsilon(1e-15));
        CHECK(w(2.0 * c) ==
              doctest::Approx(std::exp(-1.0) / (2.0 * M_PI * c)).epsilon(1e-15));
        CHECK(normalization(w) == doctest::Approx(1.0).epsilon(DERIVED_TOL));
        const CovarianceMatrix cov = covariance_of(w);
        CHECK(cov.g_xx == doctest::Approx(2.0 * c).epsilon(DERIVED_TOL));
        CHECK(cov.g_pp == doctest::Approx(2.0 * c).epsilon(DERIVED_TOL));
        CHECK(cov.g_xp == doctest::Approx(0.0).epsilon(DERIVED_TOL));
        // purity equals (det gamma)^{-1/2} = 1/(2C)
        CHECK(purity(w) == doctest::Approx(1.0 / (2.0 * c)).epsilon(DERIVED_TOL));
    }
}

TEST_CASE("overlap examples: vacuum, Fock orthogonality, thermal pair") {
    const RadialFunction vac = RadialFunction::thermal(0.5);  // vacuum
    CHECK(overlap(vac, vac) == doctest::Approx(1.0).epsilon(DERIVED_TOL));
    CHECK(overlap(RadialFunction::fock(1), vac) == doctest::Approx(0.0).epsilon(DERIVED_TOL));
    for (double c : {0.7, 2.0}) {
        const RadialFunction th = RadialFunction::thermal(c);
        CHECK(overlap(th, th) == doctest::Approx(1.0 / (2.0 * c)).epsilon(DERIVED_TOL));
    }
}

TEST_CASE("overlap is symmetric") {
    const RadialFunction a = RadialFunction::thermal(0.8);
    const RadialFunction b = RadialFunction::fock(3);
    CHECK(std::abs(overlap(a, b) - overlap(b, a)) <= 1e-10);
}

TEST_CASE("overlap rejects unnormalized input unless disabled") {
    Support s;
    s.lo = 0.0;
    s.hi = 1.0;
    const RadialFunction junk = RadialFunction::custom([](double) { return 1.0; }, s);
    const RadialFunction vac = RadialFunction::thermal(0.5);
    CHECK_THROWS_AS(overlap(junk, vac), NormalizationViolation);
    OverlapOptions opts;
    opts.check_normalization = false;
    CHECK_NOTHROW(overlap(junk, vac, opts));
}

TEST_CASE("Fock states n <= 10: normalization, purity, covariance, orthonormality") {
    std::vector<RadialFunction> fock;
    for (int n = 0; n <= 10; ++n) fock.push_back(RadialFunction::fock(n));

    OverlapOptions fast;
    fast.check_normalization = false;

    for (int n = 0; n <= 10; ++n) {
        CHECK(normalization(fock[n]) == doctest::Approx(1.0).epsilon(DERIVED_TOL));
        CHECK(purity(fock[n], fast) == doctest::Approx(1.0).epsilon(DERIVED_TOL));
        const CovarianceMatrix cov = covariance_of(fock[n]);
        CHECK(cov.g_xx == doctest::Approx(2.0 * n + 1.0).epsilon(DERIVED_TOL));
    }
    for (int n = 0; n <= 10; ++n)
        for (int m = n + 1; m <= 10; ++m)
            CHECK(std::abs(overlap(fock[n], fock[m], fast)) <= DERIVED_TOL);
}

TEST_CASE("Fock Wigner values at the origin alternate in sign") {
    CHECK(RadialFunction::fock(0)(0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
    CHECK(RadialFunction::fock(1)(0.0) == doctest::Approx(-1.0 / M_PI).epsilon(1e-14));
    CHECK(overlap(RadialFunction::fock(3), RadialFunction::fock(3)) ==
          doctest::Approx(1.0).epsilon(DERIVED_TOL));
}

TEST_CASE("gaussian_reference and non_gaussianity formula") {
    CHECK(gaussian_reference(CovarianceMatrix::identity()).purity() == doctest::Approx(1.0));
    CHECK(gaussian_reference(CovarianceMatrix::isotropic(2.0)).purity() ==
          doctest::Approx(0.5));
    CHECK(gaussian_reference(CovarianceMatrix{4.0, 0.0, 1.0}).purity() ==
          doctest::Approx(0.5));
    CHECK_THROWS_AS(gaussian_reference(CovarianceMatrix{-1.0, 0.0, 1.0}),
                    NotPositiveDefinite);

    CHECK(non_gaussianity(0.5, 0.5, 0.5) == doctest::Approx(0.0));
    CHECK(non_gaussianity(1.0, 1.0, 1.0) == doctest::Approx(0.0));
    CHECK(non_gaussianity(0.5, 0.5, 0.4) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("non-Gaussianity vanishes for thermal states against their reference") {
    for (double c : {0.5, 1.0, 5.0}) {
        const RadialFunction th = RadialFunction::thermal(c);
        const double mu = purity(th);
        const GaussianState ref = gaussian_reference(covariance_of(th));
        const double mu_g = ref.purity();
        const double ov = overlap(th, RadialFunction::thermal(ref.thermal_c()));
        CHECK(non_gaussianity(mu, mu_g, ov) == doctest::Approx(0.0).epsilon(DERIVED_TOL));
    }
}

TEST_CASE("williamson_1mode: identity, squeezed, correlated") {
    auto check_posts = [](const CovarianceMatrix& cov) {
        const ThermalForm tf = williamson_1mode(cov);
        CHECK(std::abs(tf.s.det() - 1.0) <= 1e-12);
        const CovarianceMatrix reduced = cov.transformed_by(tf.s);
        const double nu = std::sqrt(cov.det());
        CHECK(std::abs(reduced.g_xx - nu) <= 1e-12 * std::max(1.0, nu));
        CHECK(std::abs(reduced.g_pp - nu) <= 1e-12 * std::max(1.0, nu));
        CHECK(std::abs(reduced.g_xp) <= 1e-12 * std::max(1.0, nu));
        CHECK(tf.c == doctest::Approx(0.5 * nu).epsilon(1e-14));
    };

    check_posts(CovarianceMatrix::identity());
    check_posts(CovarianceMatrix{4.0, 0.0, 1.0});
    check_posts(CovarianceMatrix{2.0, 0.5, 2.0});

    const ThermalForm id = williamson_1mode(CovarianceMatrix::identity());
    CHECK(id.c == doctest::Approx(0.5));
    const ThermalForm sq = williamson_1mode(CovarianceMatrix{4.0, 0.0, 1.0});
    CHECK(sq.c == doctest::Approx(1.0));
    const ThermalForm corr = williamson_1mode(CovarianceMatrix{2.0, 0.5, 2.0});
    CHECK(corr.c == doctest::Approx(0.5 * std::sqrt(3.75)).epsilon(1e-14));
}

TEST_CASE("coherent mixture: degenerate case, covariance, split limit") {
    // d = 0 degenerates to the vacuum
    const PlanarFunction w0 = coherent_mixture_wigner(0.0);
    CHECK(w0(0.3, -0.4) ==
          doctest::Approx(std::exp(-0.25) / M_PI).epsilon(1e-14));
    CHECK(normalization(w0) == doctest::Approx(1.0).epsilon(DERIVED_TOL));

    const PlanarFunction w1 = coherent_mixture_wigner(1.0);
    const CovarianceMatrix cov = covariance_of(w1);
    CHECK(cov.g_xx == doctest::Approx(3.0).epsilon(DERIVED_TOL));
    CHECK(cov.g_pp == doctest::Approx(1.0).epsilon(DERIVED_TOL));
    CHECK(std::abs(cov.g_xp) <= DERIVED_TOL);

    // far-separated branches: equal mixture of orthogonal states
    CHECK(purity(coherent_mixture_wigner(6.0)) == doctest::Approx(0.5).epsilon(DERIVED_TOL));
}

TEST_CASE("coherent mixture purity matches the closed form (1 + e^{-2d^2})/2") {
    for (double d : {0.5, 1.0, 2.0}) {
        CHECK(purity(coherent_mixture_wigner(d)) ==
              doctest::Approx(0.5 * (1.0 + std::exp(-2.0 * d * d))).epsilon(DERIVED_TOL));
    }
}

TEST_CASE("radial fast path agrees with the planar path") {
    const RadialFunction th = RadialFunction::thermal(0.7);
    const RadialFunction f2 = RadialFunction::fock(2);
    const double fast = overlap(th, f2);
    const double slow = overlap(to_planar(th), to_planar(f2));
    CHECK(std::abs(fast - slow) <= 1e-8);

    const double pf = purity(th);
    const double ps = purity(to_planar(th));
    CHECK(std::abs(pf - ps) <= 1e-8);
}

TEST_CASE("purity, overlap and delta are invariant under symplectic reduction") {
    const PlanarFunction w = coherent_mixture_wigner(1.0);
    const CovarianceMatrix cov = covariance_of(w);
    const GaussianState ref = gaussian_reference(cov);
    const ThermalForm tf = williamson_1mode(cov);

    const PlanarFunction w_red = w.transformed_by(tf.s);
    const GaussianState ref_red = gaussian_reference(cov.transformed_by(tf.s));

    const double mu = purity(w);
    const double mu_red = purity(w_red);
    CHECK(std::abs(mu - mu_red) <= 1e-8);

    const double ov = overlap(w, wigner_of(ref));
    const double ov_red = overlap(w_red, wigner_of(ref_red));
    CHECK(std::abs(ov - ov_red) <= 1e-8);

    const double delta = non_gaussianity(mu, ref.purity(), ov);
    const double delta_red = non_gaussianity(mu_red, ref_red.purity(), ov_red);
    CHECK(std::abs(delta - delta_red) <= 1e-8);

    // after reduction the reference is thermal: its radial form must agree
    const RadialFunction th = RadialFunction::thermal(tf.c);
    const double ov_rad = overlap(th, w_red);
    CHECK(std::abs(ov_red - ov_rad) <= 1e-8);
}

TEST_CASE("sampled radial functions: validation and zero outside support") {
    CHECK_THROWS_AS(RadialFunction::sampled({0.0, 1.0, 0.5, 2.0}, {1, 1, 1, 1}), Error);
    CHECK_THROWS_AS(RadialFunction::sampled({0.0, 1.0, 2.0}, {1, 1, 1}), Error);
    CHECK_THROWS_AS(RadialFunction::sampled({-0.5, 1.0, 2.0, 3.0}, {1, 1, 1, 1}), Error);

    const RadialFunction w =
        RadialFunction::sampled({0.0, 1.0, 2.0, 3.0}, {0.5, 0.4, 0.3, 0.2});
    CHECK(w(1.0) == doctest::Approx(0.4));
    CHECK(w(5.0) == 0.0);   // outside support
    CHECK(w(-1.0) == 0.0);  // r < 0
}

TEST_CASE("sampled copy of a thermal state reproduces its integrals") {
    const double c = 1.0;
    const RadialFunction th = RadialFunction::thermal(c);
    std::vector<double> r, w;
    for (int i = 0; i <= 800; ++i) {
        r.push_back(i * 0.05);  // up to r = 40: truncated tail mass ~ e^{-20}
        w.push_back(th(r.back()));
    }
    const RadialFunction s = RadialFunction::sampled(r, w);
    CHECK(normalization(s) == doctest::Approx(1.0).epsilon(1e-6));
    OverlapOptions loose;
    loose.check_normalization = false;
    CHECK(purity(s, loose) == doctest::Approx(0.5).epsilon(1e-6));
}
