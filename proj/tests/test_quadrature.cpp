#include <doctest.h>

#include <cmath>

#include "wigner/errors.hpp"
#include "wigner/quadrature.hpp"

using namespace wigner;

TEST_CASE("finite intervals: elementary integrals") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return x * x; }, -1.0, 3.0) ==
          doctest::Approx(28.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite supports with matched decay scale") {
    Support s;  // decay scale 1
    CHECK(integrate_radial([](double r) { return std::exp(-r); }, s) ==
          doctest::Approx(1.0).epsilon(1e-11));
    // Gamma(2) = 1
    CHECK(integrate_radial([](double r) { return r * std::exp(-r); }, s) ==
          doctest::Approx(1.0).epsilon(1e-11));
    // decay hint deliberately loose (true scale 1/3): still converges
    Support loose;
    loose.decay_scale = 2.0;
    CHECK(integrate_radial([](double r) { return std::exp(-3.0 * r); }, loose) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("finite support field is honored") {
    Support s;
    s.lo = 0.0;
    s.hi = 2.0;
    CHECK(integrate_radial([](double) { return 1.0; }, s) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand with forced pre-split") {
    // int_0^20 sin(40 r) dr = (1 - cos(800)) / 40
    QuadOptions opts;
    opts.initial_panels = 64;
    const double got = integrate([](double r) { return std::sin(40.0 * r); }, 0.0, 20.0, opts);
    const double want = (1.0 - std::cos(800.0)) / 40.0;
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("non-convergence is reported, not silently returned") {
    // 1/sqrt(|x|) has an integrable singularity the panel budget cannot
    // resolve to 1e-10 relative accuracy.
    QuadOptions opts;
    opts.max_panels = 50;
    CHECK_THROWS_AS(
        integrate([](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); }, 0.0, 1.0,
                  opts),
        NonConvergence);
}

TEST_CASE("breakpoints pin panel edges at kinks") {
    QuadOptions opts;
    opts.breakpoints = {1.0};
    const double got =
        integrate([](double x) { return x < 1.0 ? x : 2.0 - x; }, 0.0, 2.0, opts);
    CHECK(got == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("planar integral of a unit Gaussian") {
    const double got = integrate_planar_grown(
        [](double x, double p) { return std::exp(-(x * x + p * p)) / M_PI; },
        Box{-5.0, 5.0, -5.0, 5.0});
    CHECK(got == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("planar box growth recovers mass outside a too-small declared box") {
    const double got = integrate_planar_grown(
        [](double x, double p) { return std::exp(-(x * x + p * p)) / M_PI; },
        Box{-1.5, 1.5, -1.5, 1.5});
    CHECK(got == doctest::Approx(1.0).epsilon(1e-9));
}
