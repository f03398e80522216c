#include "wigner/ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

void check_normalized(double norm, const char* what) {
    if (std::abs(norm - 1.0) > NORMALIZATION_TOL) {
        std::ostringstream msg;
        msg << what << " is not normalized: pi-integral = " << norm << " (|dev| = "
            << std::abs(norm - 1.0) << " > " << NORMALIZATION_TOL << ")";
        throw NormalizationViolation(msg.str());
    }
}

double effective_bulk(const Support& s) {
    if (s.finite()) return s.hi;
    return s.bulk_range > 0.0 ? s.bulk_range : s.lo + 45.0 * s.decay_scale;
}

/// Integration domain and options for a product of two radial functions.
struct ProductDomain {
    Support support;
    QuadOptions opts;
    bool empty = false;
};

ProductDomain product_domain(const RadialFunction& a, const RadialFunction& b, double rel_tol) {
    ProductDomain d;
    d.support.lo = std::max(a.support().lo, b.support().lo);
    d.support.hi = std::min(a.support().hi, b.support().hi);
    if (d.support.hi <= d.support.lo) {
        d.empty = true;
        return d;
    }
    if (!d.support.finite()) {
        const double da = a.support().decay_scale, db = b.support().decay_scale;
        d.support.decay_scale = 1.0 / (1.0 / da + 1.0 / db);
        d.support.bulk_range =
            std::max(effective_bulk(a.support()), effective_bulk(b.support()));
    }
    d.opts.rel_tol = rel_tol;
    d.opts.initial_panels = std::max(a.min_panels(), b.min_panels());
    d.opts.breakpoints = a.breakpoints();
    d.opts.breakpoints.insert(d.opts.breakpoints.end(), b.breakpoints().begin(),
                              b.breakpoints().end());
    return d;
}

Box product_box(const PlanarFunction& a, const PlanarFunction& b) {
    const Box inter = Box::intersection(a.box(), b.box());
    if (inter.x_hi > inter.x_lo && inter.p_hi > inter.p_lo) return inter;
    return Box::hull(a.box(), b.box());
}

}  // namespace

double normalization(const RadialFunction& w, double rel_tol) {
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    opts.initial_panels = w.min_panels();
    opts.breakpoints = w.breakpoints();
    return M_PI * integrate_radial([&w](double r) { return w(r); }, w.support(), opts);
}

double normalization(const PlanarFunction& w, double rel_tol) {
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    return integrate_planar_grown([&w](double x, double p) { return w(x, p); }, w.box(), opts);
}

double overlap(const RadialFunction& w, const RadialFunction& w2, const OverlapOptions& opts) {
    if (opts.check_normalization) {
        check_normalized(normalization(w, opts.rel_tol), "first radial argument");
        check_normalized(normalization(w2, opts.rel_tol), "second radial argument");
    }
    ProductDomain d = product_domain(w, w2, opts.rel_tol);
    if (d.empty) return 0.0;
    return 2.0 * M_PI * M_PI *
           integrate_radial([&](double r) { return w(r) * w2(r); }, d.support, d.opts);
}

double overlap(const PlanarFunction& w, const PlanarFunction& w2, const OverlapOptions& opts) {
    if (opts.check_normalization) {
        check_normalized(normalization(w, opts.rel_tol), "first planar argument");
        check_normalized(normalization(w2, opts.rel_tol), "second planar argument");
    }
    QuadOptions q;
    q.rel_tol = opts.rel_tol;
    return 2.0 * M_PI *
           integrate_planar_grown([&](double x, double p) { return w(x, p) * w2(x, p); },
                                  product_box(w, w2), q);
}

double overlap(const RadialFunction& w, const PlanarFunction& w2, const OverlapOptions& opts) {
    if (opts.check_normalization)
        check_normalized(normalization(w, opts.rel_tol), "radial argument");
    OverlapOptions rest = opts;
    rest.check_normalization = false;
    if (opts.check_normalization)
        check_normalized(normalization(w2, opts.rel_tol), "planar argument");
    return overlap(to_planar(w), w2, rest);
}

double overlap(const PlanarFunction& w, const RadialFunction& w2, const OverlapOptions& opts) {
    return overlap(w2, w, opts);
}

double purity(const RadialFunction& w, const OverlapOptions& opts) {
    if (opts.check_normalization)
        check_normalized(normalization(w, opts.rel_tol), "purity argument");
    OverlapOptions unchecked = opts;
    unchecked.check_normalization = false;
    return overlap(w, w, unchecked);
}

double purity(const PlanarFunction& w, const OverlapOptions& opts) {
    if (opts.check_normalization)
        check_normalized(normalization(w, opts.rel_tol), "purity argument");
    OverlapOptions unchecked = opts;
    unchecked.check_normalization = false;
    return overlap(w, w, unchecked);
}

CovarianceMatrix covariance_of(const RadialFunction& w, double rel_tol) {
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    opts.initial_panels = w.min_panels();
    opts.breakpoints = w.breakpoints();
    try {
        const double g =
            M_PI * integrate_radial([&w](double r) { return w(r) * r; }, w.support(), opts);
        return CovarianceMatrix::isotropic(g);
    } catch (const NonConvergence& e) {
        throw DivergentMoment(std::string("radial second moment: ") + e.what());
    }
}

CovarianceMatrix covariance_of(const PlanarFunction& w, double rel_tol) {
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    auto moment = [&](auto&& weight) {
        return integrate_planar_grown(
            [&](double x, double p) { return weight(x, p) * w(x, p); }, w.box(), opts);
    };
    try {
        CovarianceMatrix cov;
        cov.g_xx = 2.0 * moment([](double x, double) { return x * x; });
        cov.g_pp = 2.0 * moment([](double, double p) { return p * p; });
        cov.g_xp = 2.0 * moment([](double x, double p) { return x * p; });
        return cov;
    } catch (const NonConvergence& e) {
        throw DivergentMoment(std::string("planar second moment: ") + e.what());
    }
}

}  // namespace wigner
