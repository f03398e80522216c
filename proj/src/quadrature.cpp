#include "wigner/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

constexpr int FINE_N = 32;  // fine rule: 33 Clenshaw-Curtis points (degree-32 exact)

// Clenshaw-Curtis nodes x_j = cos(j pi / N) and weights on [-1, 1].
// The N=16 rule is nested in the N=32 rule (every other node).
struct CcPair {
    double node[FINE_N + 1];
    double w_fine[FINE_N + 1];
    double w_coarse[FINE_N / 2 + 1];

    CcPair() {
        fill_weights(FINE_N, w_fine);
        fill_weights(FINE_N / 2, w_coarse);
        for (int j = 0; j <= FINE_N; ++j) node[j] = std::cos(j * M_PI / FINE_N);
        node[FINE_N / 2] = 0.0;  // exact midpoint
    }

    static void fill_weights(int n, double* w) {
        for (int j = 0; j <= n; ++j) {
            const double theta = j * M_PI / n;
            double s = 0.0;
            for (int k = 1; k <= n / 2; ++k) {
                const double bk = (k == n / 2) ? 0.5 : 1.0;
                s += bk * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
            }
            w[j] = (2.0 / n) * (1.0 - 2.0 * s);
        }
        w[0] *= 0.5;
        w[n] *= 0.5;
    }
};

const CcPair& cc() {
    static const CcPair rule;
    return rule;
}

struct PanelEstimate {
    double integral;  // fine-rule value
    double error;     // |fine - coarse|
    double l1;        // fine-rule value of |f|
};

PanelEstimate estimate_panel(const std::function<double(double)>& f, double a, double b) {
    const CcPair& rule = cc();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fine = 0.0, coarse = 0.0, l1 = 0.0;
    for (int j = 0; j <= FINE_N; ++j) {
        const double x = mid + half * rule.node[j];
        const double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "non-finite integrand value at r = " << x;
            throw NonConvergence(msg.str());
        }
        fine += rule.w_fine[j] * v;
        l1 += rule.w_fine[j] * std::abs(v);
        if (j % 2 == 0) coarse += rule.w_coarse[j / 2] * v;
    }
    return {fine * half, std::abs(fine - coarse) * half, l1 * half};
}

struct Panel {
    double a, b, integral, error, l1;
    bool splittable;
};

struct WorseError {
    bool operator()(const Panel& p, const Panel& q) const { return p.error < q.error; }
};

bool too_narrow(double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return (b - a) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

std::vector<double> build_edges(double a, double b, const QuadOptions& opts) {
    std::vector<double> edges;
    edges.push_back(a);
    for (double e : opts.breakpoints)
        if (e > a && e < b) edges.push_back(e);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (opts.initial_panels > 1) {
        std::vector<double> refined;
        const int per_segment =
            std::max(1, static_cast<int>(std::ceil(double(opts.initial_panels) /
                                                   double(edges.size() - 1))));
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            for (int k = 0; k < per_segment; ++k)
                refined.push_back(edges[i] + (edges[i + 1] - edges[i]) * k / per_segment);
        }
        refined.push_back(b);
        edges = std::move(refined);
    }
    return edges;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw Error("integrate: empty or reversed interval");
    }

    std::priority_queue<Panel, std::vector<Panel>, WorseError> heap;
    double total = 0.0, total_err = 0.0, total_l1 = 0.0;
    int n_panels = 0;

    auto push_panel = [&](double lo, double hi) {
        const PanelEstimate e = estimate_panel(f, lo, hi);
        heap.push(Panel{lo, hi, e.integral, e.error, e.l1, !too_narrow(lo, hi)});
        total += e.integral;
        total_err += e.error;
        total_l1 += e.l1;
        ++n_panels;
    };

    const std::vector<double> edges = build_edges(a, b, opts);
    for (size_t i = 0; i + 1 < edges.size(); ++i) push_panel(edges[i], edges[i + 1]);

    const double abs_floor = opts.abs_floor();
    while (true) {
        const double bound = std::max(abs_floor, opts.rel_tol * std::abs(total));
        if (total_err <= bound) break;
        if (heap.empty() || n_panels >= opts.max_panels) {
            std::ostringstream msg;
            msg << "quadrature did not converge: error " << total_err << " > bound " << bound
                << " after " << n_panels << " panels on [" << a << ", " << b << "]";
            throw NonConvergence(msg.str());
        }
        Panel worst = heap.top();
        heap.pop();
        if (!worst.splittable) {
            // Panel already at minimum width: its contribution and error stay
            // accounted for; once the heap drains the loop exits above.
            continue;
        }
        total -= worst.integral;
        total_err -= worst.error;
        total_l1 -= worst.l1;
        --n_panels;
        const double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
    }
    return total;
}

double integrate_radial(const std::function<double(double)>& f, const Support& support,
                        const QuadOptions& opts) {
    if (support.finite()) {
        if (support.hi <= support.lo) return 0.0;
        return integrate(f, support.lo, support.hi, opts);
    }
    const double scale = std::max(support.decay_scale, 1e-12);
    double bulk_hi = support.bulk_range > 0.0 ? support.bulk_range : support.lo + 45.0 * scale;
    bulk_hi = std::max(bulk_hi, support.lo + 10.0 * scale);

    const double bulk = integrate(f, support.lo, bulk_hi, opts);

    // Tail via r = bulk_hi - scale * ln(u), u in (0, 1]. An integrand that
    // decays at least as fast as e^{-r/scale} maps to a bounded function
    // with h(0) = 0; slower decay shows up as non-convergence, not as a
    // silently truncated tail.
    auto tail_integrand = [&](double u) -> double {
        if (u <= 0.0) return 0.0;
        const double r = bulk_hi - scale * std::log(u);
        return f(r) * scale / u;
    };
    QuadOptions tail_opts = opts;
    tail_opts.breakpoints.clear();
    tail_opts.initial_panels = 4;
    tail_opts.abs_tol = std::max(opts.abs_floor(), opts.rel_tol * std::abs(bulk));
    const double tail = integrate(tail_integrand, 0.0, 1.0, tail_opts);
    return bulk + tail;
}

double integrate_radial(const std::function<double(double)>& f, const Support& support,
                        double rel_tol) {
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    return integrate_radial(f, support, opts);
}

Box Box::scaled_about_center(double factor) const {
    const double cx = 0.5 * (x_lo + x_hi), cp = 0.5 * (p_lo + p_hi);
    const double hx = 0.5 * (x_hi - x_lo) * factor, hp = 0.5 * (p_hi - p_lo) * factor;
    return Box{cx - hx, cx + hx, cp - hp, cp + hp};
}

Box Box::intersection(const Box& a, const Box& b) {
    return Box{std::max(a.x_lo, b.x_lo), std::min(a.x_hi, b.x_hi), std::max(a.p_lo, b.p_lo),
               std::min(a.p_hi, b.p_hi)};
}

Box Box::hull(const Box& a, const Box& b) {
    return Box{std::min(a.x_lo, b.x_lo), std::max(a.x_hi, b.x_hi), std::min(a.p_lo, b.p_lo),
               std::max(a.p_hi, b.p_hi)};
}

double integrate_planar(const std::function<double(double, double)>& f, const Box& box,
                        const QuadOptions& opts) {
    if (box.x_hi <= box.x_lo || box.p_hi <= box.p_lo) return 0.0;
    QuadOptions inner = opts;
    inner.rel_tol = opts.rel_tol * 0.25;
    inner.abs_tol = opts.abs_floor() * 0.25 / (box.x_hi - box.x_lo);
    inner.initial_panels = 1;
    inner.max_panels = 1000;
    QuadOptions outer = opts;
    outer.initial_panels = std::max(opts.initial_panels, 4);
    auto slice = [&](double x) { return integrate([&](double p) { return f(x, p); },
                                                  box.p_lo, box.p_hi, inner); };
    return integrate(slice, box.x_lo, box.x_hi, outer);
}

double integrate_planar_grown(const std::function<double(double, double)>& f, const Box& box,
                              const QuadOptions& opts) {
    constexpr int MAX_GROWTH = 6;
    constexpr double GROWTH = 1.4;
    Box current = box;
    double value = integrate_planar(f, current, opts);
    for (int round = 0; round < MAX_GROWTH; ++round) {
        const Box bigger = current.scaled_about_center(GROWTH);
        const double next = integrate_planar(f, bigger, opts);
        const double bound = std::max(opts.abs_floor(), opts.rel_tol * std::abs(next));
        if (std::abs(next - value) <= bound) return next;
        current = bigger;
        value = next;
    }
    throw NonConvergence("planar integral: bounding-box growth cap reached before the tail "
                         "contribution fell below tolerance");
}

}  // namespace wigner
