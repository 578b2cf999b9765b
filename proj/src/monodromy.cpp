#include "polylog/monodromy.hpp"

#include <cmath>
#include <numbers>

namespace polylog {

namespace {

constexpr cplx two_pi_i{0.0, 2.0 * std::numbers::pi};

cplx window_product(const Vec& x, int lo, int hi) {
    cplx p = 1.0;
    for (int t = lo; t <= hi; ++t) p *= x[t];
    return p;
}

/// (1 - x_a...x_{a+i+1}) / (1 - x_a...x_{a+i}), i = 0..b-a-1
Vec window_args(const Vec& x, int a, int b) {
    Vec y(b - a);
    for (int i = 0; i < b - a; ++i) {
        cplx denom = 1.0 - window_product(x, a, a + i);
        if (std::abs(denom) < 1e-12) throw singular_error("window transform: denominator vanishes");
        y[i] = (1.0 - window_product(x, a, a + i + 1)) / denom;
    }
    return y;
}

cplx multilog_at(int n, const Vec& args, const EvalConfig& cfg) {
    if (n == 0) return 1.0;
    return eval_at(Bounds(std::vector<int>(n, 1)), args, cfg);
}

}  // namespace

cplx monodromy_delta(const Integrand& I, const PathSpec& p, const PathSpec& q,
                     const EvalConfig& cfg) {
    return iterated_integral(I, compose(p, q), cfg) - iterated_integral(I, p, cfg);
}

Vec y_transform(const Vec& x, int s) {
    return window_args(x, s, static_cast<int>(x.size()) - 1);
}

cplx predicted_product_one_tail(int n, int s, const Vec& x, const EvalConfig& cfg) {
    cplx head = multilog_at(s, x.head(s), cfg);
    cplx tail = multilog_at(n - 1 - s, y_transform(x, s), cfg);
    return -two_pi_i * head * tail;
}

PathSpec plan_loop(const DivisorComponent& comp, const Vec& base, int sign,
                   const LoopOptions& lo) {
    if (comp.kind == DivisorComponent::Kind::CoordZero)
        return loop_around(comp, base, comp.j, sign, lo);
    std::string last_err;
    for (int c = comp.k; c >= comp.j; --c) {
        try {
            return loop_around(comp, base, c, sign, lo);
        } catch (const path_error& e) {
            last_err = e.what();
        }
    }
    throw path_error("plan_loop: no moving coordinate works for " + comp.label() + ": " +
                     last_err);
}

namespace {

MonodromyResult run_check(const Integrand& I, const DivisorComponent& comp, const Vec& x,
                          cplx predicted, const EvalConfig& cfg, const LoopOptions& lo) {
    MonodromyResult res;
    res.component = comp;
    res.predicted = predicted;

    PathSpec p = line_path(Vec::Zero(x.size()), x, /*start_exempt=*/true);
    PathSpec q = plan_loop(comp, x, +1, lo);

    res.winding = winding_numbers(q);
    auto comps = all_components(static_cast<int>(x.size()));
    res.certified = true;
    for (size_t i = 0; i < comps.size(); ++i)
        res.certified = res.certified && res.winding[i] == (comps[i] == comp ? 1 : 0);

    res.observed = monodromy_delta(I, p, q, cfg);
    res.abs_err = std::abs(res.observed - res.predicted);
    return res;
}

}  // namespace

MonodromyResult check_explicit(int n, int s, const Vec& x, const EvalConfig& cfg,
                               const LoopOptions& lo) {
    if (s < 0 || s >= n) throw error("check_explicit: s out of range");
    auto comp = DivisorComponent::product_one(s, n - 1);
    cplx predicted = predicted_product_one_tail(n, s, x, cfg);
    return run_check(build_multilog_integrand(n), comp, x, predicted, cfg, lo);
}

MonodromyResult check_trivial(const Integrand& I, const DivisorComponent& comp, const Vec& x,
                              const EvalConfig& cfg, const LoopOptions& lo) {
    return run_check(I, comp, x, 0.0, cfg, lo);
}

cplx F_eval(int a, int b, const Vec& x, const EvalConfig& cfg) {
    if (a > b) throw error("F_eval: window reversed");
    if (a == b) return 1.0;
    return multilog_at(b - a, window_args(x, a, b), cfg);
}

PathSpec map_path(const PathSpec& p, const std::function<Vec(const Vec&)>& fn, double max_chord,
                  int max_depth) {
    std::vector<Vec> pts;
    for (const auto& seg : p.segments) {
        auto rec = [&](auto&& self, double t0, double t1, const Vec& y0, const Vec& y1,
                       int depth) -> void {
            double tm = 0.5 * (t0 + t1);
            Vec ym = fn(segment_point(seg, tm));
            double chord = (y1 - y0).norm();
            double bend = (ym - 0.5 * (y0 + y1)).norm();
            if (depth < max_depth && (chord > max_chord || bend > 0.05 * std::max(1.0, chord))) {
                self(self, t0, tm, y0, ym, depth + 1);
                self(self, tm, t1, ym, y1, depth + 1);
                return;
            }
            pts.push_back(y1);
        };
        Vec y0 = fn(segment_point(seg, 0.0));
        Vec y1 = fn(segment_point(seg, 1.0));
        if (pts.empty()) pts.push_back(y0);
        rec(rec, 0.0, 1.0, y0, y1, 0);
    }
    // drop numerically repeated vertices, snap closed curves closed
    std::vector<Vec> clean;
    clean.push_back(pts.front());
    for (size_t i = 1; i < pts.size(); ++i)
        if ((pts[i] - clean.back()).norm() > 1e-13) clean.push_back(pts[i]);
    if ((clean.front() - clean.back()).norm() < 1e-9) clean.back() = clean.front();
    return polyline_path(clean);
}

MonodromyResult check_F_relation(int n, FFamily family, int j, const Vec& x,
                                 const EvalConfig& cfg, const LoopOptions& lo) {
    if (n < 2) throw error("check_F_relation: depth must be at least 2");
    DivisorComponent comp = DivisorComponent::coord_zero(0);
    cplx predicted = 0.0;
    switch (family) {
        case FFamily::AroundCoordZero: {
            if (j < 0 || j >= n - 1) throw error("check_F_relation: j out of range");
            comp = DivisorComponent::coord_zero(j);
            cplx sum = 0.0;
            for (int s = j; s <= n - 2; ++s) sum += F_eval(0, s, x, cfg) * F_eval(s + 1, n - 1, x, cfg);
            predicted = -two_pi_i * sum;
            break;
        }
        case FFamily::AroundLeadingProduct: {
            if (j < 0 || j >= n - 1) throw error("check_F_relation: j out of range");
            comp = DivisorComponent::product_one(0, j);
            predicted = two_pi_i * F_eval(0, j, x, cfg) * F_eval(j + 1, n - 1, x, cfg);
            break;
        }
        case FFamily::AroundTrailingProduct: {
            if (j < 1 || j > n - 1) throw error("check_F_relation: j out of range");
            comp = DivisorComponent::product_one(j, n - 1);
            predicted = -two_pi_i * F_eval(0, j - 1, x, cfg) * F_eval(j, n - 1, x, cfg);
            break;
        }
    }

    MonodromyResult res;
    res.component = comp;
    res.predicted = predicted;

    PathSpec q = plan_loop(comp, x, +1, lo);
    res.winding = winding_numbers(q);
    auto comps = all_components(n);
    res.certified = true;
    for (size_t i = 0; i < comps.size(); ++i)
        res.certified = res.certified && res.winding[i] == (comps[i] == comp ? 1 : 0);

    auto window = [&](const Vec& pt) { return window_args(pt, 0, n - 1); };
    PathSpec image_loop = map_path(q, window);
    Vec y_base = window(x);
    PathSpec base_path = line_path(Vec::Zero(n - 1), y_base, /*start_exempt=*/true);

    Integrand I = build_multilog_integrand(n - 1);
    res.observed = monodromy_delta(I, base_path, image_loop, cfg);
    res.abs_err = std::abs(res.observed - res.predicted);
    return res;
}

}  // namespace polylog
