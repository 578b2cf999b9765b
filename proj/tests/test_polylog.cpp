#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polylog/polylog.hpp"

using namespace polylog;

namespace {

Vec vecn(std::initializer_list<cplx> vals) {
    Vec v(static_cast<int>(vals.size()));
    int i = 0;
    for (cplx z : vals) v[i++] = z;
    return v;
}

PathSpec straight(const Vec& x) { return line_path(Vec::Zero(x.size()), x, true); }

}  // namespace

TEST_CASE("series basics") {
    // any vanishing coordinate kills every term
    CHECK(series_eval(Bounds({1, 2, 1}), vecn({0.3, 0.0, 0.5})) == cplx(0.0));
    CHECK(series_eval(Bounds({2}), vecn({0.0})) == cplx(0.0));

    // weight-2 value at one half against the closed form
    double pi = std::numbers::pi;
    cplx li2 = series_eval(Bounds({2}), vecn({0.5}));
    CHECK(std::abs(li2 - (pi * pi / 12 - 0.5 * std::log(2.0) * std::log(2.0))) < 1e-13);
    CHECK(std::abs(li2 - cplx(0.5822405265)) < 1e-9);

    // diagonal double-log identity: 2 L(x,x) + Li_2(x^2) = log^2(1-x)
    for (cplx x : {cplx(0.3), cplx(0.4, 0.2), cplx(-0.55, 0.1)}) {
        cplx lhs = 2.0 * series_eval(Bounds({1, 1}), vecn({x, x})) +
                   series_eval(Bounds({2}), vecn({x * x}));
        cplx rhs = std::pow(std::log(1.0 - x), 2);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    CHECK_THROWS_AS(series_eval(Bounds({2}), vecn({0.97})), error);
}

TEST_CASE("hyperlogarithm basics") {
    EvalConfig cfg;
    // depth 1: F_1(1/x | 1) = log(1 - x)
    cplx x = 0.4;
    cplx f1 = hyperlog_eval({1.0 / x}, 1.0, cfg);
    CHECK(std::abs(f1 - std::log(0.6)) < 1e-10);
    CHECK(std::abs(-f1 - series_eval(Bounds({1}), vecn({x}))) < 1e-8);

    CHECK(hyperlog_eval({2.5, 0.0}, 0.0, cfg) == cplx(0.0));
    CHECK_THROWS_AS(hyperlog_eval({0.0, 2.0}, 1.0, cfg), error);
}

TEST_CASE("hyperlogarithm route equals the series") {
    EvalConfig cfg;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> rad(0.1, 0.3), ang(0.0, 2 * std::numbers::pi);
    for (Bounds b : {Bounds({2}), Bounds({1, 1}), Bounds({2, 1}), Bounds({1, 2}), Bounds({4}),
                     Bounds({1, 1, 2})}) {
        const int n = b.depth();
        Vec p(n);
        for (int t = 0; t < n; ++t) p[t] = 0.5 + rad(rng) * std::polar(1.0, ang(rng));
        cplx s = series_eval(b, p);
        cplx h = hyperlog_via_identity(b, p, cfg);
        CHECK(std::abs(s - h) < 1e-6);
    }
    CHECK(hyperlog_via_identity(Bounds({2, 1}), vecn({0.0, 0.4}), cfg) == cplx(0.0));
}

TEST_CASE("continuation matches the series in the polydisk") {
    EvalConfig cfg;
    Vec x = vecn({0.3, 0.4});
    cplx c = continue_eval(Bounds({1, 1}), straight(x), cfg);
    CHECK(std::abs(c - series_eval(Bounds({1, 1}), x)) < 1e-8);

    CHECK(std::abs(continue_eval(Bounds({1}), straight(vecn({0.5})), cfg) - std::log(2.0)) <
          1e-9);

    cplx m = multilog_eval(2, straight(x), cfg);
    CHECK(std::abs(m - c) < 1e-10);

    Vec x3 = vecn({0.2, 0.3, 0.4});
    cplx c3 = multilog_eval(3, straight(x3), cfg);
    CHECK(std::abs(c3 - series_eval(Bounds({1, 1, 1}), x3)) < 1e-7);

    // deeper weight with a nontrivial m-vector
    Vec x2 = vecn({cplx(0.35, 0.1), cplx(0.4, -0.15)});
    CHECK(std::abs(continue_eval(Bounds({1, 2}), straight(x2), cfg) -
                   series_eval(Bounds({1, 2}), x2)) < 1e-7);
}

TEST_CASE("oracle triangle on the remaining low-weight families") {
    EvalConfig cfg;
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> rad(0.05, 0.3), ang(0.0, 2 * std::numbers::pi);
    for (Bounds b : {Bounds({4}), Bounds({2, 2}), Bounds({1, 3}), Bounds({3, 1}),
                     Bounds({1, 2, 1}), Bounds({2, 1, 1})}) {
        const int n = b.depth();
        Vec x(n);
        for (int t = 0; t < n; ++t) x[t] = 0.5 + rad(rng) * std::polar(1.0, ang(rng));
        cplx s = series_eval(b, x);
        cplx c = continue_eval(b, line_path(Vec::Zero(n), x, true), cfg);
        cplx h = hyperlog_via_identity(b, x, cfg);
        CHECK(std::abs(s - c) < 1e-6);
        CHECK(std::abs(s - h) < 1e-6);
    }
}

TEST_CASE("continuation requires a based exempt path") {
    CHECK_THROWS_AS(continue_eval(Bounds({1, 1}), line_path(vecn({0.1, 0.1}), vecn({0.3, 0.4})),
                                  EvalConfig{}),
                    path_error);
}

TEST_CASE("multiple logarithms vanish on the coordinate hyperplanes") {
    EvalConfig cfg;
    PathSpec p = compose(straight(vecn({0.4, 0.45})),
                         line_path(vecn({0.4, 0.45}), vecn({0.4, 0.0})));
    p.end_exempt = true;
    cplx v = multilog_eval(2, p, cfg);
    CHECK(std::abs(v) < 1e-6);
}

TEST_CASE("differential identities") {
    auto maxres = [](const Bounds& b, const Vec& x) {
        double m = 0.0;
        for (double r : differential_residuals(b, x)) m = std::max(m, r);
        return m;
    };
    CHECK(maxres(Bounds({2}), vecn({0.3})) < 1e-6);
    CHECK(maxres(Bounds({3}), vecn({cplx(0.4, 0.1)})) < 1e-6);
    CHECK(maxres(Bounds({1, 1}), vecn({0.2, 0.3})) < 1e-6);
    CHECK(maxres(Bounds({2, 1}), vecn({cplx(0.25, 0.1), cplx(0.3, -0.05)})) < 1e-6);
    CHECK(maxres(Bounds({1, 2}), vecn({0.35, 0.25})) < 1e-6);
    CHECK(maxres(Bounds({1, 1, 1}), vecn({0.2, 0.25, 0.3})) < 1e-6);
}

TEST_CASE("eval_at dispatch") {
    EvalConfig cfg;
    Vec x = vecn({0.3, 0.4});
    CHECK(std::abs(eval_at(Bounds({1, 1}), x, cfg) - series_eval(Bounds({1, 1}), x)) < 1e-10);
    // outside the series guard: continuation along the straight path
    Vec far = vecn({cplx(-1.3, 0.4)});
    cplx got = eval_at(Bounds({1}), far, cfg);
    CHECK(std::abs(got - (-std::log(cplx(1.0) - far[0]))) < 1e-8);
}
