#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "polylog/chen.hpp"

using namespace polylog;

namespace {

Vec vec1(cplx a) {
    Vec v(1);
    v << a;
    return v;
}

Vec vec2(cplx a, cplx b) {
    Vec v(2);
    v << a, b;
    return v;
}

// independent scalar oracle for the weight-2 value at 1/2
cplx li2_series(cplx z) {
    cplx s = 0.0, p = 1.0;
    for (int k = 1; k <= 200; ++k) {
        p *= z;
        s += p / static_cast<double>(k * k);
    }
    return s;
}

}  // namespace

TEST_CASE("empty word integrates to one") {
    TensorWord w{3, {}};
    PathSpec p = line_path(vec1(0.1), vec1(0.5));
    CHECK(iterated_integral(w, p) == cplx(3.0));
}

TEST_CASE("weight one and two closed forms from the origin") {
    EvalConfig cfg;
    PathSpec p = line_path(vec1(0.0), vec1(0.5), true);

    TensorWord li1{1, {w_one_minus_frac(0, 0)}};
    CHECK(std::abs(iterated_integral(li1, p, cfg) - std::log(2.0)) < 1e-10);

    TensorWord li2{1, {w_one_minus_frac(0, 0), dlog_coord(0, 0)}};
    cplx got = iterated_integral(li2, p, cfg);
    CHECK(std::abs(got - li2_series(0.5)) < 1e-9);
    // pinned digits
    CHECK(std::abs(got - cplx(0.5822405264650125)) < 1e-9);
}

TEST_CASE("start offset fallback still works, less accurately") {
    EvalConfig cfg;
    cfg.start_offset = 1e-8;
    PathSpec p = line_path(vec1(0.0), vec1(0.5), true);
    TensorWord li2{1, {w_one_minus_frac(0, 0), dlog_coord(0, 0)}};
    CHECK(std::abs(iterated_integral(li2, p, cfg) - li2_series(0.5)) < 1e-5);
}

TEST_CASE("composition rule") {
    EvalConfig cfg;
    PathSpec p = line_path(vec1(0.1), vec1({0.3, 0.15}));
    PathSpec q = line_path(vec1({0.3, 0.15}), vec1(0.6));

    Integrand one{Bounds({1}), {{1, {w_one_minus_frac(0, 0)}}}};
    CHECK(composition_residual(one, p, q, cfg) < 1e-10);

    Integrand li2{Bounds({2}), {{1, {w_one_minus_frac(0, 0), dlog_coord(0, 0)}}}};
    CHECK(composition_residual(li2, p, q, cfg) < 1e-8);

    // constant second path: every strict suffix integral vanishes
    PathSpec stay = line_path(vec1(0.6), vec1(0.6));
    CHECK(composition_residual(li2, compose(p, q), stay, cfg) < 1e-10);
}

TEST_CASE("inversion rule") {
    EvalConfig cfg;
    PathSpec p = polyline_path({vec1(0.1), vec1({0.4, 0.2}), vec1(0.55)});

    Integrand one{Bounds({1}), {{1, {w_one_minus_frac(0, 0)}}}};
    CHECK(inversion_residual(one, p, cfg) < 1e-10);

    Integrand two{Bounds({1, 1}),
                  {{1, {w_one_minus_frac(0, 0) - dlog_coord(0, 0), w_one_minus_frac(0, 0)}}}};
    CHECK(inversion_residual(two, p, cfg) < 1e-8);

    // p p^{-1} annihilates a single letter
    TensorWord w{1, {w_one_minus_frac(0, 0)}};
    CHECK(std::abs(iterated_integral(w, compose(p, inverse(p)), cfg)) < 1e-10);
}

TEST_CASE("shuffle combinatorics and the product rule") {
    auto s = shuffle({w_one_minus_frac(0, 0)}, {dlog_coord(0, 0)});
    CHECK(s.size() == 2);
    CHECK(shuffle({w_one_minus_frac(0, 0), dlog_coord(0, 0)}, {dlog_one_minus(0, 0)}).size() == 3);

    EvalConfig cfg;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(0.15, 0.5);
    for (int i = 0; i < 5; ++i) {
        PathSpec p = polyline_path({vec2(d(rng), d(rng)), vec2({d(rng), 0.1}, d(rng)),
                                    vec2(d(rng), {d(rng), -0.1})});
        std::vector<OneForm> A{w_one_minus_frac(0, 1), dlog_coord(1, 1)};
        std::vector<OneForm> B{w_one_minus_frac(1, 1)};
        CHECK(shuffle_residual(A, B, p, cfg) < 1e-8);
    }
}

TEST_CASE("reparameterization invariance") {
    EvalConfig cfg;
    PathSpec p = polyline_path({vec2(0.0, 0.0), vec2(0.25, {0.3, 0.1}), vec2(0.4, 0.45)}, true);
    Integrand I{Bounds({1, 1}),
                {{1, {w_one_minus_frac(1, 1), w_one_minus_frac(0, 0)}},
                 {1, {w_one_minus_frac(0, 1), w_one_minus_frac(1, 1)}},
                 {1, {w_one_minus_frac(0, 1), w_pole_frac(0, 0)}}}};
    cplx a = iterated_integral(I, p, cfg);
    cplx b = iterated_integral(I, subdivided(p, 3), cfg);
    CHECK(std::abs(a - b) < 1e-9);

    EvalConfig dense = cfg;
    dense.initial_steps_per_segment *= 2;
    CHECK(std::abs(a - iterated_integral(I, p, dense)) < 1e-9);
}

TEST_CASE("linearity in words") {
    // identical fixed grids: accept the first refinement unconditionally
    EvalConfig cfg;
    cfg.rel_tol = std::numeric_limits<double>::infinity();
    PathSpec p = line_path(vec1(0.1), vec1(0.6));
    TensorWord w1{1, {w_one_minus_frac(0, 0)}};
    TensorWord w2{1, {dlog_coord(0, 0)}};
    Integrand I{Bounds({1}), {{2, w1.letters}, {-3, w2.letters}}};
    cplx combo = iterated_integral(I, p, cfg);
    cplx parts = 2.0 * iterated_integral(w1, p, cfg) - 3.0 * iterated_integral(w2, p, cfg);
    CHECK(std::abs(combo - parts) < 1e-12);
}

TEST_CASE("error paths") {
    TensorWord li1{1, {w_one_minus_frac(0, 0)}};
    // path terminating on the singularity at x = 1
    CHECK_THROWS_AS(iterated_integral(li1, line_path(vec1(0.0), vec1(1.0), true)), path_error);

    EvalConfig never;
    never.max_refinements = 0;
    CHECK_THROWS_AS(iterated_integral(li1, line_path(vec1(0.0), vec1(0.5), true), never),
                    convergence_error);
}
