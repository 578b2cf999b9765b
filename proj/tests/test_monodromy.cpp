#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polylog/monodromy.hpp"

using namespace polylog;

namespace {

constexpr cplx I2PI{0.0, 2.0 * std::numbers::pi};

Vec vecn(std::initializer_list<cplx> vals) {
    Vec v(static_cast<int>(vals.size()));
    int i = 0;
    for (cplx z : vals) v[i++] = z;
    return v;
}

}  // namespace

TEST_CASE("window transform") {
    Vec x = vecn({0.3, 0.4});
    Vec y = y_transform(x, 0);
    REQUIRE(y.size() == 1);
    CHECK(std::abs(y[0] - cplx(0.88 / 0.7)) < 1e-15);

    CHECK(y_transform(x, 1).size() == 0);
    CHECK_THROWS_AS(y_transform(vecn({1.0, 0.4}), 0), singular_error);
}

TEST_CASE("zero-winding loop gives zero monodromy") {
    EvalConfig cfg;
    Vec x = vecn({0.35, 0.45});
    PathSpec p = line_path(Vec::Zero(2), x, true);
    // out to a waypoint and straight back: contractible
    Vec w = vecn({cplx(0.5, 0.2), cplx(0.3, -0.1)});
    PathSpec q = compose(line_path(x, w), line_path(w, x));
    CHECK(std::abs(monodromy_delta(build_multilog_integrand(2), p, q, cfg)) < 1e-9);
}

TEST_CASE("explicit monodromy at depth 2, trailing component") {
    // loop winding {x2 = 1} once: branch shifts by -2 pi i L_1(x1), and
    // L_1(0.3) = -log(0.7)
    EvalConfig cfg;
    Vec x = vecn({0.3, 0.4});
    auto res = check_explicit(2, 1, x, cfg);
    CHECK(res.certified);
    CHECK(std::abs(res.predicted - I2PI * std::log(0.7)) < 1e-12);
    CHECK(res.abs_err < 1e-4);
    CHECK(std::abs(res.observed - I2PI * std::log(0.7)) < 1e-4);
}

TEST_CASE("explicit monodromy at depth 2, full product component") {
    EvalConfig cfg;
    Vec x = vecn({cplx(-0.5, 0.2), cplx(0.45, -0.1)});
    auto res = check_explicit(2, 0, x, cfg);
    CHECK(res.certified);
    CHECK(res.abs_err < 1e-4);
}

TEST_CASE("trivial monodromy around coordinate hyperplanes and interior products") {
    EvalConfig cfg;

    // depth 2 multiple logarithm
    Vec x2 = vecn({0.3, 0.4});
    for (auto comp : {DivisorComponent::coord_zero(0), DivisorComponent::coord_zero(1)}) {
        auto res = check_trivial(build_multilog_integrand(2), comp, x2, cfg);
        CHECK(res.certified);
        CHECK(res.abs_err < 1e-7);
    }
    // {x1 = 1} with i < n
    auto r11 = check_trivial(build_multilog_integrand(2), DivisorComponent::product_one(0, 0),
                             vecn({cplx(0.3, 0.15), cplx(0.45, -0.2)}), cfg);
    CHECK(r11.certified);
    CHECK(r11.abs_err < 1e-7);

    // a general-weight word sum around a coordinate hyperplane
    auto rz = check_trivial(build_integrand(Bounds({1, 2})), DivisorComponent::coord_zero(1),
                            vecn({cplx(0.35, 0.1), cplx(0.4, -0.1)}), cfg);
    CHECK(rz.certified);
    CHECK(rz.abs_err < 1e-7);
}

TEST_CASE("F window values") {
    EvalConfig cfg;
    Vec x = vecn({cplx(-0.45, 0.15), cplx(0.4, -0.1)});
    CHECK(F_eval(0, 0, x, cfg) == cplx(1.0));
    CHECK(F_eval(1, 1, x, cfg) == cplx(1.0));

    // F over the whole window is the reduced multilog of the transformed point
    cplx f = F_eval(0, 1, x, cfg);
    Vec y = y_transform(x, 0);
    CHECK(std::abs(f - eval_at(Bounds({1}), y, cfg)) < 1e-12);
}

TEST_CASE("F relations at depth 2") {
    EvalConfig cfg;
    Vec x = vecn({cplx(-0.45, 0.15), cplx(0.4, -0.1)});

    auto r0 = check_F_relation(2, FFamily::AroundCoordZero, 0, x, cfg);
    CHECK(r0.certified);
    CHECK(std::abs(r0.predicted - (-I2PI)) < 1e-12);
    CHECK(r0.abs_err < 1e-4);

    auto r1 = check_F_relation(2, FFamily::AroundLeadingProduct, 0, x, cfg);
    CHECK(r1.certified);
    CHECK(std::abs(r1.predicted - I2PI) < 1e-12);
    CHECK(r1.abs_err < 1e-4);

    auto r2 = check_F_relation(2, FFamily::AroundTrailingProduct, 1, x, cfg);
    CHECK(r2.certified);
    CHECK(std::abs(r2.predicted - (-I2PI)) < 1e-12);
    CHECK(r2.abs_err < 1e-4);
}

TEST_CASE("conjugation invariance of the branch change") {
    EvalConfig cfg;
    Vec x = vecn({0.3, 0.4});
    Integrand I = build_multilog_integrand(2);
    PathSpec p = line_path(Vec::Zero(2), x, true);
    PathSpec q = plan_loop(DivisorComponent::product_one(1, 1), x, +1);

    // conjugate the loop by an excursion g: delta over g q g^{-1} matches
    Vec w = vecn({cplx(0.38, 0.12), cplx(0.52, 0.05)});
    PathSpec g = line_path(x, w);
    PathSpec conj = compose(compose(g, plan_loop(DivisorComponent::product_one(1, 1), w, +1)),
                            inverse(g));
    cplx d1 = monodromy_delta(I, p, q, cfg);
    cplx d2 = monodromy_delta(I, p, conj, cfg);
    CHECK(std::abs(d1 - d2) < 1e-7);
}
