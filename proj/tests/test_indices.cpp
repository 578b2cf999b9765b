#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "polylog/indices.hpp"

using namespace polylog;

namespace {

MultiIndex mi(std::vector<int> c, std::vector<int> m) { return {std::move(c), Bounds(std::move(m))}; }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long multinomial(const Bounds& b) {
    long r = factorial(b.weight());
    for (int m : b.m) r /= factorial(m);
    return r;
}

// all indices of a family, by odometer
std::vector<MultiIndex> all_indices(const Bounds& b) {
    std::vector<MultiIndex> out;
    std::vector<int> c(b.depth(), 0);
    while (true) {
        out.emplace_back(c, b);
        int t = b.depth() - 1;
        while (t >= 0 && c[t] == b.m[t]) c[t--] = 0;
        if (t < 0) break;
        ++c[t];
    }
    return out;
}

}  // namespace

TEST_CASE("weight and depth") {
    CHECK(weight(mi({0, 0, 0}, {1, 2, 1})) == 0);
    CHECK(weight(mi({1, 0, 1}, {1, 2, 1})) == 2);
    CHECK(weight(MultiIndex::top(Bounds({1, 2, 1}))) == 4);

    CHECK(depth(mi({0, 0, 0}, {1, 2, 1})) == 0);
    CHECK(depth(mi({0, 2, 0}, {1, 2, 1})) == 1);
    CHECK(depth(mi({1, 1, 0}, {1, 2, 1})) == 2);
}

TEST_CASE("complete ordering chain") {
    Bounds b({1, 2, 1});
    auto lt = [&](std::vector<int> i, std::vector<int> j) {
        return complete_cmp(mi(i, b.m), mi(j, b.m)) == Ordering::LT;
    };
    CHECK(lt({0, 0, 1}, {1, 0, 1}));
    CHECK(lt({1, 0, 1}, {1, 1, 0}));
    CHECK(lt({1, 1, 0}, {0, 2, 0}));
    CHECK(complete_cmp(mi({1, 0, 1}, b.m), mi({1, 0, 1}, b.m)) == Ordering::EQ);
}

TEST_CASE("complete ordering is total on S(1,2,1) and S_4") {
    for (Bounds b : {Bounds({1, 2, 1}), Bounds({1, 1, 1, 1})}) {
        auto idx = all_indices(b);
        for (const auto& i : idx)
            for (const auto& j : idx) {
                auto ij = complete_cmp(i, j);
                auto ji = complete_cmp(j, i);
                if (ij == Ordering::EQ) {
                    CHECK(i == j);
                    CHECK(ji == Ordering::EQ);
                } else {
                    CHECK(ij != ji);  // antisymmetry
                }
                for (const auto& k : idx)  // transitivity
                    if (ij == Ordering::LT && complete_cmp(j, k) == Ordering::LT)
                        CHECK(complete_cmp(i, k) == Ordering::LT);
            }
    }
}

TEST_CASE("partial order and its relation to the complete order") {
    Bounds b({1, 1, 1, 1});
    CHECK(partial_leq(mi({0, 0, 1, 0}, b.m), mi({0, 1, 1, 0}, b.m)));
    CHECK(!partial_leq(mi({1, 0, 0, 0}, b.m), mi({0, 1, 1, 0}, b.m)));
    CHECK(partial_leq(mi({0, 1, 1, 0}, b.m), mi({0, 1, 1, 0}, b.m)));

    // j < i in the partial order forces j < i in the complete order
    for (Bounds bb : {Bounds({1, 2, 1}), Bounds({1, 1, 1, 1})}) {
        auto idx = all_indices(bb);
        for (const auto& i : idx)
            for (const auto& j : idx)
                if (partial_leq(j, i))
                    CHECK(complete_cmp(j, i) != Ordering::GT);
    }
    // converse fails: comparable in the complete order, incomparable partially
    CHECK(complete_cmp(mi({1, 0, 0, 0}, b.m), mi({0, 1, 1, 0}, b.m)) == Ordering::LT);
}

TEST_CASE("retraction") {
    auto r = retract(mi({0, 2, 0, 1, 0}, {1, 2, 1, 1, 1}), mi({0, 1, 0, 0, 0}, {1, 2, 1, 1, 1}));
    CHECK(r.components() == std::vector<int>{1, 0});
    CHECK(r.bounds().m == std::vector<int>{2, 1});

    auto i = mi({0, 2, 0, 1, 0}, {1, 2, 1, 1, 1});
    auto top = retract(i, i);
    CHECK(top.components() == std::vector<int>{2, 1});
    CHECK(weight(top) == top.bounds().weight());

    auto z = retract(i, MultiIndex::zero(i.bounds()));
    CHECK(weight(z) == 0);

    CHECK_THROWS_AS(retract(mi({0, 1}, {1, 1}), mi({1, 0}, {1, 1})), error);
}

TEST_CASE("retraction is a bijection below i") {
    for (Bounds b : {Bounds({1, 2, 1}), Bounds({2, 3}), Bounds({1, 1, 1, 1, 1})}) {
        for (const auto& i : all_indices(b)) {
            if (depth(i) == 0) continue;
            std::set<std::vector<int>> images;
            long below = 0;
            for (const auto& j : all_indices(b)) {
                if (!partial_leq(j, i)) continue;
                ++below;
                images.insert(retract(i, j).components());
            }
            long target_size = 1;
            for (int t = 0; t < i.size(); ++t)
                if (i[t] != 0) target_size *= i[t] + 1;
            CHECK(below == target_size);
            CHECK(static_cast<long>(images.size()) == target_size);
        }
    }
}

TEST_CASE("unit steps") {
    Bounds b({1, 1});
    CHECK(add_unit(MultiIndex::zero(b), 0).components() == std::vector<int>{1, 0});
    CHECK(add_unit(mi({1, 0}, b.m), 1).components() == std::vector<int>{1, 1});
    CHECK_THROWS_AS(add_unit(mi({1, 1}, b.m), 0), error);
    CHECK(sub_unit(mi({1, 1}, b.m), 1).components() == std::vector<int>{1, 0});
    CHECK_THROWS_AS(sub_unit(mi({0, 1}, b.m), 0), error);
}

TEST_CASE("v index") {
    CHECK(v_index(Bounds({1, 1}), 0).components() == std::vector<int>{0, 1});
    CHECK(v_index(Bounds({1, 2, 1}), 1).components() == std::vector<int>{1, 0, 1});
    CHECK(v_index(Bounds({1, 1, 1}), 2).components() == std::vector<int>{1, 1, 0});
}

TEST_CASE("queue enumeration") {
    auto qs = enumerate_queues(Bounds({1, 1}));
    REQUIRE(qs.size() == 2);
    // lexicographic on increment positions: (0,1) then (1,0)
    CHECK(qs[0].entry(0).components() == std::vector<int>{1, 0});
    CHECK(qs[0].entry(1).components() == std::vector<int>{1, 1});
    CHECK(qs[1].entry(0).components() == std::vector<int>{0, 1});
    CHECK(qs[1].entry(1).components() == std::vector<int>{1, 1});

    CHECK(enumerate_queues(Bounds({1})).size() == 1);

    for (Bounds b : {Bounds({1, 1, 1}), Bounds({2, 2}), Bounds({1, 2, 1}), Bounds({3, 2}),
                     Bounds({1, 1, 1, 1}), Bounds({2, 1, 2}), Bounds({1, 1, 1, 1, 1, 1})}) {
        auto queues = enumerate_queues(b);
        CHECK(static_cast<long>(queues.size()) == multinomial(b));
        for (const auto& q : queues) {
            CHECK(q.entry(q.length() - 1) == MultiIndex::top(b));
            MultiIndex prev = MultiIndex::zero(b);
            for (int r = 0; r < q.length(); ++r) {
                CHECK(weight(q.entry(r)) == r + 1);
                int diff_pos = -1, diffs = 0;
                for (int t = 0; t < b.depth(); ++t)
                    if (q.entry(r)[t] != prev[t]) {
                        ++diffs;
                        diff_pos = t;
                        CHECK(q.entry(r)[t] == prev[t] + 1);
                    }
                CHECK(diffs == 1);
                CHECK(diff_pos == q.step(r).s);
                CHECK(partial_leq(prev, q.entry(r)));
                prev = q.entry(r);
            }
        }
    }

    // n! queues in the all-ones case
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<long>(enumerate_queues(Bounds(std::vector<int>(n, 1))).size()) ==
              factorial(n));
}

TEST_CASE("transpositions") {
    Bounds b({1, 1});
    // queue ((0,1),(1,1)): second step increments position 0, next nonzero at 1
    IndexQueue q(b, {1, 0});
    Bounds pb = padded_bounds(b);
    MultiIndex i({1, 0}, pb);
    CHECK(q.transpose(i, 1, 0) == i);
    CHECK(q.transpose(i, 1, 1).components() == std::vector<int>{0, 1});

    // t_s = 2 at the step makes the transposition trivial
    Bounds b2({2, 1});
    IndexQueue q2(b2, {0, 0, 1});  // (1,0),(2,0),(2,1)
    CHECK(q2.step(1).t_s == 2);
    MultiIndex j({2, 1}, padded_bounds(b2));
    CHECK(q2.transpose(j, 1, 1) == j);

    // a past the end (no later nonzero component) is also trivial
    IndexQueue q3(b, {0, 1});  // (1,0),(1,1): step 1 has s=1, nothing after
    MultiIndex k({1, 0}, pb);
    CHECK(q3.transpose(k, 1, 1) == k);
}

TEST_CASE("position functions") {
    Bounds b({1, 1});
    IndexQueue q10(b, {0, 1});  // (1,0),(1,1)
    auto f = position_functions(q10);
    CHECK(f == std::vector<int>{0, 1});

    IndexQueue q01(b, {1, 0});  // (0,1),(1,1)
    CHECK(position_functions(q01) == std::vector<int>{0, 0});

    // rank of the increment among the nonzero slots, not the raw position:
    // queue (1,0,0),(1,0,1),(1,1,1) increments position 2 into slot rank 1
    IndexQueue q(Bounds({1, 1, 1}), {0, 2, 1});
    CHECK(position_functions(q) == std::vector<int>{0, 1, 1});

    CHECK_THROWS_AS(position_functions(IndexQueue(Bounds({2}), {0, 0})), error);
}
