#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acluster/trop.hpp"
#include "test_util.hpp"

using namespace acluster;
using namespace acluster::testutil;

TEST_CASE("trop_oplus is the componentwise minimum") {
    CHECK(trop_oplus(ymono(1, 0, 0), ymono(0, 0, 0)) == ymono(0, 0, 0));  // y1 + 1 -> 1
    CHECK(trop_oplus(ymono(1, 2, 0), ymono(0, 1, 1)) == ymono(0, 1, 0));
    TropElement a = ymono(-2, 5, 1);
    CHECK(trop_oplus(a, a) == a);
    CHECK_THROWS_AS(trop_oplus(a, TropElement(std::vector<int64_t>{1, 2})), std::invalid_argument);
}

TEST_CASE("tropical semifield laws hold on random elements") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        TropElement a = random_trop(rng), b = random_trop(rng), c = random_trop(rng);
        CHECK(trop_oplus(a, b) == trop_oplus(b, a));
        CHECK(trop_oplus(trop_oplus(a, b), c) == trop_oplus(a, trop_oplus(b, c)));
        CHECK(trop_oplus(a, a) == a);
        CHECK(a * trop_oplus(b, c) == trop_oplus(a * b, a * c));
        CHECK(a * a.inverse() == TropElement::one(3));
    }
}

TEST_CASE("trivial semifield is the rank-0 case") {
    TropElement one;
    CHECK(one.rank() == 0);
    CHECK(trop_oplus(one, one) == one);
    CHECK(one * one == one);
}

TEST_CASE("YCoeff ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 120; ++i) {
        YCoeff a = random_ycoeff(rng), b = random_ycoeff(rng), c = random_ycoeff(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("tropical evaluation of a subtraction-free polynomial") {
    // z1 + 1 evaluated in Trop(y1, y2) is 1
    YCoeff f = YCoeff(1, TropElement(std::vector<int64_t>{1, 0})) +
               YCoeff(1, TropElement::one(2));
    CHECK(f.eval_trop() == TropElement::one(2));

    YCoeff g = yc(1, {1, 1, 1}) + yc(1, {1, 1, 0}) + yc(1, {1, 0, 0}) + yc(1, {0, 0, 0});
    CHECK(g.eval_trop() == TropElement::one(3));

    // F_z^w at the inverted generators: the pinned counterexample value
    YCoeff fzw = yc(1, {1, 2, 1}) + yc(1, {1, 1, 1}) + yc(1, {1, 1, 0}) + yc(1, {0, 1, 0}) +
                 yc(1, {0, 0, 0});
    std::array<TropElement, 3> inv{y1().inverse(), y2().inverse(), y3().inverse()};
    CHECK(fzw.eval_trop_at(inv) == ymono(-1, -2, -1));

    YCoeff bad = yc(1, {1, 0, 0}) + yc(-1, {0, 0, 0});
    CHECK_THROWS_AS(bad.eval_trop(), std::invalid_argument);
}

TEST_CASE("evaluation is multiplicative") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        YCoeff a = random_ycoeff(rng, 5, true), b = random_ycoeff(rng, 5, true);
        CHECK((a * b).eval_trop() == a.eval_trop() * b.eval_trop());
    }
}

TEST_CASE("exact division in ZP") {
    std::mt19937 rng(17);
    int done = 0;
    for (int i = 0; i < 300 && done < 120; ++i) {
        YCoeff a = random_ycoeff(rng), b = random_ycoeff(rng);
        if (a.is_zero() || b.is_zero()) continue;
        auto q = ycoeff_try_div(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        ++done;
    }
    // 1 is not divisible by y1 + 1
    YCoeff one = YCoeff::one(3);
    CHECK(!ycoeff_try_div(one, yc(1, {1, 0, 0}) + one).has_value());
}
