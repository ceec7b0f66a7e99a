#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acluster/recurrences.hpp"
#include "test_util.hpp"

using namespace acluster;
using namespace acluster::testutil;

namespace {

ClusterLaurent constant(const YCoeff& c, Cluster ref = Cluster::initial) {
    return ClusterLaurent::constant(ref, c);
}

}  // namespace

TEST_CASE("initial cluster variables") {
    const World& W = World::initial();
    CHECK(W.x(2) == xmono({0, 1, 0}));
    // x4 = (x2 x3 + y1) / x1
    CHECK(W.x(4) == xmono({-1, 1, 1}) + ClusterLaurent::monomial(Cluster::initial, {-1, 0, 0}, yc(1, {1, 0, 0})));
    // x0 = (y3 x1 x2 + 1) / x3
    CHECK(W.x(0) == ClusterLaurent::monomial(Cluster::initial, {1, 1, -1}, yc(1, {0, 0, 1})) + xmono({0, 0, -1}));
}

TEST_CASE("w and z") {
    const World& W = World::initial();
    auto w = W.w();
    CHECK(w.coeff_at({1, -1, 0}) == yc(1, {0, 1, 0}));
    CHECK(w.coeff_at({0, -1, 1}) == YCoeff::one(3));
    CHECK(w.size() == 2);
    // z x1 x3 - y1 y3 x1 x2 - y1 - x2 x3 = 0
    ClusterLaurent z13 = W.z() * xmono({1, 0, 1});
    ClusterLaurent rhs = ClusterLaurent::monomial(Cluster::initial, {1, 1, 0}, yc(1, {1, 0, 1})) +
                         constant(yc(1, {1, 0, 0})) + xmono({0, 1, 1});
    CHECK(z13 == rhs);
}

TEST_CASE("u_n by its defining recurrence") {
    const World& W = World::initial();
    CHECK(W.u(0) == constant(YCoeff::one(3)));
    CHECK(W.u(1).d_vector() == Vec3{1, 1, 1});
    CHECK(W.u(1).coeff_at({1, 0, -1}) == yc(1, {1, 1, 1}));
    CHECK(W.u(2) == W.u(1) * W.u(1) - constant(yc(2, {1, 1, 1})));
    CHECK_THROWS_AS(W.u(-1), std::invalid_argument);
}

TEST_CASE("T-system holds across the window") {
    const World& W = World::initial();
    for (int64_t m = -8; m <= 8; ++m) {
        if (m >= 1 || m <= -3) {
            // principal relation: x_m x_{m+3} = x_{m+1} x_{m+2} + y^{d(x_{m+3})}
            Vec3 d = W.x(m + 3).d_vector();
            ClusterLaurent lhs = W.x(m) * W.x(m + 3);
            ClusterLaurent rhs = W.x(m + 1) * W.x(m + 2) + constant(YCoeff::from(ymono(d[0], d[1], d[2])));
            CHECK(lhs == rhs);
        }
    }
    // the three seam relations
    CHECK(W.x(0) * W.x(3) == ClusterLaurent::monomial(Cluster::initial, {1, 1, 0}, yc(1, {0, 0, 1})) + constant(YCoeff::one(3)));
    CHECK(W.x(-1) * W.x(2) == (W.x(0) * W.x(1)) * yc(1, {0, 1, 0}) + constant(YCoeff::one(3)));
    CHECK(W.x(-2) * W.x(1) == (W.x(-1) * W.x(0)) * yc(1, {1, 0, 0}) + constant(YCoeff::one(3)));
}

TEST_CASE("coefficient tables") {
    const World& W = World::initial();
    CHECK(W.y(1, 0) == y3().inverse());
    CHECK(W.y(1, 2) == y1() * y2());
    for (int64_t m = -8; m <= 8; ++m) {
        CHECK(W.y(3, m + 1) == W.y(1, m).inverse());
        // Y-system: y_{1;m} y_{1;m+3} (y_{1;m+1} + 1)(y_{1;m+2} + 1) = y_{1;m+1} y_{1;m+2}
        TropElement one = TropElement::one(3);
        TropElement lhs = W.y(1, m) * W.y(1, m + 3) * trop_oplus(W.y(1, m + 1), one) * trop_oplus(W.y(1, m + 2), one);
        CHECK(lhs == W.y(1, m + 1) * W.y(1, m + 2));
        // tropical solution: y_{1;m} = y^{d(x_{m+3})}
        Vec3 d = W.x(m + 3).d_vector();
        CHECK(W.y(1, m) == ymono(d[0], d[1], d[2]));
    }
}

TEST_CASE("principal relations for w, z and the gap-four products") {
    const World& W = World::initial();
    auto yd = [&](int64_t m) {
        Vec3 d = W.x(m).d_vector();
        return YCoeff(1, ymono(d[0], d[1], d[2]));
    };
    for (int64_t t = -4; t <= 4; ++t) {
        // w x_{2t} and z x_{2t+1}, the three sign regimes each
        ClusterLaurent wx = W.w() * W.x(2 * t);
        if (t >= 1) CHECK(wx == W.x(2 * t - 1) * yc(1, {0, 1, 0}) + W.x(2 * t + 1));
        else if (t == 0) CHECK(wx == W.x(-1) + W.x(1) * yc(1, {0, 0, 1}));
        else CHECK(wx == W.x(2 * t - 1) + W.x(2 * t + 1) * yc(1, {1, 0, 1}));
        ClusterLaurent zx = W.z() * W.x(2 * t + 1);
        if (t >= 1) CHECK(zx == W.x(2 * t) * yc(1, {1, 0, 1}) + W.x(2 * t + 2));
        else if (t == 0) CHECK(zx == W.x(0) * yc(1, {1, 0, 0}) + W.x(2));
        else CHECK(zx == W.x(2 * t) + W.x(2 * t + 2) * yc(1, {0, 1, 0}));
        // gap-four exchange through the cyclic clusters: the general form
        // holds everywhere, the bare form away from the seams
        TropElement cz = W.ycyc(1, 2 * t - 2);
        CHECK(W.x(2 * t - 2) * W.x(2 * t + 2) * trop_oplus(cz, TropElement::one(3)) ==
              W.x(2 * t) * W.x(2 * t) + W.z() * YCoeff::from(cz));
        if (t >= 2)
            CHECK(W.x(2 * t - 2) * W.x(2 * t + 2) == W.x(2 * t) * W.x(2 * t) + W.z() * yd(2 * t + 1));
        TropElement cw = W.ycyc(1, 2 * t - 1);
        CHECK(W.x(2 * t - 1) * W.x(2 * t + 3) * trop_oplus(cw, TropElement::one(3)) ==
              W.x(2 * t + 1) * W.x(2 * t + 1) + W.w() * YCoeff::from(cw));
        if (t >= 1)
            CHECK(W.x(2 * t - 1) * W.x(2 * t + 3) == W.x(2 * t + 1) * W.x(2 * t + 1) + W.w() * yd(2 * t + 2));
    }
}

TEST_CASE("c_1 equals c_3 so only w and z appear") {
    const World& W = World::initial();
    // c_3 = (y_{2;3} x3 + x5) / ((y_{2;3}+1) x4)
    TropElement y23 = W.y(2, 3);
    ClusterLaurent num = W.x(3) * y23 + W.x(5);
    ClusterLaurent c3 = laurent_exact_div(num, W.x(4) * trop_oplus(y23, TropElement::one(3)));
    CHECK(c3 == W.w());
}

TEST_CASE("extract_F_g") {
    const World& W = World::initial();
    auto [fu1, gu1] = extract_F_g(W.u(1));
    CHECK(fu1 == yc(1, {1, 1, 1}) + yc(1, {1, 1, 0}) + yc(1, {1, 0, 0}) + YCoeff::one(3));
    CHECK(gu1 == Vec3{-1, 0, 1});

    auto [f1, g1] = extract_F_g(W.x(1));
    CHECK(f1 == YCoeff::one(3));
    CHECK(g1 == Vec3{1, 0, 0});

    auto [fw, gw] = extract_F_g(W.w());
    CHECK(fw == yc(1, {0, 1, 0}) + YCoeff::one(3));
    CHECK(gw == Vec3{0, -1, 1});

    // non-homogeneous input is rejected
    CHECK_THROWS_AS(extract_F_g(W.x(1) + W.x(2)), std::invalid_argument);
}

TEST_CASE("every generated element is principally homogeneous") {
    const World& W = World::initial();
    for (int64_t m = -10; m <= 12; ++m) CHECK_NOTHROW(extract_F_g(W.x(m)));
    for (int64_t n = 0; n <= 6; ++n) CHECK_NOTHROW(extract_F_g(W.u(n)));
    const World& C = World::cyclic();
    for (int64_t m = -6; m <= 8; ++m) CHECK_NOTHROW(extract_F_g(C.x(m)));
    for (int64_t n = 1; n <= 5; ++n) CHECK_NOTHROW(extract_F_g(C.u(n)));
}

TEST_CASE("cyclic world") {
    const World& C = World::cyclic();
    CHECK(C.x(1) == ClusterLaurent::unit(Cluster::cyclic, 0, 3));
    CHECK(C.x(3) == ClusterLaurent::unit(Cluster::cyclic, 2, 3));
    CHECK(C.w() == ClusterLaurent::unit(Cluster::cyclic, 1, 3));
    // x2 = (x1 + yy2 x3) / w
    ClusterLaurent x2 = ClusterLaurent::monomial(Cluster::cyclic, {1, -1, 0}, YCoeff::one(3)) +
                        ClusterLaurent::monomial(Cluster::cyclic, {0, -1, 1}, yc(1, {0, 1, 0}));
    CHECK(C.x(2) == x2);
    // z = (yy1 yy2 yy3 x1^2 + yy1 yy2^2 yy3 x1 x3 + yy1 yy2 w + yy2 x3^2 + x1 x3) / (x1 w x3)
    ClusterLaurent z(Cluster::cyclic);
    z.add_term({1, -1, -1}, yc(1, {1, 1, 1}));
    z.add_term({0, -1, 0}, yc(1, {1, 2, 1}));
    z.add_term({-1, 0, -1}, yc(1, {1, 1, 0}));
    z.add_term({-1, -1, 1}, yc(1, {0, 1, 0}));
    z.add_term({0, -1, 0}, yc(1, {0, 0, 0}));
    CHECK(C.z() == z);
    // u_1 = (yy1 yy3 x1^2 + yy1 w + x3^2) / (x1 x3)
    ClusterLaurent u1(Cluster::cyclic);
    u1.add_term({1, 0, -1}, yc(1, {1, 0, 1}));
    u1.add_term({-1, 1, -1}, yc(1, {1, 0, 0}));
    u1.add_term({-1, 0, 1}, YCoeff::one(3));
    CHECK(C.u(1) == u1);
    // gen_x_cyclic(2) example: w x2 = x1 + yy2 x3
    CHECK(C.w() * C.x(2) == C.x(1) + C.x(3) * yc(1, {0, 1, 0}));
}

TEST_CASE("reflection symmetry") {
    const World& W = World::initial();
    for (int64_t m = -6; m <= 6; ++m) CHECK(reflect_expansion(W.x(m + 2)) == W.x(-m + 2));
    for (int64_t n = 0; n <= 5; ++n) CHECK(reflect_expansion(W.u(n)) == W.u(n));
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        // involution on normalized expansions
        ClusterLaurent v = W.x(rng() % 17 - 8);
        CHECK(reflect_expansion(reflect_expansion(v)) == v);
    }
    const World& C = World::cyclic();
    for (int64_t m = -4; m <= 4; ++m) CHECK(reflect_expansion(C.x(m + 2)) == C.x(-m + 2));
}

TEST_CASE("trivial semifield is the y -> 1 specialization of the principal world") {
    auto specialize = [](const ClusterLaurent& v) {
        ClusterLaurent r(Cluster::trivial);
        for (const auto& [x, c] : v.terms()) {
            int64_t total = 0;
            for (const auto& [mono, k] : c.terms()) total += k;
            if (total != 0) r.add_term(x, YCoeff(total, TropElement()));
        }
        return r;
    };
    const World& W = World::initial();
    World T = World::trivial(12);
    for (int64_t m = -8; m <= 10; ++m) CHECK(specialize(W.x(m)) == T.x(m));
    for (int64_t n = 0; n <= 6; ++n) CHECK(specialize(W.u(n)) == T.u(n));
    CHECK(specialize(W.w()) == T.w());
    CHECK(specialize(W.z()) == T.z());
}

TEST_CASE("window cap is a hard error") {
    World small = World::make(Cluster::initial, 5);
    CHECK_THROWS_AS(small.x(30), std::out_of_range);
    CHECK_THROWS_AS(small.u(30), std::out_of_range);
}
