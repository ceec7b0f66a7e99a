#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acluster/json_io.hpp"
#include "acluster/laurent.hpp"
#include "test_util.hpp"

using namespace acluster;
using namespace acluster::testutil;

TEST_CASE("multiplication of sparse Laurent values") {
    ClusterLaurent x1 = xmono({1, 0, 0});
    ClusterLaurent x1inv = xmono({-1, 0, 0});
    CHECK(x1 * x1inv == ClusterLaurent::constant(Cluster::initial, YCoeff::one(3)));

    ClusterLaurent v = xmono({0, 1, 1}) + ClusterLaurent::constant(Cluster::initial, yc(1, {1, 0, 0}));
    CHECK(v * ClusterLaurent::constant(Cluster::initial, YCoeff::one(3)) == v);

    ClusterLaurent x3 = xmono({0, 0, 1});
    CHECK((x1 + x3) * (x1 - x3) == xmono({2, 0, 0}) - xmono({0, 0, 2}));

    ClusterLaurent other(Cluster::cyclic);
    CHECK_THROWS_AS(v * other, std::invalid_argument);
}

TEST_CASE("exact division and its failure mode") {
    ClusterLaurent x1 = xmono({1, 0, 0}), x3 = xmono({0, 0, 1});
    ClusterLaurent num = xmono({0, 1, 1}) + ClusterLaurent::constant(Cluster::initial, yc(1, {1, 0, 0}));

    ClusterLaurent q = laurent_exact_div(num, x1);
    CHECK(q == xmono({-1, 1, 1}) + ClusterLaurent::monomial(Cluster::initial, {-1, 0, 0}, yc(1, {1, 0, 0})));

    CHECK(laurent_exact_div(xmono({2, 0, 0}) - xmono({0, 0, 2}), x1 + x3) == x1 - x3);

    ClusterLaurent den = xmono({0, 1, 0}) + ClusterLaurent::constant(Cluster::initial, YCoeff::one(3));
    CHECK_THROWS_WITH_AS(laurent_exact_div(num, den), "not divisible", std::runtime_error);
}

TEST_CASE("division undoes multiplication on random values") {
    std::mt19937 rng(23);
    int done = 0;
    for (int i = 0; i < 400 && done < 150; ++i) {
        ClusterLaurent a = random_laurent(rng), b = random_laurent(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(laurent_exact_div(a * b, b) == a);
        ++done;
    }
}

TEST_CASE("non-exact division always terminates with an error") {
    std::mt19937 rng(37);
    int attempted = 0;
    for (int i = 0; i < 500 && attempted < 200; ++i) {
        ClusterLaurent a = random_laurent(rng, Cluster::initial, 4);
        ClusterLaurent b = random_laurent(rng, Cluster::initial, 4);
        ClusterLaurent noise = random_laurent(rng, Cluster::initial, 2);
        if (b.is_zero()) continue;
        ClusterLaurent num = a * b + noise;
        ++attempted;
        try {
            ClusterLaurent q = laurent_exact_div(num, b);
            CHECK(q * b == num);  // exact whenever it succeeds
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "not divisible");
        }
    }
    CHECK(attempted == 200);
}

TEST_CASE("d-vector of a Laurent expansion") {
    // (x2 x3 + y1) / x1 written out
    ClusterLaurent v = xmono({-1, 1, 1}) + ClusterLaurent::monomial(Cluster::initial, {-1, 0, 0}, yc(1, {1, 0, 0}));
    CHECK(v.d_vector() == Vec3{1, 0, 0});
    CHECK(xmono({1, 0, 0}).d_vector() == Vec3{-1, 0, 0});
}

TEST_CASE("JSON round trip is bit-exact") {
    std::mt19937 rng(29);
    for (int i = 0; i < 60; ++i) {
        ClusterLaurent v = random_laurent(rng);
        Json j = laurent_to_json(v);
        ClusterLaurent back = laurent_from_json(j, Cluster::initial);
        CHECK(back == v);
        CHECK(laurent_to_json(back).dump() == j.dump());
    }
    // records are sorted lexicographically by (x, y)
    ClusterLaurent v = xmono({1, 0, 0}) + ClusterLaurent::monomial(Cluster::initial, {0, 1, 0}, yc(2, {0, 0, 1}) + yc(1, {0, 0, 0}));
    Json j = laurent_to_json(v);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["x"] == Json::array({0, 1, 0}));
    CHECK(j[0]["y"] == Json::array({0, 0, 0}));
    CHECK(j[1]["y"] == Json::array({0, 0, 1}));
    CHECK(j[2]["x"] == Json::array({1, 0, 0}));
}
