#pragma once

#include <vector>

#include "acluster/recurrences.hpp"

namespace acluster {

// Identifier of a basis generator for the closed-form evaluators.
struct Elem {
    enum class Kind { x, u, w, z };
    Kind kind = Kind::x;
    int64_t idx = 0;

    static Elem X(int64_t m) { return {Kind::x, m}; }
    static Elem U(int64_t n) { return {Kind::u, n}; }
    static Elem W() { return {Kind::w, 0}; }
    static Elem Z() { return {Kind::z, 0}; }
};

// Direct evaluation of the explicit Laurent-expansion formulas in the initial
// cluster with principal tropical coefficients.  Defined for every m; indices
// 1..3 return the cluster variables themselves, negative indices go through
// the reflection symmetry.
ClusterLaurent cf_x_initial(int64_t m);
ClusterLaurent cf_u_initial(int64_t n);

// The same in the cyclic cluster {x1, w, x3}.
ClusterLaurent cf_x_cyclic(int64_t m);
ClusterLaurent cf_u_cyclic(int64_t n);
ClusterLaurent cf_z_cyclic();

// Closed-form F-polynomials, g-vectors and denominator vectors.  The cluster
// argument selects between the initial and the cyclic cluster.
YCoeff cf_F(const Elem& e, Cluster c);
GVector cf_g(const Elem& e, Cluster c);
DVector cf_d(const Elem& e, Cluster c);

// Generator lists of the convex hulls of the F-polynomial supports
// (the sets E(b) and E^w(b)); valid for x_m with m >= 4 and u_n.
std::vector<Vec3> cf_F_support_hull(const Elem& e, Cluster c);

}  // namespace acluster
