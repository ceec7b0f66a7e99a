#pragma once

#include <span>
#include <vector>

#include "acluster/basis.hpp"

namespace acluster {

// Newton polygon of an expansion: the extreme points of the support, which
// lies in the affine plane picked out by the Z-grading of the cluster.
struct LatticePolygon {
    std::vector<Vec3> vertices;  // extreme points only, sorted
    Vec3 plane_normal;           // grading weights of the expansion cluster
    int64_t plane_value = 0;     // common degree of the support
};

// extreme points of a coplanar point set (exact integer arithmetic)
std::vector<Vec3> extreme_points(std::span<const Vec3> pts);

// equality of convex hulls of two generator lists (any affine dimension <= 3)
bool same_hull(std::span<const Vec3> a, std::span<const Vec3> b);

// hull(support) == hull(gens) for a generator list drawn from the support:
// every generator must be a support point and every support point must lie
// in the generators' hull (cheap even for large supports)
bool hull_matches_support(std::span<const Vec3> support, std::span<const Vec3> gens);

LatticePolygon newton_polygon(const BasisElement& b, Cluster c);

// common degree of all monomials under the cluster's grading weights;
// throws on non-homogeneous input
int64_t grading_degree(const ClusterLaurent& v);

bool sign_coherent(std::span<const Vec3> vs);

// Linear-form certificate that an expansion consists of proper Laurent
// monomials only.  `strict` forms are negative on every support point;
// non-strict forms vanish somewhere, and the finitely many non-proper
// candidates on the zero set are excluded directly.
struct Certificate {
    Vec3 phi;
    bool strict = true;
    std::string note;
};
// throws if b is a cluster monomial in c or the certificate fails to verify
Certificate properness_certificate(const BasisElement& b, Cluster c);

// the distinguished proper Laurent monomial of u_n w^k (or u_n z^k) whose
// coefficient is a single semifield element, plus that coefficient
struct Witness {
    Vec3 monomial;
    TropElement coeff;
};
// cluster: initial (k = 0 only), cyclic (u_n w^k), z_cyclic (u_n z^k);
// verifies the monomial is absent from every other windowed basis element
Witness pos_indec_witness(int64_t n, int64_t k, Cluster c, const WindowParams& sweep);

struct PositivityReport {
    int64_t elements = 0;
    int64_t coefficients = 0;
    std::vector<std::string> failures;
};
PositivityReport positivity_sweep(int window);

}  // namespace acluster
