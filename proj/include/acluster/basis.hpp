#pragma once

#include <vector>

#include "acluster/closed_forms.hpp"
#include "acluster/seed.hpp"

namespace acluster {

// A generator of the atomic basis: a cluster variable x_m, w, or z.
struct Var {
    enum class Kind { x, w, z };
    Kind kind = Kind::x;
    int64_t m = 0;

    static Var X(int64_t m) { return {Kind::x, m}; }
    static Var W() { return {Kind::w, 0}; }
    static Var Z() { return {Kind::z, 0}; }
    bool operator==(const Var&) const = default;
    auto operator<=>(const Var&) const = default;
    std::string str() const;
};

// An element of the atomic basis: 1, a cluster monomial (with a canonical
// seed label), u_n, or u_n w^k / u_n z^k with n, k >= 1.
struct BasisElement {
    enum class Tag { one, cluster_monomial, u_power, u_w, u_z };
    Tag tag = Tag::one;
    SeedLabel label{};  // cluster_monomial only
    Vec3 exps{0, 0, 0};
    int64_t n = 0, k = 0;

    static BasisElement One() { return {}; }
    static BasisElement UPower(int64_t n);
    static BasisElement UW(int64_t n, int64_t k);
    static BasisElement UZ(int64_t n, int64_t k);
    // canonicalizes the label; factors must fit in one cluster
    static BasisElement Monomial(const std::vector<std::pair<Var, int64_t>>& factors);

    // the variables of a label's ordered cluster
    static std::array<Var, 3> cluster_vars(const SeedLabel& label);
    std::vector<std::pair<Var, int64_t>> factors() const;
    bool divisible_by_initial() const;       // some factor x_1, x_2, x_3
    bool divisible_by_nonpositive() const;   // some factor x_m with m <= 0

    bool operator==(const BasisElement&) const = default;
    auto operator<=>(const BasisElement&) const = default;
    std::string str() const;
};

ClusterLaurent basis_to_laurent(const BasisElement& b, Cluster c);
// expansion in the third distinguished cluster {x0, z, x2}, generated through
// the index-shift symmetry from the cyclic pipeline
ClusterLaurent basis_to_laurent_z_cyclic(const BasisElement& b);

DVector d_of_basis(const BasisElement& b, Cluster c);
GVector g_of_basis(const BasisElement& b, Cluster c);

// the piecewise-linear bijection relating denominator vectors and g-vectors
GVector f_map(const DVector& d);
DVector f_inverse(const GVector& g);

// change of cluster for g-vectors (initial -> cyclic) and its inverse
GVector g_change_cluster(const GVector& g);
GVector g_change_cluster_inverse(const GVector& g);

// the unique basis element with the given denominator vector in the
// initial cluster; defined on all of Z^3
BasisElement decompose_d(const DVector& d);
// brute-force check: solves every admissible cone with labels inside the
// window and demands a unique answer
BasisElement decompose_d_oracle(const DVector& d, int64_t window);
BasisElement decompose_d_oracle(const DVector& d);  // window 4 + |d|_1

BasisElement g_inverse(const GVector& g, Cluster c);

struct WindowParams {
    int64_t label_window = 5;   // |m| of cluster-monomial labels
    int64_t max_exp_sum = 3;    // total degree of cluster monomials
    int64_t max_n = 5;
    int64_t max_k = 3;
    bool include_one = true;
};
std::vector<BasisElement> enumerate_basis(const WindowParams& p);

}  // namespace acluster
