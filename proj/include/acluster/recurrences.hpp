#pragma once

#include <map>
#include <utility>

#include "acluster/seed.hpp"

namespace acluster {

inline constexpr Matrix3 kInitialH = {{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}};
inline constexpr Matrix3 kCyclicH = {{{0, -1, 2}, {1, 0, -1}, {-2, 1, 0}}};

int default_window();  // ACLUSTER_WINDOW, 20 if unset

using GVector = Vec3;
using DVector = Vec3;

// One expansion pipeline: every cluster variable, u_n, and coefficient of the
// walk expanded in a fixed reference cluster with principal tropical
// coefficients attached to the distinguished seed of that cluster.  Values are
// memoized; indices beyond the window cap are an error rather than a silent
// truncation.
class World {
public:
    static const World& initial();
    static const World& cyclic();
    static World make(Cluster ref, int window);  // standalone instance (tests)
    static World trivial(int window);            // rank-0 coefficients

    Cluster ref() const { return ref_; }
    int rank() const { return rank_; }
    int window() const { return window_; }
    const Matrix3& base_matrix() const { return baseH_; }
    Seed sigma1() const;

    const ClusterLaurent& x(int64_t m) const;
    const ClusterLaurent& u(int64_t n) const;
    const ClusterLaurent& w() const;
    const ClusterLaurent& z() const;

    // coefficient tuples along the walk; i in 1..3
    TropElement y(int i, int64_t m) const;
    TropElement ycyc(int i, int64_t m) const;

    TropElement gen(int i) const;  // i-th semifield generator (i in 1..3)

private:
    World(Cluster ref, int rank, int window);
    void ensure_y(int64_t m) const;
    const ClusterLaurent& compute_x(int64_t m) const;

    Cluster ref_;
    int rank_;
    int window_;
    Matrix3 baseH_;
    std::array<ClusterLaurent, 3> base_cluster_;  // expansions of x1,x2,x3 resp.
    std::array<TropElement, 3> sigma1_coeffs_;
    mutable std::map<int64_t, std::array<TropElement, 3>> ytab_;
    mutable std::map<int64_t, ClusterLaurent> xs_;
    mutable std::map<int64_t, ClusterLaurent> us_;
    mutable std::map<int64_t, ClusterLaurent> cs_;  // c_1 = w, c_2 = z
};

// tables of y_{i;m} and y^cyc_{i;m} for |m| <= window
struct CoeffTables {
    int64_t window;
    std::map<int64_t, std::array<TropElement, 3>> y;
    std::map<int64_t, std::array<TropElement, 3>> ycyc;
};
CoeffTables gen_y_families(const World& w, int window);

// F-polynomial and g-vector of a homogeneous principal-tropical expansion.
// Throws if the input is not homogeneous under the principal grading or the
// recovered F-polynomial lacks constant term 1 or has a negative coefficient.
std::pair<YCoeff, GVector> extract_F_g(const ClusterLaurent& v, const Matrix3& H);
std::pair<YCoeff, GVector> extract_F_g(const ClusterLaurent& v);  // H from v.ref()

GVector principal_degree(const Vec3& x_exp, const TropElement& y_monomial, const Matrix3& H);

// The index-reversing symmetry: swaps the outer cluster variables, inverts
// and reverses the coefficient generators, then renormalizes so the tropical
// sum of all coefficients is 1 again.  Maps x_{m+2} to x_{-m+2}.
ClusterLaurent reflect_expansion(const ClusterLaurent& v);

}  // namespace acluster
