#pragma once

#include <map>
#include <string>

#include "acluster/trop.hpp"
#include "acluster/types.hpp"

namespace acluster {

// Reference cluster a Laurent expansion is written in.  Arithmetic between
// values referring to different clusters is rejected.
enum class Cluster { initial, cyclic, z_cyclic, trivial };

const char* cluster_name(Cluster c);
// variable names of the reference cluster, e.g. {"x1","w","x3"}
std::array<std::string, 3> cluster_var_names(Cluster c);
// Z-grading weights of the reference cluster variables (lemma-of-grading:
// odd x's weigh 1, even x's -1, w 2, z -2)
Vec3 cluster_grading_weights(Cluster c);

// Sparse Laurent polynomial in the three variables of a reference cluster,
// with coefficients in ZP.  Keys iterate in lexicographic order, which fixes
// the serialization.
class ClusterLaurent {
public:
    explicit ClusterLaurent(Cluster ref) : ref_(ref) {}
    static ClusterLaurent monomial(Cluster ref, const Vec3& x, const YCoeff& c);
    static ClusterLaurent unit(Cluster ref, int i, int rank);  // the i-th cluster variable
    static ClusterLaurent constant(Cluster ref, const YCoeff& c);

    Cluster ref() const { return ref_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Vec3, YCoeff>& terms() const { return terms_; }
    YCoeff coeff_at(const Vec3& x) const;

    void add_term(const Vec3& x, const YCoeff& c);

    ClusterLaurent operator+(const ClusterLaurent& o) const;
    ClusterLaurent operator-(const ClusterLaurent& o) const;
    ClusterLaurent operator*(const ClusterLaurent& o) const;
    ClusterLaurent operator*(const YCoeff& c) const;
    ClusterLaurent operator*(const TropElement& m) const;
    ClusterLaurent operator-() const;
    ClusterLaurent pow(int64_t k) const;

    bool operator==(const ClusterLaurent& o) const { return ref_ == o.ref_ && terms_ == o.terms_; }
    bool operator!=(const ClusterLaurent& o) const { return !(*this == o); }

    // exponents of the monomial denominator: componentwise -min
    Vec3 d_vector() const;
    // substitute 1 for all three cluster variables
    YCoeff at_unit() const;

    std::string str() const;

private:
    void check_ref(const ClusterLaurent& o) const;
    Cluster ref_;
    std::map<Vec3, YCoeff> terms_;
};

ClusterLaurent laurent_mul(const ClusterLaurent& a, const ClusterLaurent& b);
// exact division; throws std::runtime_error("not divisible") on remainder
ClusterLaurent laurent_exact_div(const ClusterLaurent& num, const ClusterLaurent& den);

// reinterpret an expansion in one reference cluster as one in another
// (positional relabeling of variables and coefficient generators)
ClusterLaurent retag(const ClusterLaurent& v, Cluster to);

// rescale by a tropical monomial so the oplus of all coefficient monomials
// is 1 (the canonical form of an expansion with principal tropical
// coefficients)
ClusterLaurent trop_normalize(const ClusterLaurent& v);

}  // namespace acluster
