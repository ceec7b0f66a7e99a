#pragma once

#include <map>
#include <optional>
#include <string>

#include "acluster/basis.hpp"

namespace acluster {

// named min-oplus on coefficient monomials (componentwise minimum)
inline TropElement min_oplus(const TropElement& a, const TropElement& b) { return trop_oplus(a, b); }

inline TropElement trop_of(const Vec3& v) { return TropElement({v[0], v[1], v[2]}); }

// straightening coefficients over Trop(y1,y2,y3), principal at Sigma_1
TropElement xi(int64_t m);
TropElement zeta_minus(int64_t n, int64_t m);
TropElement zeta_plus(int64_t n, int64_t m);
TropElement gamma1(int64_t k);
TropElement gamma2(int64_t k);
std::optional<TropElement> gamma3(int64_t k);  // vanishes for odd k
TropElement eta_minus(int64_t m, int64_t m1);
TropElement eta_plus(int64_t m, int64_t m1);

// finite ZP-linear combination of basis elements
struct BasisCombo {
    std::map<BasisElement, YCoeff> terms;

    void add(const BasisElement& b, const YCoeff& c);
    BasisCombo operator+(const BasisCombo& o) const;
    BasisCombo operator*(const YCoeff& c) const;
    BasisCombo operator*(const TropElement& m) const;
    bool operator==(const BasisCombo& o) const { return terms == o.terms; }
    std::string str() const;
};

// Gamma_i(n) = sum_{k=0..n} (floor(k/2)+1) gamma_i(k) u_{n-k}, with the
// k = n term contributing to One
BasisCombo Gamma(int i, int64_t n);

// straightening relation for a minimal non-basis product of two basis
// generators; throws "not a straightening case" otherwise
BasisCombo straighten_pair(const BasisElement& a, const BasisElement& b);

// monomial in the generators u_n, x_m, w, z
struct GenMonomial {
    std::map<int64_t, int64_t> u;  // n -> exponent
    std::map<int64_t, int64_t> x;  // m -> exponent
    int64_t w = 0, z = 0;

    static GenMonomial parse(const std::string& text);
    bool operator<(const GenMonomial& o) const;
    bool empty() const { return u.empty() && x.empty() && w == 0 && z == 0; }
    std::optional<BasisElement> classify() const;  // the element of B it equals, if any
    std::string str() const;
};

Vec3 multi_degree(const GenMonomial& M);

// expansion into the basis by repeated straightening, guided by the
// lexicographic descent of the multi-degree
BasisCombo expand_rewrite(const GenMonomial& M);

// expansion by leading-term elimination against the <=_H order on the
// support of a Laurent value in the initial cluster
BasisCombo expand_eliminate(const ClusterLaurent& v);

ClusterLaurent combo_to_laurent(const BasisCombo& combo, Cluster c);

}  // namespace acluster
