#include "acluster/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace acluster {

const char* cluster_name(Cluster c) {
    switch (c) {
        case Cluster::initial: return "initial";
        case Cluster::cyclic: return "cyclic";
        case Cluster::z_cyclic: return "z-cyclic";
        case Cluster::trivial: return "trivial";
    }
    return "?";
}

std::array<std::string, 3> cluster_var_names(Cluster c) {
    switch (c) {
        case Cluster::initial: return {"x1", "x2", "x3"};
        case Cluster::cyclic: return {"x1", "w", "x3"};
        case Cluster::z_cyclic: return {"x0", "z", "x2"};
        case Cluster::trivial: return {"x1", "x2", "x3"};
    }
    return {"s1", "s2", "s3"};
}

Vec3 cluster_grading_weights(Cluster c) {
    switch (c) {
        case Cluster::initial:
        case Cluster::trivial: return {1, -1, 1};
        case Cluster::cyclic: return {1, 2, 1};
        case Cluster::z_cyclic: return {-1, -2, -1};
    }
    return {0, 0, 0};
}

ClusterLaurent ClusterLaurent::monomial(Cluster ref, const Vec3& x, const YCoeff& c) {
    ClusterLaurent v(ref);
    if (!c.is_zero()) v.terms_[x] = c;
    return v;
}

ClusterLaurent ClusterLaurent::unit(Cluster ref, int i, int rank) {
    Vec3 x{0, 0, 0};
    x.at(i) = 1;
    return monomial(ref, x, YCoeff::one(rank));
}

ClusterLaurent ClusterLaurent::constant(Cluster ref, const YCoeff& c) {
    return monomial(ref, {0, 0, 0}, c);
}

YCoeff ClusterLaurent::coeff_at(const Vec3& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? YCoeff::zero() : it->second;
}

void ClusterLaurent::add_term(const Vec3& x, const YCoeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ClusterLaurent::check_ref(const ClusterLaurent& o) const {
    if (ref_ != o.ref_) throw std::invalid_argument("cluster mismatch");
}

ClusterLaurent ClusterLaurent::operator+(const ClusterLaurent& o) const {
    check_ref(o);
    ClusterLaurent r = *this;
    for (const auto& [x, c] : o.terms_) r.add_term(x, c);
    return r;
}

ClusterLaurent ClusterLaurent::operator-(const ClusterLaurent& o) const {
    check_ref(o);
    ClusterLaurent r = *this;
    for (const auto& [x, c] : o.terms_) r.add_term(x, -c);
    return r;
}

ClusterLaurent ClusterLaurent::operator*(const ClusterLaurent& o) const {
    check_ref(o);
    ClusterLaurent r(ref_);
    for (const auto& [x1, c1] : terms_)
        for (const auto& [x2, c2] : o.terms_) r.add_term(x1 + x2, c1 * c2);
    return r;
}

ClusterLaurent ClusterLaurent::operator*(const YCoeff& c) const {
    ClusterLaurent r(ref_);
    for (const auto& [x, c0] : terms_) r.add_term(x, c0 * c);
    return r;
}

ClusterLaurent ClusterLaurent::operator*(const TropElement& m) const {
    ClusterLaurent r(ref_);
    for (const auto& [x, c0] : terms_) r.terms_[x] = c0 * m;
    return r;
}

ClusterLaurent ClusterLaurent::operator-() const {
    ClusterLaurent r(ref_);
    for (const auto& [x, c0] : terms_) r.terms_[x] = -c0;
    return r;
}

ClusterLaurent ClusterLaurent::pow(int64_t k) const {
    if (k < 0) throw std::invalid_argument("negative power of a Laurent value");
    int rank = 0;
    if (!terms_.empty()) rank = terms_.begin()->second.terms().begin()->first.rank();
    ClusterLaurent r = constant(ref_, YCoeff::one(rank));
    for (int64_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

Vec3 ClusterLaurent::d_vector() const {
    if (terms_.empty()) throw std::invalid_argument("d-vector of zero is undefined");
    Vec3 mn = terms_.begin()->first;
    for (const auto& [x, c] : terms_)
        for (int i = 0; i < 3; ++i) mn[i] = std::min(mn[i], x[i]);
    return negate(mn);
}

YCoeff ClusterLaurent::at_unit() const {
    YCoeff r;
    for (const auto& [x, c] : terms_) r += c;
    return r;
}

std::string ClusterLaurent::str() const {
    if (terms_.empty()) return "0";
    auto names = cluster_var_names(ref_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < 3; ++i) {
            if (x[i] == 0) continue;
            os << "*" << names[i];
            if (x[i] != 1) os << "^" << x[i];
        }
        first = false;
    }
    return os.str();
}

ClusterLaurent laurent_mul(const ClusterLaurent& a, const ClusterLaurent& b) { return a * b; }

ClusterLaurent laurent_exact_div(const ClusterLaurent& num, const ClusterLaurent& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    if (num.is_zero()) return ClusterLaurent(num.ref());
    if (num.ref() != den.ref()) throw std::invalid_argument("cluster mismatch");

    auto min_shift = [](const ClusterLaurent& v) {
        Vec3 mn = v.terms().begin()->first;
        for (const auto& [x, c] : v.terms())
            for (int i = 0; i < 3; ++i) mn[i] = std::min(mn[i], x[i]);
        return mn;
    };
    Vec3 sn = min_shift(num), sd = min_shift(den);

    // work with polynomial supports; the quotient of the shifted operands is
    // again polynomial because componentwise minima are additive in a domain
    std::map<Vec3, YCoeff> r;
    for (const auto& [x, c] : num.terms()) r[x - sn] = c;
    std::map<Vec3, YCoeff> d;
    for (const auto& [x, c] : den.terms()) d[x - sd] = c;
    const auto& [xd, cd] = *d.rbegin();

    ClusterLaurent q(num.ref());
    while (!r.empty()) {
        const auto& [xr, cr] = *r.rbegin();
        Vec3 xq = xr - xd;
        if (xq[0] < 0 || xq[1] < 0 || xq[2] < 0) throw std::runtime_error("not divisible");
        auto cq = ycoeff_try_div(cr, cd);
        if (!cq) throw std::runtime_error("not divisible");
        q.add_term(xq, *cq);
        for (const auto& [x, c] : d) {
            Vec3 xx = xq + x;
            YCoeff nc = *cq * c;
            auto it = r.find(xx);
            if (it == r.end()) {
                nc = -nc;
                if (!nc.is_zero()) r.emplace(xx, nc);
            } else {
                it->second = it->second - nc;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    ClusterLaurent shifted(num.ref());
    Vec3 shift = sn - sd;
    for (const auto& [x, c] : q.terms()) shifted.add_term(x + shift, c);
    return shifted;
}

ClusterLaurent retag(const ClusterLaurent& v, Cluster to) {
    ClusterLaurent r(to);
    for (const auto& [x, c] : v.terms()) r.add_term(x, c);
    return r;
}

ClusterLaurent trop_normalize(const ClusterLaurent& v) {
    if (v.is_zero()) return v;
    std::optional<TropElement> norm;
    for (const auto& [x, c] : v.terms())
        for (const auto& [m, k] : c.terms()) norm = norm ? trop_oplus(*norm, m) : m;
    return v * norm->inverse();
}

}  // namespace acluster
