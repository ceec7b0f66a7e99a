#include "acluster/recurrences.hpp"

#include <cstdlib>

namespace acluster {

int default_window() {
    const char* env = std::getenv("ACLUSTER_WINDOW");
    if (!env) return 20;
    int w = std::atoi(env);
    return w >= 1 ? w : 20;
}

World::World(Cluster ref, int rank, int window)
    : ref_(ref),
      rank_(rank),
      window_(window),
      baseH_(ref == Cluster::cyclic || ref == Cluster::z_cyclic ? kCyclicH : kInitialH),
      base_cluster_{ClusterLaurent(ref), ClusterLaurent(ref), ClusterLaurent(ref)},
      sigma1_coeffs_{TropElement::one(rank), TropElement::one(rank), TropElement::one(rank)} {
    if (ref_ == Cluster::cyclic) {
        // principal coefficients sit at the cyclic seed; Sigma_1 is its
        // direction-2 mutation, so x2 is an honest expression in {x1, w, x3}
        Seed base{kCyclicH,
                  {ClusterLaurent::unit(ref, 0, rank), ClusterLaurent::unit(ref, 1, rank),
                   ClusterLaurent::unit(ref, 2, rank)},
                  {TropElement::generator(rank, 0), TropElement::generator(rank, 1),
                   TropElement::generator(rank, 2)}};
        Seed s1 = mutate_cluster(base, 2);
        base_cluster_ = s1.cluster;
        sigma1_coeffs_ = s1.coeffs;
        cs_.emplace(1, base.cluster[1]);  // w is a unit monomial here
    } else {
        for (int i = 0; i < 3; ++i) {
            base_cluster_[i] = ClusterLaurent::unit(ref, i, rank);
            if (rank > 0) sigma1_coeffs_[i] = TropElement::generator(rank, i);
        }
    }
    ytab_[1] = sigma1_coeffs_;
    xs_.emplace(1, base_cluster_[0]);
    xs_.emplace(2, base_cluster_[1]);
    xs_.emplace(3, base_cluster_[2]);
}

const World& World::initial() {
    static World w(Cluster::initial, 3, default_window());
    return w;
}

const World& World::cyclic() {
    static World w(Cluster::cyclic, 3, default_window());
    return w;
}

World World::make(Cluster ref, int window) { return World(ref, 3, window); }

World World::trivial(int window) { return World(Cluster::trivial, 0, window); }

TropElement World::gen(int i) const {
    if (i < 1 || i > 3) throw std::invalid_argument("generator index out of range");
    if (rank_ == 0) return TropElement();
    return TropElement::generator(rank_, i - 1);
}

Seed World::sigma1() const { return Seed{baseH_, base_cluster_, sigma1_coeffs_}; }

void World::ensure_y(int64_t m) const {
    if (std::abs(m) > window_ + 6) throw std::out_of_range("coefficient index beyond memo window");
    int64_t hi = ytab_.rbegin()->first;
    TropElement one = TropElement::one(rank_);
    while (hi < m) {
        const auto& y = ytab_.at(hi);
        TropElement n1 = trop_oplus(y[0], one);
        ytab_[hi + 1] = {y[1] * y[0] * n1.inverse(), y[2] * y[0] * n1.inverse(), y[0].inverse()};
        ++hi;
    }
    int64_t lo = ytab_.begin()->first;
    while (lo > m) {
        const auto& y = ytab_.at(lo);
        TropElement n3 = trop_oplus(y[2], one);
        ytab_[lo - 1] = {y[2].inverse(), y[0] * n3, y[1] * n3};
        --lo;
    }
}

TropElement World::y(int i, int64_t m) const {
    if (i < 1 || i > 3) throw std::invalid_argument("coefficient index out of range");
    ensure_y(m);
    return ytab_.at(m)[i - 1];
}

TropElement World::ycyc(int i, int64_t m) const {
    if (i < 1 || i > 3) throw std::invalid_argument("coefficient index out of range");
    ensure_y(m);
    const auto& ym = ytab_.at(m);
    TropElement n2 = trop_oplus(ym[1], TropElement::one(rank_));
    switch (i) {
        case 1: return ym[0] * n2;
        case 2: return ym[1].inverse();
        default: return ym[2] * ym[1] * n2.inverse();
    }
}

const ClusterLaurent& World::compute_x(int64_t m) const {
    auto it = xs_.find(m);
    if (it != xs_.end()) return it->second;
    if (std::abs(m) > window_ + 4) throw std::out_of_range("cluster variable index beyond memo window");
    TropElement one = TropElement::one(rank_);
    if (m >= 4) {
        const ClusterLaurent& a = compute_x(m - 2);
        const ClusterLaurent& b = compute_x(m - 1);
        const ClusterLaurent& c = compute_x(m - 3);
        TropElement y1 = y(1, m - 3);
        ClusterLaurent num = a * b + ClusterLaurent::constant(ref_, YCoeff::from(y1));
        ClusterLaurent v = laurent_exact_div(num, c * trop_oplus(y1, one));
        return xs_.emplace(m, std::move(v)).first->second;
    }
    const ClusterLaurent& a = compute_x(m + 1);
    const ClusterLaurent& b = compute_x(m + 2);
    const ClusterLaurent& c = compute_x(m + 3);
    TropElement y1 = y(1, m);
    ClusterLaurent num = a * b + ClusterLaurent::constant(ref_, YCoeff::from(y1));
    ClusterLaurent v = laurent_exact_div(num, c * trop_oplus(y1, one));
    return xs_.emplace(m, std::move(v)).first->second;
}

const ClusterLaurent& World::x(int64_t m) const { return compute_x(m); }

const ClusterLaurent& World::w() const {
    auto it = cs_.find(1);
    if (it != cs_.end()) return it->second;
    // c_m = (y_{2;m} x_m + x_{m+2}) / ((y_{2;m} + 1) x_{m+1}) at m = 1
    TropElement y2 = y(2, 1);
    ClusterLaurent num = x(1) * y2 + x(3);
    ClusterLaurent v = laurent_exact_div(num, x(2) * trop_oplus(y2, TropElement::one(rank_)));
    return cs_.emplace(1, std::move(v)).first->second;
}

const ClusterLaurent& World::z() const {
    auto it = cs_.find(2);
    if (it != cs_.end()) return it->second;
    TropElement y2 = y(2, 2);
    ClusterLaurent num = x(2) * y2 + x(4);
    ClusterLaurent v = laurent_exact_div(num, x(3) * trop_oplus(y2, TropElement::one(rank_)));
    return cs_.emplace(2, std::move(v)).first->second;
}

const ClusterLaurent& World::u(int64_t n) const {
    if (n < 0) throw std::invalid_argument("u_n needs n >= 0");
    if (n > window_ + 4) throw std::out_of_range("u index beyond memo window");
    auto it = us_.find(n);
    if (it != us_.end()) return it->second;
    if (n == 0) {
        ClusterLaurent one = ClusterLaurent::constant(ref_, YCoeff::one(rank_));
        return us_.emplace(0, std::move(one)).first->second;
    }
    TropElement y1 = y(1, 1), y2 = y(2, 1), y3 = y(3, 1);
    TropElement one = TropElement::one(rank_);
    if (n == 1) {
        ClusterLaurent W = w() * trop_oplus(y2, one);
        ClusterLaurent Z = z() * trop_oplus(trop_oplus(y1 * y3, y1), one);
        ClusterLaurent v = Z * W - ClusterLaurent::constant(ref_, YCoeff::from(y1 * y3) + YCoeff::from(y2));
        return us_.emplace(1, std::move(v)).first->second;
    }
    TropElement ydelta = y1 * y2 * y3;
    if (n == 2) {
        ClusterLaurent v = u(1) * u(1) - ClusterLaurent::constant(ref_, YCoeff(2, ydelta));
        return us_.emplace(2, std::move(v)).first->second;
    }
    ClusterLaurent v = u(1) * u(n - 1) - u(n - 2) * ydelta;
    return us_.emplace(n, std::move(v)).first->second;
}

CoeffTables gen_y_families(const World& w, int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    CoeffTables t{window, {}, {}};
    for (int64_t m = -window; m <= window; ++m) {
        t.y[m] = {w.y(1, m), w.y(2, m), w.y(3, m)};
        t.ycyc[m] = {w.ycyc(1, m), w.ycyc(2, m), w.ycyc(3, m)};
    }
    return t;
}

GVector principal_degree(const Vec3& x_exp, const TropElement& y_mono, const Matrix3& H) {
    Vec3 d = x_exp;
    for (int i = 0; i < 3; ++i) {
        int64_t e = y_mono.exp(i);
        for (int r = 0; r < 3; ++r) d[r] -= checked_mul(e, H[r][i]);
    }
    return d;
}

std::pair<YCoeff, GVector> extract_F_g(const ClusterLaurent& v, const Matrix3& H) {
    if (v.is_zero()) throw std::invalid_argument("cannot extract F and g from zero");
    std::optional<GVector> g;
    YCoeff f;
    for (const auto& [x, c] : v.terms()) {
        for (const auto& [m, k] : c.terms()) {
            GVector d = principal_degree(x, m, H);
            if (!g) g = d;
            else if (*g != d) throw std::invalid_argument("input is not homogeneous under the principal grading");
            if (k < 0) throw std::invalid_argument("F-polynomial has a negative coefficient");
            f.add_term(m, k);
        }
    }
    int rank = f.terms().begin()->first.rank();
    auto it = f.terms().find(TropElement::one(rank));
    if (it == f.terms().end() || it->second != 1)
        throw std::invalid_argument("F-polynomial has no constant term 1");
    for (const auto& [m, k] : f.terms())
        for (int64_t e : m.exps())
            if (e < 0) throw std::invalid_argument("F-polynomial has a negative exponent");
    return {f, *g};
}

std::pair<YCoeff, GVector> extract_F_g(const ClusterLaurent& v) {
    Matrix3 H = (v.ref() == Cluster::cyclic || v.ref() == Cluster::z_cyclic) ? kCyclicH : kInitialH;
    return extract_F_g(v, H);
}

ClusterLaurent reflect_expansion(const ClusterLaurent& v) {
    if (v.is_zero()) return v;
    ClusterLaurent r(v.ref());
    std::optional<TropElement> norm;
    for (const auto& [x, c] : v.terms()) {
        Vec3 xx{x[2], x[1], x[0]};
        YCoeff cc;
        for (const auto& [m, k] : c.terms()) {
            const auto& e = m.exps();
            TropElement mm = m;
            if (!e.empty()) {
                std::vector<int64_t> f(e.rbegin(), e.rend());
                for (auto& q : f) q = -q;
                mm = TropElement(std::move(f));
            }
            norm = norm ? trop_oplus(*norm, mm) : mm;
            cc.add_term(mm, k);
        }
        r.add_term(xx, cc);
    }
    return r * norm->inverse();
}

}  // namespace acluster
