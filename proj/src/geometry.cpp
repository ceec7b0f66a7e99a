#include "acluster/geometry.hpp"

#include <algorithm>
#include <set>

namespace acluster {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int64_t dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

std::vector<Vec3> dedupe(std::span<const Vec3> pts) {
    std::set<Vec3> s(pts.begin(), pts.end());
    return {s.begin(), s.end()};
}

// affine dimension and a witness frame
struct Frame {
    int dim = -1;   // -1 empty, 0 point, 1 line, 2 plane, 3 solid
    Vec3 origin{};
    Vec3 u{}, v{};  // independent edge vectors (dim >= 1 / >= 2)
    Vec3 normal{};  // u x v for dim == 2
};

Frame affine_frame(std::span<const Vec3> pts) {
    Frame f;
    if (pts.empty()) return f;
    f.dim = 0;
    f.origin = pts[0];
    for (const Vec3& p : pts) {
        Vec3 d = p - f.origin;
        if (is_zero(d)) continue;
        if (f.dim == 0) {
            f.u = d;
            f.dim = 1;
        } else if (f.dim == 1) {
            Vec3 n = cross(f.u, d);
            if (!is_zero(n)) {
                f.v = d;
                f.normal = n;
                f.dim = 2;
            }
        } else if (f.dim == 2) {
            if (dot(f.normal, d) != 0) {
                f.dim = 3;
                break;
            }
        }
    }
    return f;
}

// 2D chart of a planar set: drop a coordinate where the normal is nonzero
int chart_axis(const Vec3& normal) {
    for (int i = 0; i < 3; ++i)
        if (normal[i] != 0) return i;
    throw std::logic_error("degenerate plane normal");
}

std::array<int64_t, 2> chart(const Vec3& p, int drop) {
    std::array<int64_t, 2> q{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != drop) q[k++] = p[i];
    return q;
}

int64_t orient2(const std::array<int64_t, 2>& a, const std::array<int64_t, 2>& b,
                const std::array<int64_t, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace

std::vector<Vec3> extreme_points(std::span<const Vec3> pts) {
    std::vector<Vec3> s = dedupe(pts);
    Frame f = affine_frame(s);
    if (f.dim <= 0) return s;
    if (f.dim == 1) {
        auto key = [&f](const Vec3& p) { return dot(p - f.origin, f.u); };
        auto [lo, hi] = std::minmax_element(
            s.begin(), s.end(), [&](const Vec3& a, const Vec3& b) { return key(a) < key(b); });
        std::vector<Vec3> out{*lo};
        if (!(*hi == *lo)) out.push_back(*hi);
        std::sort(out.begin(), out.end());
        return out;
    }
    if (f.dim != 2) throw std::invalid_argument("extreme_points expects a planar point set");
    int drop = chart_axis(f.normal);
    struct P2 {
        std::array<int64_t, 2> q;
        Vec3 p;
        bool operator<(const P2& o) const { return q < o.q; }
    };
    std::vector<P2> q;
    q.reserve(s.size());
    for (const Vec3& p : s) q.push_back({chart(p, drop), p});
    std::sort(q.begin(), q.end());
    // monotone chain, dropping collinear points
    auto build = [](std::vector<P2>& hull, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= 2 &&
                   orient2(hull[hull.size() - 2].q, hull[hull.size() - 1].q, it->q) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
    };
    std::vector<P2> lower, upper;
    build(lower, q.begin(), q.end());
    build(upper, q.rbegin(), q.rend());
    std::vector<Vec3> out;
    for (size_t i = 0; i + 1 < lower.size(); ++i) out.push_back(lower[i].p);
    for (size_t i = 0; i + 1 < upper.size(); ++i) out.push_back(upper[i].p);
    if (out.empty()) out.push_back(q.front().p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool in_hull(const Vec3& p, std::span<const Vec3> gens) {
    std::vector<Vec3> g = dedupe(gens);
    if (g.empty()) return false;
    Frame f = affine_frame(g);
    Vec3 d = p - f.origin;
    if (f.dim == 0) return is_zero(d);
    if (f.dim == 1) {
        if (!is_zero(cross(d, f.u))) return false;
        int64_t t = dot(d, f.u);
        int64_t lo = 0, hi = 0;
        bool first = true;
        for (const Vec3& x : g) {
            int64_t s = dot(x - f.origin, f.u);
            if (first) { lo = hi = s; first = false; }
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return lo <= t && t <= hi;
    }
    if (f.dim == 2) {
        if (dot(f.normal, d) != 0) return false;
        std::vector<Vec3> hull = extreme_points(g);
        if (hull.size() == 1) return p == hull[0];
        if (hull.size() == 2) return in_hull(p, hull);
        int drop = chart_axis(f.normal);
        auto q = chart(p, drop);
        std::vector<std::array<int64_t, 2>> hq;
        for (const Vec3& h : hull) hq.push_back(chart(h, drop));
        std::sort(hq.begin(), hq.end());
        std::vector<std::array<int64_t, 2>> rest(hq.begin() + 1, hq.end());
        std::sort(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
            int64_t o = orient2(hq.front(), a, b);
            if (o != 0) return o > 0;
            auto d2 = [&](const auto& x) {
                int64_t dx = x[0] - hq.front()[0], dy = x[1] - hq.front()[1];
                return dx * dx + dy * dy;
            };
            return d2(a) < d2(b);
        });
        std::vector<std::array<int64_t, 2>> ordered{hq.front()};
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        for (size_t i = 0; i < ordered.size(); ++i) {
            const auto& a = ordered[i];
            const auto& b = ordered[(i + 1) % ordered.size()];
            if (orient2(a, b, q) < 0) return false;
        }
        return true;
    }
    // full-dimensional: facet enumeration over generator triples
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            for (size_t k = j + 1; k < g.size(); ++k) {
                Vec3 n = cross(g[j] - g[i], g[k] - g[i]);
                if (is_zero(n)) continue;
                int64_t lo = 0, hi = 0;
                bool first = true;
                for (const Vec3& x : g) {
                    int64_t s = dot(n, x - g[i]);
                    if (first) { lo = hi = s; first = false; }
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                }
                int64_t sp = dot(n, p - g[i]);
                // facet when all generators lie on one side
                if (lo >= 0 && sp < 0) return false;
                if (hi <= 0 && sp > 0) return false;
            }
    return true;
}

}  // namespace

bool same_hull(std::span<const Vec3> a, std::span<const Vec3> b) {
    for (const Vec3& p : a)
        if (!in_hull(p, b)) return false;
    for (const Vec3& p : b)
        if (!in_hull(p, a)) return false;
    return true;
}

bool hull_matches_support(std::span<const Vec3> support, std::span<const Vec3> gens) {
    std::set<Vec3> s(support.begin(), support.end());
    for (const Vec3& g : gens)
        if (!s.count(g)) return false;
    for (const Vec3& p : support)
        if (!in_hull(p, gens)) return false;
    return true;
}

int64_t grading_degree(const ClusterLaurent& v) {
    if (v.is_zero()) throw std::invalid_argument("grading degree of zero is undefined");
    Vec3 wts = cluster_grading_weights(v.ref());
    std::optional<int64_t> deg;
    for (const auto& [x, c] : v.terms()) {
        int64_t d = dot(wts, x);
        if (!deg) deg = d;
        else if (*deg != d) throw std::invalid_argument("input is not homogeneous under the Z-grading");
    }
    return *deg;
}

LatticePolygon newton_polygon(const BasisElement& b, Cluster c) {
    ClusterLaurent v = basis_to_laurent(b, c);
    std::vector<Vec3> supp;
    supp.reserve(v.size());
    for (const auto& [x, cc] : v.terms()) supp.push_back(x);
    LatticePolygon poly;
    poly.vertices = extreme_points(supp);
    poly.plane_normal = cluster_grading_weights(c);
    poly.plane_value = grading_degree(v);
    return poly;
}

bool sign_coherent(std::span<const Vec3> vs) {
    for (int i = 0; i < 3; ++i) {
        bool pos = false, neg = false;
        for (const Vec3& v : vs) {
            if (v[i] > 0) pos = true;
            if (v[i] < 0) neg = true;
        }
        if (pos && neg) return false;
    }
    return true;
}

namespace {

bool monomial_in_cluster(const BasisElement& b, Cluster c) {
    if (b.tag == BasisElement::Tag::one) return true;
    if (b.tag != BasisElement::Tag::cluster_monomial) return false;
    for (const auto& [v, e] : b.factors()) {
        bool ok = false;
        switch (c) {
            case Cluster::initial: ok = v.kind == Var::Kind::x && v.m >= 1 && v.m <= 3; break;
            case Cluster::cyclic:
                ok = v.kind == Var::Kind::w || (v.kind == Var::Kind::x && (v.m == 1 || v.m == 3));
                break;
            case Cluster::z_cyclic:
                ok = v.kind == Var::Kind::z || (v.kind == Var::Kind::x && (v.m == 0 || v.m == 2));
                break;
            default: break;
        }
        if (!ok) return false;
    }
    return true;
}

BasisElement mirror_basis(const BasisElement& b) {
    switch (b.tag) {
        case BasisElement::Tag::one:
        case BasisElement::Tag::u_power:
        case BasisElement::Tag::u_w:
        case BasisElement::Tag::u_z: return b;
        case BasisElement::Tag::cluster_monomial: break;
    }
    std::vector<std::pair<Var, int64_t>> fs;
    for (const auto& [v, e] : b.factors())
        fs.push_back({v.kind == Var::Kind::x ? Var::X(4 - v.m) : v, e});
    return BasisElement::Monomial(fs);
}

struct FamilyRow {
    Vec3 phi;
    bool strict;
    const char* note;
};

FamilyRow initial_row(const BasisElement& b) {
    switch (b.tag) {
        case BasisElement::Tag::u_power: return {{1, 2, 1}, false, "u_n"};
        case BasisElement::Tag::u_w: return {{1, 2, 1}, true, "u_n w^k"};
        case BasisElement::Tag::u_z: return {{2, 1, 2}, true, "u_n z^k"};
        default: break;
    }
    bool has_w = false, has_z = false, has_x = false;
    int64_t bmax = 0;
    for (const auto& [v, e] : b.factors()) {
        if (v.kind == Var::Kind::w) has_w = true;
        else if (v.kind == Var::Kind::z) has_z = true;
        else {
            bmax = has_x ? std::max(bmax, v.m) : v.m;
            has_x = true;
        }
    }
    if (has_w) {
        if (!has_x || bmax <= 5) return {{0, 1, 0}, true, "x^p w^q x^r, small"};
        int64_t m = (bmax - 3) / 2;  // x_{2m+1} w x_{2m+3}
        return {{m, 2 * m, m - 2}, true, "x_{2m+1}^p w^q x_{2m+3}^r"};
    }
    if (has_z) {
        if (!has_x || bmax <= 2) return {{1, 0, 1}, true, "z^q or x_2^p z^q"};
        if (bmax == 4) return {{1, 0, 0}, true, "x_2^p z^q x_4^r"};
        int64_t m = (bmax - 2) / 2;  // x_{2m} z x_{2m+2}, scaled by 4
        return {{4 * m * (m - 1), m * (m - 1), 4 * m * m - 6 * m}, true, "x_{2m}^p z^q x_{2m+2}^r"};
    }
    switch (bmax) {
        case 4: return {{1, 0, 0}, true, "x_2^p x_3^q x_4^r"};
        case 5: return {{1, 1, 0}, true, "x_3^p x_4^q x_5^r"};
        case 6: return {{6, 3, 2}, true, "x_4^p x_5^q x_6^r"};
        case 7: return {{4, 4, 1}, true, "x_5^p x_6^q x_7^r"};
        case 8: return {{9, 5, 5}, true, "x_6^p x_7^q x_8^r"};
        default: break;
    }
    if (bmax % 2 == 1) {
        int64_t m = (bmax - 1) / 2 - 1;  // family x_{2m+1}..x_{2m+3}, scaled by 2
        return {{2 * m * (m - 1), 2 * m * (m - 1), 2 * m * m - 4 * m + 1}, true, "odd straight family"};
    }
    int64_t m = bmax / 2 - 1;  // family x_{2m}..x_{2m+2}, scaled by 4
    return {{4 * m * (m - 1), (2 * m - 1) * (2 * m - 3), 4 * m * m - 8 * m + 2}, true,
            "even straight family"};
}

FamilyRow cyclic_row(const BasisElement& b) {
    switch (b.tag) {
        case BasisElement::Tag::u_power: return {{1, 2, 1}, false, "u_n (degree plane)"};
        case BasisElement::Tag::u_w: return {{1, 0, 1}, false, "u_n w^k"};
        case BasisElement::Tag::u_z: return {{1, 2, 1}, true, "u_n z^k (degree)"};
        default: break;
    }
    bool has_w = false, has_z = false, has_x = false, has_x2 = false;
    int64_t bmax = 0;
    for (const auto& [v, e] : b.factors()) {
        if (v.kind == Var::Kind::w) has_w = true;
        else if (v.kind == Var::Kind::z) has_z = true;
        else {
            bmax = has_x ? std::max(bmax, v.m) : v.m;
            has_x = true;
            has_x2 |= v.m == 2;
        }
    }
    if (has_w) {
        if (bmax <= 5) return {{1, 0, 0}, true, "x_3^p w^q x_5^r"};
        int64_t m = (bmax - 3) / 2;  // scaled by 2
        return {{2 * m * (m - 1), 0, 2 * m * m - 4 * m + 1}, true, "x_{2m+1}^p w^q x_{2m+3}^r"};
    }
    if (has_z) return {{1, 2, 1}, true, "x_{2m}^p z^q x_{2m+2}^r"};
    if (has_x2 && bmax <= 4) return {{0, 1, 0}, true, "x_2 family"};
    switch (bmax) {
        case 4: return {{1, 1, 0}, true, "x_3^p x_4^q"};
        case 5: return {{1, 0, 0}, true, "x_3^p x_4^q x_5^r"};
        default: break;
    }
    if (bmax % 2 == 1) {
        int64_t m = (bmax - 1) / 2 - 1;  // scaled by 4
        return {{4 * m * (m - 1), m - 1, 4 * m * m - 8 * m + 2}, true, "odd straight family"};
    }
    int64_t m = bmax / 2 - 1;  // scaled by 2
    return {{2 * m * (m - 1), 2 * (m - 1), 2 * m * m - 4 * m + 1}, true, "even straight family"};
}

// non-proper exponent vectors on the zero set of a non-strict certificate,
// excluded from the support directly
std::vector<Vec3> excluded_points(const BasisElement& b, Cluster c) {
    if (b.tag == BasisElement::Tag::u_power) return {{0, 0, 0}};
    if (b.tag == BasisElement::Tag::u_w && c == Cluster::cyclic) return {{0, b.k, 0}};
    return {};
}

}  // namespace

Certificate properness_certificate(const BasisElement& b, Cluster c) {
    if (c != Cluster::initial && c != Cluster::cyclic)
        throw std::invalid_argument("certificates cover the initial and cyclic clusters");
    if (monomial_in_cluster(b, c))
        throw std::invalid_argument("element is a cluster monomial in this cluster");
    Vec3 phi;
    bool strict;
    std::string note;
    if (b.divisible_by_nonpositive()) {
        Certificate mirrored = properness_certificate(mirror_basis(b), c);
        phi = {mirrored.phi[2], mirrored.phi[1], mirrored.phi[0]};
        strict = mirrored.strict;
        note = std::string("mirror of: ") + mirrored.note;
    } else {
        FamilyRow row = (c == Cluster::initial) ? initial_row(b) : cyclic_row(b);
        phi = row.phi;
        strict = row.strict;
        note = row.note;
    }
    if (phi[0] < 0 || phi[1] < 0 || phi[2] < 0)
        throw std::logic_error("certificate form must have nonnegative entries");
    ClusterLaurent v = basis_to_laurent(b, c);
    for (const auto& [x, cc] : v.terms()) {
        int64_t val = dot(phi, x);
        if (val > 0 || (strict && val == 0))
            throw std::runtime_error("properness certificate failed for " + b.str() + " at " +
                                     vec3_str(x));
    }
    if (!strict) {
        for (const Vec3& p : excluded_points(b, c))
            if (!v.coeff_at(p).is_zero())
                throw std::runtime_error("properness exclusion failed for " + b.str());
    }
    return {phi, strict, note};
}

Witness pos_indec_witness(int64_t n, int64_t k, Cluster c, const WindowParams& sweep) {
    if (n < 1 || k < 0) throw std::invalid_argument("witness needs n >= 1, k >= 0");
    BasisElement target;
    switch (c) {
        case Cluster::initial:
            if (k != 0) throw std::invalid_argument("the initial-cluster witness has k = 0");
            target = BasisElement::UPower(n);
            break;
        case Cluster::cyclic: target = k ? BasisElement::UW(n, k) : BasisElement::UPower(n); break;
        case Cluster::z_cyclic: target = k ? BasisElement::UZ(n, k) : BasisElement::UPower(n); break;
        default: throw std::invalid_argument("unsupported cluster");
    }
    Vec3 mono{n, k, -n};
    ClusterLaurent v = basis_to_laurent(target, c);
    YCoeff coeff = v.coeff_at(mono);
    if (coeff.size() != 1 || coeff.terms().begin()->second != 1)
        throw std::runtime_error("witness coefficient is not a single semifield element");
    TropElement y = coeff.terms().begin()->first;
    for (const BasisElement& other : enumerate_basis(sweep)) {
        if (other == target || other.divisible_by_nonpositive()) continue;
        if (!basis_to_laurent(other, c).coeff_at(mono).is_zero())
            throw std::runtime_error("witness monomial of " + target.str() + " appears in " + other.str());
    }
    return {mono, y};
}

PositivityReport positivity_sweep(int window) {
    PositivityReport report;
    WindowParams p{window, 3, window, std::max(1, window - 2)};
    std::vector<BasisElement> elems = enumerate_basis(p);
    for (int64_t m = -window - 4; m <= window + 4; ++m)
        elems.push_back(BasisElement::Monomial({{Var::X(m), 1}}));
    for (const BasisElement& b : elems) {
        for (Cluster c : {Cluster::initial, Cluster::cyclic}) {
            ClusterLaurent v = basis_to_laurent(b, c);
            ++report.elements;
            for (const auto& [x, cc] : v.terms())
                for (const auto& [mono, coef] : cc.terms()) {
                    ++report.coefficients;
                    if (coef <= 0)
                        report.failures.push_back(b.str() + " has coefficient " + std::to_string(coef) +
                                                  " in the " + cluster_name(c) + " cluster");
                }
        }
    }
    return report;
}

}  // namespace acluster
