#include "acluster/basis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace acluster {

std::string Var::str() const {
    switch (kind) {
        case Kind::w: return "w";
        case Kind::z: return "z";
        case Kind::x: break;
    }
    std::ostringstream os;
    os << "x_" << m;
    return os.str();
}

std::array<Var, 3> BasisElement::cluster_vars(const SeedLabel& label) {
    if (label.kind == SeedLabel::Kind::straight)
        return {Var::X(label.m), Var::X(label.m + 1), Var::X(label.m + 2)};
    Var mid = (((label.m % 2) + 2) % 2 == 0) ? Var::Z() : Var::W();
    return {Var::X(label.m), mid, Var::X(label.m + 2)};
}

BasisElement BasisElement::UPower(int64_t n) {
    if (n < 1) throw std::invalid_argument("u_n basis element needs n >= 1");
    BasisElement b;
    b.tag = Tag::u_power;
    b.n = n;
    return b;
}

BasisElement BasisElement::UW(int64_t n, int64_t k) {
    if (n < 1 || k < 1) throw std::invalid_argument("u_n w^k basis element needs n, k >= 1");
    BasisElement b;
    b.tag = Tag::u_w;
    b.n = n;
    b.k = k;
    return b;
}

BasisElement BasisElement::UZ(int64_t n, int64_t k) {
    if (n < 1 || k < 1) throw std::invalid_argument("u_n z^k basis element needs n, k >= 1");
    BasisElement b;
    b.tag = Tag::u_z;
    b.n = n;
    b.k = k;
    return b;
}

namespace {

// all labels whose cluster contains every listed variable, smallest first
// under the order Straight(m) < Cyclic(m), m ascending; pure powers of w or
// z admit infinitely many labels, so those pick the one next to the initial
// seed: Cyclic(1) for w, Cyclic(0) for z
std::vector<SeedLabel> admissible_labels(const std::vector<Var>& support) {
    bool has_w = false, has_z = false;
    std::vector<int64_t> xs;
    for (const Var& v : support) {
        if (v.kind == Var::Kind::w) has_w = true;
        else if (v.kind == Var::Kind::z) has_z = true;
        else xs.push_back(v.m);
    }
    if (has_w && has_z) return {};
    std::sort(xs.begin(), xs.end());
    if (has_w || has_z) {
        int64_t parity = has_w ? 1 : 0;
        if (xs.empty()) return {SeedLabel{SeedLabel::Kind::cyclic, parity}};
        for (int64_t x : xs)
            if ((((x % 2) + 2) % 2) != parity) return {};
        int64_t lo = xs.front(), hi = xs.back();
        if (hi - lo > 2) return {};
        std::vector<SeedLabel> out;
        for (int64_t m = hi - 2; m <= lo; m += 2) out.push_back({SeedLabel::Kind::cyclic, m});
        return out;
    }
    if (xs.empty()) return {};
    int64_t lo = xs.front(), hi = xs.back();
    if (hi - lo > 2) return {};
    std::vector<SeedLabel> out;
    for (int64_t m = hi - 2; m <= lo; ++m) out.push_back({SeedLabel::Kind::straight, m});
    bool same_parity = std::all_of(xs.begin(), xs.end(), [&](int64_t x) { return (x - lo) % 2 == 0; });
    if (same_parity) {
        // supports inside {m, m+2} also sit in a cyclic cluster
        for (int64_t m = hi - 2; m <= lo; m += 2) out.push_back({SeedLabel::Kind::cyclic, m});
    }
    std::sort(out.begin(), out.end(), [](const SeedLabel& a, const SeedLabel& b) {
        if (a.m != b.m) return a.m < b.m;
        return a.kind < b.kind;
    });
    return out;
}

}  // namespace

BasisElement BasisElement::Monomial(const std::vector<std::pair<Var, int64_t>>& factors) {
    std::map<Var, int64_t> merged;
    for (const auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("cluster monomial exponents must be nonnegative");
        if (e > 0) merged[v] += e;
    }
    if (merged.empty()) return One();
    std::vector<Var> support;
    for (const auto& [v, e] : merged) support.push_back(v);
    auto labels = admissible_labels(support);
    if (labels.empty()) throw std::invalid_argument("factors do not fit in a single cluster");
    BasisElement b;
    b.tag = Tag::cluster_monomial;
    b.label = labels.front();
    auto vars = cluster_vars(b.label);
    for (int i = 0; i < 3; ++i) {
        auto it = merged.find(vars[i]);
        b.exps[i] = it == merged.end() ? 0 : it->second;
    }
    return b;
}

std::vector<std::pair<Var, int64_t>> BasisElement::factors() const {
    switch (tag) {
        case Tag::one:
        case Tag::u_power: return {};
        case Tag::u_w: return {{Var::W(), k}};
        case Tag::u_z: return {{Var::Z(), k}};
        case Tag::cluster_monomial: break;
    }
    std::vector<std::pair<Var, int64_t>> out;
    auto vars = cluster_vars(label);
    for (int i = 0; i < 3; ++i)
        if (exps[i] != 0) out.push_back({vars[i], exps[i]});
    return out;
}

bool BasisElement::divisible_by_initial() const {
    if (tag != Tag::cluster_monomial) return false;
    for (const auto& [v, e] : factors())
        if (v.kind == Var::Kind::x && v.m >= 1 && v.m <= 3) return true;
    return false;
}

bool BasisElement::divisible_by_nonpositive() const {
    if (tag != Tag::cluster_monomial) return false;
    for (const auto& [v, e] : factors())
        if (v.kind == Var::Kind::x && v.m <= 0) return true;
    return false;
}

std::string BasisElement::str() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::one: return "1";
        case Tag::u_power: os << "u_" << n; return os.str();
        case Tag::u_w:
        case Tag::u_z:
            os << "u_" << n << "*" << (tag == Tag::u_w ? "w" : "z");
            if (k != 1) os << "^" << k;
            return os.str();
        case Tag::cluster_monomial: break;
    }
    bool first = true;
    for (const auto& [v, e] : factors()) {
        if (!first) os << "*";
        os << v.str();
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

namespace {

const World& world_for(Cluster c) {
    switch (c) {
        case Cluster::initial: return World::initial();
        case Cluster::cyclic: return World::cyclic();
        default: throw std::invalid_argument("expansions cover the initial and cyclic clusters");
    }
}

const ClusterLaurent& var_expansion(const Var& v, const World& w) {
    switch (v.kind) {
        case Var::Kind::w: return w.w();
        case Var::Kind::z: return w.z();
        case Var::Kind::x: return w.x(v.m);
    }
    throw std::logic_error("unreachable");
}

Elem var_elem(const Var& v) {
    switch (v.kind) {
        case Var::Kind::w: return Elem::W();
        case Var::Kind::z: return Elem::Z();
        case Var::Kind::x: return Elem::X(v.m);
    }
    throw std::logic_error("unreachable");
}

BasisElement shift_up(const BasisElement& b) {
    switch (b.tag) {
        case BasisElement::Tag::one:
        case BasisElement::Tag::u_power: return b;
        case BasisElement::Tag::u_w: return BasisElement::UZ(b.n, b.k);
        case BasisElement::Tag::u_z: return BasisElement::UW(b.n, b.k);
        case BasisElement::Tag::cluster_monomial: break;
    }
    std::vector<std::pair<Var, int64_t>> fs;
    for (const auto& [v, e] : b.factors()) {
        switch (v.kind) {
            case Var::Kind::x: fs.push_back({Var::X(v.m + 1), e}); break;
            case Var::Kind::w: fs.push_back({Var::Z(), e}); break;
            case Var::Kind::z: fs.push_back({Var::W(), e}); break;
        }
    }
    return BasisElement::Monomial(fs);
}

}  // namespace

ClusterLaurent basis_to_laurent(const BasisElement& b, Cluster c) {
    if (c == Cluster::z_cyclic) return basis_to_laurent_z_cyclic(b);
    const World& w = world_for(c);
    ClusterLaurent r = ClusterLaurent::constant(c, YCoeff::one(w.rank()));
    switch (b.tag) {
        case BasisElement::Tag::one: return r;
        case BasisElement::Tag::u_power: return w.u(b.n);
        case BasisElement::Tag::u_w: return w.u(b.n) * w.w().pow(b.k);
        case BasisElement::Tag::u_z: return w.u(b.n) * w.z().pow(b.k);
        case BasisElement::Tag::cluster_monomial: break;
    }
    for (const auto& [v, e] : b.factors()) r = r * var_expansion(v, w).pow(e);
    return r;
}

ClusterLaurent basis_to_laurent_z_cyclic(const BasisElement& b) {
    // the expansion in {x0, z, x2} of b equals the expansion in {x1, w, x3}
    // of the index-shifted element, read positionally
    return retag(basis_to_laurent(shift_up(b), Cluster::cyclic), Cluster::z_cyclic);
}

DVector d_of_basis(const BasisElement& b, Cluster c) {
    switch (b.tag) {
        case BasisElement::Tag::one: return {0, 0, 0};
        case BasisElement::Tag::u_power: return cf_d(Elem::U(b.n), c);
        case BasisElement::Tag::u_w: return cf_d(Elem::U(b.n), c) + b.k * cf_d(Elem::W(), c);
        case BasisElement::Tag::u_z: return cf_d(Elem::U(b.n), c) + b.k * cf_d(Elem::Z(), c);
        case BasisElement::Tag::cluster_monomial: break;
    }
    DVector d{0, 0, 0};
    for (const auto& [v, e] : b.factors()) d = d + e * cf_d(var_elem(v), c);
    return d;
}

GVector g_of_basis(const BasisElement& b, Cluster c) {
    switch (b.tag) {
        case BasisElement::Tag::one: return {0, 0, 0};
        case BasisElement::Tag::u_power: return cf_g(Elem::U(b.n), c);
        case BasisElement::Tag::u_w: return cf_g(Elem::U(b.n), c) + b.k * cf_g(Elem::W(), c);
        case BasisElement::Tag::u_z: return cf_g(Elem::U(b.n), c) + b.k * cf_g(Elem::Z(), c);
        case BasisElement::Tag::cluster_monomial: break;
    }
    GVector g{0, 0, 0};
    for (const auto& [v, e] : b.factors()) g = g + e * cf_g(var_elem(v), c);
    return g;
}

GVector f_map(const DVector& d) {
    return {-d[0], -d[1] + pos_part(d[0]), -d[2] + pos_part(d[0]) + pos_part(d[1])};
}

DVector f_inverse(const GVector& g) {
    int64_t a = -g[0];
    int64_t b = pos_part(a) - g[1];
    int64_t c = pos_part(a) + pos_part(b) - g[2];
    return {a, b, c};
}

GVector g_change_cluster(const GVector& g) {
    int64_t mn = std::min<int64_t>(g[1], 0);
    return {g[0] + g[1] - mn, -g[1], g[2] + mn};
}

GVector g_change_cluster_inverse(const GVector& g) {
    int64_t g2 = -g[1];
    int64_t mn = std::min<int64_t>(g2, 0);
    return {g[0] + g[1] + mn, g2, g[2] - mn};
}

namespace {

int64_t det3(const std::array<Vec3, 3>& col) {
    return col[0][0] * (col[1][1] * col[2][2] - col[1][2] * col[2][1]) -
           col[1][0] * (col[0][1] * col[2][2] - col[0][2] * col[2][1]) +
           col[2][0] * (col[0][1] * col[1][2] - col[0][2] * col[1][1]);
}

// nonnegative integer coordinates of d in the cone over the three columns
std::optional<Vec3> solve_cone(const std::array<Vec3, 3>& col, const Vec3& d) {
    int64_t det = det3(col);
    if (det == 0) return std::nullopt;
    Vec3 out{};
    for (int i = 0; i < 3; ++i) {
        std::array<Vec3, 3> rep = col;
        rep[i] = d;
        int64_t num = det3(rep);
        if (num % det != 0) return std::nullopt;
        out[i] = num / det;
        if (out[i] < 0) return std::nullopt;
    }
    return out;
}

std::optional<BasisElement> monomial_in_label(const SeedLabel& label, const Vec3& d) {
    auto vars = BasisElement::cluster_vars(label);
    std::array<Vec3, 3> cols{cf_d(var_elem(vars[0]), Cluster::initial),
                             cf_d(var_elem(vars[1]), Cluster::initial),
                             cf_d(var_elem(vars[2]), Cluster::initial)};
    auto sol = solve_cone(cols, d);
    if (!sol) return std::nullopt;
    return BasisElement::Monomial({{vars[0], (*sol)[0]}, {vars[1], (*sol)[1]}, {vars[2], (*sol)[2]}});
}

std::optional<BasisElement> regular_cone_element(const Vec3& d) {
    if (d[0] != d[2] || d[0] < 0 || d[1] < 0) return std::nullopt;
    int64_t a = d[0], b = d[1];
    if (a == 0 && b == 0) return BasisElement::One();
    if (a == 0) return BasisElement::Monomial({{Var::W(), b}});
    if (b == 0) return BasisElement::Monomial({{Var::Z(), a}});
    if (a == b) return BasisElement::UPower(a);
    if (b > a) return BasisElement::UW(a, b - a);
    return BasisElement::UZ(b, a - b);
}

BasisElement mirror_monomial(const BasisElement& b) {
    std::vector<std::pair<Var, int64_t>> fs;
    for (const auto& [v, e] : b.factors())
        fs.push_back({v.kind == Var::Kind::x ? Var::X(4 - v.m) : v, e});
    return BasisElement::Monomial(fs);
}

// two-step reduction inside the sorted region l > m > n >= 1
BasisElement decompose_sorted(int64_t l, int64_t m, int64_t n) {
    int64_t shift = 0;
    if (l < 2 * n) {
        // n = k(l-n) + r pushes the point back into the quadrilateral
        int64_t k = n / (l - n);
        int64_t drop = k * (l - n);
        shift = 2 * k;
        l -= drop;
        m -= drop;
        n -= drop;
    }
    if (n <= l - m)
        return BasisElement::Monomial(
            {{Var::X(4 + shift), l - m - n}, {Var::X(5 + shift), m - n}, {Var::X(6 + shift), n}});
    return BasisElement::Monomial(
        {{Var::X(5 + shift), l - 2 * n}, {Var::X(6 + shift), l - m}, {Var::X(7 + shift), n - l + m}});
}

const std::vector<SeedLabel>& boundary_fan_labels() {
    static const std::vector<SeedLabel> labels = {
        {SeedLabel::Kind::straight, -1}, {SeedLabel::Kind::straight, 0}, {SeedLabel::Kind::straight, 1},
        {SeedLabel::Kind::straight, 2},  {SeedLabel::Kind::straight, 3}, {SeedLabel::Kind::cyclic, -1},
        {SeedLabel::Kind::cyclic, 0},    {SeedLabel::Kind::cyclic, 1},   {SeedLabel::Kind::cyclic, 2},
        {SeedLabel::Kind::cyclic, 3}};
    return labels;
}

}  // namespace

BasisElement decompose_d(const DVector& d) {
    if (auto reg = regular_cone_element(d)) return *reg;
    int64_t mn = std::min({d[0], d[1], d[2]});
    if (mn <= 0) {
        // outside the open positive octant: the fan of the nine cluster
        // variables with a vanishing coordinate covers everything here
        std::set<BasisElement> found;
        for (const SeedLabel& label : boundary_fan_labels())
            if (auto b = monomial_in_label(label, d)) found.insert(*b);
        if (found.size() != 1)
            throw std::logic_error("boundary fan did not yield a unique decomposition for " + vec3_str(d));
        return *found.begin();
    }
    if (d[0] > d[2]) {
        int64_t D = d[0] - d[2];
        if (d[1] >= d[0]) {
            // cones through {x_{2t+1}, w, x_{2t+3}}
            int64_t q = d[1] - d[0];
            int64_t t = (d[0] + D - 1) / D;
            int64_t p = t * D - d[0];
            int64_t r = d[0] - (t - 1) * D;
            return BasisElement::Monomial({{Var::X(2 * t + 1), p}, {Var::W(), q}, {Var::X(2 * t + 3), r}});
        }
        if (d[1] <= d[2]) {
            // cones through {x_{2t}, z, x_{2t+2}}
            int64_t q = d[2] - d[1];
            int64_t t = d[1] / D + 2;
            int64_t p = (t - 1) * D - d[1];
            int64_t r = d[1] - (t - 2) * D;
            return BasisElement::Monomial({{Var::X(2 * t), p}, {Var::Z(), q}, {Var::X(2 * t + 2), r}});
        }
        return decompose_sorted(d[0], d[1], d[2]);
    }
    return mirror_monomial(decompose_d({d[2], d[1], d[0]}));
}

BasisElement decompose_d_oracle(const DVector& d, int64_t window) {
    std::set<BasisElement> found;
    if (auto reg = regular_cone_element(d)) found.insert(*reg);
    for (int64_t m = -window; m <= window; ++m) {
        if (auto b = monomial_in_label({SeedLabel::Kind::straight, m}, d)) found.insert(*b);
        if (auto b = monomial_in_label({SeedLabel::Kind::cyclic, m}, d)) found.insert(*b);
    }
    if (found.empty()) throw std::runtime_error("no admissible cone contains " + vec3_str(d));
    if (found.size() > 1) throw std::runtime_error("several admissible cones contain " + vec3_str(d));
    return *found.begin();
}

BasisElement decompose_d_oracle(const DVector& d) {
    int64_t norm1 = std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]);
    return decompose_d_oracle(d, 4 + norm1);
}

BasisElement g_inverse(const GVector& g, Cluster c) {
    switch (c) {
        case Cluster::initial: return decompose_d(f_inverse(g));
        case Cluster::cyclic: return g_inverse(g_change_cluster_inverse(g), Cluster::initial);
        default: throw std::invalid_argument("g_inverse covers the initial and cyclic clusters");
    }
}

std::vector<BasisElement> enumerate_basis(const WindowParams& p) {
    std::set<BasisElement> out;
    if (p.include_one) out.insert(BasisElement::One());
    for (int64_t n = 1; n <= p.max_n; ++n) {
        out.insert(BasisElement::UPower(n));
        for (int64_t k = 1; k <= p.max_k; ++k) {
            out.insert(BasisElement::UW(n, k));
            out.insert(BasisElement::UZ(n, k));
        }
    }
    for (int64_t m = -p.label_window; m <= p.label_window; ++m) {
        for (int kind = 0; kind < 2; ++kind) {
            SeedLabel label{kind == 0 ? SeedLabel::Kind::straight : SeedLabel::Kind::cyclic, m};
            auto vars = BasisElement::cluster_vars(label);
            for (int64_t a = 0; a <= p.max_exp_sum; ++a)
                for (int64_t b = 0; a + b <= p.max_exp_sum; ++b)
                    for (int64_t c = 0; a + b + c <= p.max_exp_sum; ++c) {
                        if (a + b + c == 0) continue;
                        out.insert(BasisElement::Monomial({{vars[0], a}, {vars[1], b}, {vars[2], c}}));
                    }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace acluster
