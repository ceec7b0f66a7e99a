#include "acluster/seed.hpp"

#include <sstream>

namespace acluster {

std::string SeedLabel::str() const {
    std::ostringstream os;
    os << "Sigma_" << m;
    if (kind == Kind::cyclic) os << "^cyc";
    return os.str();
}

bool Seed::operator==(const Seed& o) const {
    return H == o.H && cluster[0] == o.cluster[0] && cluster[1] == o.cluster[1] &&
           cluster[2] == o.cluster[2] && coeffs == o.coeffs;
}

std::string perm_cycle_str(const Perm& p) {
    std::array<bool, 3> seen{false, false, false};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        if (seen[i] || p[i] == i) continue;
        os << "(";
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            os << (j + 1);
            j = p[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "id";
}

void assert_skew_symmetric(const Matrix3& H) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (H[i][j] != -H[j][i]) throw std::invalid_argument("exchange matrix is not skew-symmetric");
}

static void check_direction(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("mutation direction out of range");
}

Matrix3 mutate_matrix(const Matrix3& H, int k) {
    check_direction(k);
    int kk = k - 1;
    Matrix3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == kk || j == kk) r[i][j] = -H[i][j];
            else r[i][j] = H[i][j] + sg(H[i][kk]) * pos_part(H[i][kk] * H[kk][j]);
        }
    return r;
}

std::array<TropElement, 3> mutate_coeffs(const std::array<TropElement, 3>& y, const Matrix3& H, int k) {
    check_direction(k);
    int kk = k - 1;
    std::array<TropElement, 3> r = y;
    TropElement yk1 = trop_oplus(y[kk], TropElement::one(y[kk].rank()));
    for (int j = 0; j < 3; ++j) {
        if (j == kk) {
            r[j] = y[kk].inverse();
        } else {
            int64_t h = H[kk][j];
            r[j] = y[j] * y[kk].pow(pos_part(h)) * yk1.pow(-h);
        }
    }
    return r;
}

Seed mutate_cluster(const Seed& s, int k) {
    check_direction(k);
    assert_skew_symmetric(s.H);
    int kk = k - 1;
    Cluster ref = s.cluster[0].ref();
    int rank = s.coeffs[0].rank();
    ClusterLaurent p1 = ClusterLaurent::constant(ref, YCoeff::from(s.coeffs[kk]));
    ClusterLaurent p2 = ClusterLaurent::constant(ref, YCoeff::one(rank));
    for (int i = 0; i < 3; ++i) {
        int64_t h = s.H[i][kk];
        if (h > 0) p1 = p1 * s.cluster[i].pow(h);
        if (h < 0) p2 = p2 * s.cluster[i].pow(-h);
    }
    TropElement norm = trop_oplus(s.coeffs[kk], TropElement::one(rank));
    ClusterLaurent den = s.cluster[kk] * norm;
    Seed r{mutate_matrix(s.H, k), s.cluster, mutate_coeffs(s.coeffs, s.H, k)};
    r.cluster[kk] = laurent_exact_div(p1 + p2, den);
    return r;
}

Seed relabel(const Seed& s, const Perm& sigma) {
    Seed r = s;
    for (int i = 0; i < 3; ++i) {
        r.cluster[sigma[i]] = s.cluster[i];
        r.coeffs[sigma[i]] = s.coeffs[i];
        for (int j = 0; j < 3; ++j) r.H[sigma[i]][sigma[j]] = s.H[i][j];
    }
    return r;
}

std::optional<Perm> seeds_equivalent(const Seed& a, const Seed& b) {
    static const std::array<Perm, 6> perms = {
        Perm{0, 1, 2}, Perm{0, 2, 1}, Perm{1, 0, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{2, 1, 0}};
    for (const Perm& p : perms) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            if (!(a.cluster[p[i]] == b.cluster[i]) || a.coeffs[p[i]] != b.coeffs[i]) ok = false;
            for (int j = 0; j < 3 && ok; ++j)
                if (a.H[p[i]][p[j]] != b.H[i][j]) ok = false;
        }
        if (ok) return p;
    }
    return std::nullopt;
}

const Seed& Walk::at(const SeedLabel& l) const {
    auto it = seeds.find(l);
    if (it == seeds.end()) throw std::out_of_range("seed label outside the walked window");
    return it->second;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::runtime_error(std::string("exchange graph walk: ") + what);
}

}  // namespace

Walk walk_exchange_graph(const Seed& sigma1, int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    assert_skew_symmetric(sigma1.H);

    const Perm up{2, 0, 1};    // (132): position 1 -> 3, 3 -> 2, 2 -> 1
    const Perm down{1, 2, 0};  // (123)
    const Perm swap13{2, 1, 0};

    Walk walk{{}, sigma1.cluster[0], sigma1.cluster[0]};
    walk.seeds.emplace(SeedLabel{SeedLabel::Kind::straight, 1}, sigma1);

    Seed cur = sigma1;
    for (int64_t m = 2; m <= window + 2; ++m) {
        cur = relabel(mutate_cluster(cur, 1), up);
        require(cur.H == sigma1.H, "straight exchange matrix changed going up");
        walk.seeds.emplace(SeedLabel{SeedLabel::Kind::straight, m}, cur);
    }
    cur = sigma1;
    for (int64_t m = 0; m >= -window; --m) {
        cur = relabel(mutate_cluster(cur, 3), down);
        require(cur.H == sigma1.H, "straight exchange matrix changed going down");
        walk.seeds.emplace(SeedLabel{SeedLabel::Kind::straight, m}, cur);
    }

    // direction 1 and 3 are mutually inverse along the central row
    for (int64_t m = -window; m <= window + 1; ++m) {
        const Seed& a = walk.at({SeedLabel::Kind::straight, m});
        const Seed& b = walk.at({SeedLabel::Kind::straight, m + 1});
        require(relabel(mutate_cluster(b, 3), down) == a, "direction-3 arrow does not return");
        require(relabel(mutate_cluster(a, 1), up) == b, "direction-1 arrow does not advance");
    }

    std::optional<Matrix3> hcyc;
    for (int64_t m = -window; m <= window; ++m) {
        const Seed& s = walk.at({SeedLabel::Kind::straight, m});
        Seed c = mutate_cluster(s, 2);
        require(mutate_cluster(c, 2) == s, "direction-2 mutation is not involutive");
        if (!hcyc) hcyc = c.H;
        require(c.H == *hcyc, "cyclic exchange matrix changed");
        walk.seeds.emplace(SeedLabel{SeedLabel::Kind::cyclic, m}, c);
    }

    // c_m = c_{m+2}: only two non-x cluster variables exist
    for (int64_t m = -window; m + 2 <= window; ++m) {
        const Seed& a = walk.at({SeedLabel::Kind::cyclic, m});
        const Seed& b = walk.at({SeedLabel::Kind::cyclic, m + 2});
        require(a.cluster[1] == b.cluster[1], "c_m != c_{m+2}");
    }
    walk.w = walk.at({SeedLabel::Kind::cyclic, 1}).cluster[1];
    walk.z = walk.at({SeedLabel::Kind::cyclic, 0}).cluster[1];

    // horizontal arrows of the cyclic rows: direction 1/3 with a (13) relabel
    for (int64_t m = -window; m + 2 <= window; ++m) {
        const Seed& a = walk.at({SeedLabel::Kind::cyclic, m});
        const Seed& b = walk.at({SeedLabel::Kind::cyclic, m + 2});
        require(relabel(mutate_cluster(a, 1), swap13) == b, "cyclic direction-1 arrow broken");
        require(relabel(mutate_cluster(b, 3), swap13) == a, "cyclic direction-3 arrow broken");
    }
    return walk;
}

}  // namespace acluster
