#include "acluster/straighten.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace acluster {

TropElement xi(int64_t m) {
    if (m >= 1) return trop_of(cf_d(Elem::X(m + 3), Cluster::initial));
    return trop_of(cf_d(Elem::X(m), Cluster::initial));
}

TropElement zeta_minus(int64_t n, int64_t m) {
    if (m >= 1) return min_oplus(xi(m), trop_of({n, n, n}));
    return TropElement::one(3);
}

TropElement zeta_plus(int64_t n, int64_t m) {
    if (m >= 1) return TropElement::one(3);
    return min_oplus(xi(m), trop_of({n, n, n}));
}

TropElement gamma1(int64_t k) { return trop_of({(k + 1) / 2, k / 2, (k + 1) / 2}); }
TropElement gamma2(int64_t k) { return trop_of({k / 2, (k + 1) / 2, k / 2}); }

std::optional<TropElement> gamma3(int64_t k) {
    if (k % 2 != 0) return std::nullopt;
    return trop_of({k / 2, k / 2, k / 2});
}

TropElement eta_minus(int64_t m, int64_t m1) {
    if (m <= 0 && 0 < m + m1) return min_oplus(xi(m), xi(m + m1));
    return TropElement::one(3);
}

TropElement eta_plus(int64_t m, int64_t m1) {
    if (m <= 0 && 0 < m + m1) return TropElement::one(3);
    return min_oplus(xi(m), xi(m + m1));
}

void BasisCombo::add(const BasisElement& b, const YCoeff& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms.emplace(b, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BasisCombo BasisCombo::operator+(const BasisCombo& o) const {
    BasisCombo r = *this;
    for (const auto& [b, c] : o.terms) r.add(b, c);
    return r;
}

BasisCombo BasisCombo::operator*(const YCoeff& c) const {
    BasisCombo r;
    for (const auto& [b, c0] : terms) r.add(b, c0 * c);
    return r;
}

BasisCombo BasisCombo::operator*(const TropElement& m) const {
    BasisCombo r;
    for (const auto& [b, c0] : terms) r.terms.emplace(b, c0 * m);
    return r;
}

std::string BasisCombo::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << b.str();
        first = false;
    }
    return os.str();
}

BasisCombo Gamma(int i, int64_t n) {
    if (i < 1 || i > 3) throw std::invalid_argument("Gamma index out of range");
    BasisCombo r;
    for (int64_t k = 0; k <= n; ++k) {
        std::optional<TropElement> g;
        switch (i) {
            case 1: g = gamma1(k); break;
            case 2: g = gamma2(k); break;
            default: g = gamma3(k); break;
        }
        if (!g) continue;
        YCoeff c(k / 2 + 1, *g);
        r.add(k == n ? BasisElement::One() : BasisElement::UPower(n - k), c);
    }
    return r;
}

namespace {

// single-generator view of a basis element
struct Gen {
    enum class Kind { u, x, w, z } kind;
    int64_t idx = 0;
};

std::optional<Gen> as_generator(const BasisElement& b) {
    switch (b.tag) {
        case BasisElement::Tag::u_power:
            return Gen{Gen::Kind::u, b.n};
        case BasisElement::Tag::cluster_monomial: break;
        default: return std::nullopt;
    }
    auto fs = b.factors();
    if (fs.size() != 1 || fs[0].second != 1) return std::nullopt;
    switch (fs[0].first.kind) {
        case Var::Kind::x: return Gen{Gen::Kind::x, fs[0].first.m};
        case Var::Kind::w: return Gen{Gen::Kind::w, 0};
        case Var::Kind::z: return Gen{Gen::Kind::z, 0};
    }
    return std::nullopt;
}

BasisElement xvar(int64_t m) { return BasisElement::Monomial({{Var::X(m), 1}}); }

BasisCombo pair_uu(int64_t n, int64_t p) {
    if (n < p) std::swap(n, p);
    BasisCombo r;
    if (n == p) {
        r.add(BasisElement::UPower(2 * n), YCoeff::one(3));
        r.add(BasisElement::One(), YCoeff(2, trop_of({n, n, n})));
        return r;
    }
    r.add(BasisElement::UPower(n + p), YCoeff::one(3));
    r.add(BasisElement::UPower(n - p), YCoeff::from(trop_of({p, p, p})));
    return r;
}

BasisCombo pair_ux(int64_t n, int64_t m) {
    BasisCombo r;
    r.add(xvar(m - 2 * n), YCoeff::from(zeta_minus(n, m)));
    r.add(xvar(m + 2 * n), YCoeff::from(zeta_plus(n, m)));
    return r;
}

BasisCombo pair_xx(int64_t m, int64_t mt) {
    if (m > mt) std::swap(m, mt);
    int64_t gap = mt - m;
    if (gap < 3) throw std::runtime_error("not a straightening case");
    if (gap % 2 == 1) {
        int64_t n = (gap - 3) / 2;
        int i = (((m % 2) + 2) % 2 == 0) ? 1 : 2;
        BasisCombo r;
        r.add(BasisElement::Monomial({{Var::X(m + n + 1), 1}, {Var::X(m + n + 2), 1}}),
              YCoeff::from(eta_minus(m, gap)));
        return r + Gamma(i, n) * eta_plus(m, gap);
    }
    int64_t n = gap / 2;  // n >= 2
    bool even = ((m % 2) + 2) % 2 == 0;
    BasisCombo r;
    r.add(BasisElement::Monomial({{Var::X(m + 2 * (n / 2)), 1}, {Var::X(m + 2 * ((n + 1) / 2)), 1}}),
          YCoeff::from(eta_minus(m, gap)));
    // Gamma_3(n-2) times the opposite-parity variable: z for even m, w for odd
    BasisCombo tail;
    for (const auto& [b, c] : Gamma(3, n - 2).terms) {
        if (b.tag == BasisElement::Tag::one) {
            tail.add(BasisElement::Monomial({{even ? Var::Z() : Var::W(), 1}}), c);
        } else {
            tail.add(even ? BasisElement::UZ(b.n, 1) : BasisElement::UW(b.n, 1), c);
        }
    }
    return r + tail * eta_plus(m, gap);
}

BasisCombo pair_xw(int64_t m) {
    if ((((m % 2) + 2) % 2) != 0) throw std::runtime_error("not a straightening case");
    int64_t t = m / 2;
    BasisCombo r;
    if (t >= 1) {
        r.add(xvar(m - 1), YCoeff::from(trop_of({0, 1, 0})));
        r.add(xvar(m + 1), YCoeff::one(3));
    } else if (t == 0) {
        r.add(xvar(-1), YCoeff::one(3));
        r.add(xvar(1), YCoeff::from(trop_of({0, 0, 1})));
    } else {
        r.add(xvar(m - 1), YCoeff::one(3));
        r.add(xvar(m + 1), YCoeff::from(trop_of({1, 0, 1})));
    }
    return r;
}

BasisCombo pair_xz(int64_t m) {
    if ((((m % 2) + 2) % 2) != 1) throw std::runtime_error("not a straightening case");
    int64_t t = (m - 1) / 2;  // exact, m odd
    BasisCombo r;
    if (t >= 1) {
        r.add(xvar(m - 1), YCoeff::from(trop_of({1, 0, 1})));
        r.add(xvar(m + 1), YCoeff::one(3));
    } else if (t == 0) {
        r.add(xvar(0), YCoeff::from(trop_of({1, 0, 0})));
        r.add(xvar(2), YCoeff::one(3));
    } else {
        r.add(xvar(m - 1), YCoeff::one(3));
        r.add(xvar(m + 1), YCoeff::from(trop_of({0, 1, 0})));
    }
    return r;
}

BasisCombo pair_zw() {
    BasisCombo r;
    r.add(BasisElement::UPower(1), YCoeff::one(3));
    r.add(BasisElement::One(), YCoeff::from(trop_of({1, 0, 1})) + YCoeff::from(trop_of({0, 1, 0})));
    return r;
}

}  // namespace

BasisCombo straighten_pair(const BasisElement& a, const BasisElement& b) {
    auto ga = as_generator(a), gb = as_generator(b);
    if (!ga || !gb) throw std::runtime_error("not a straightening case");
    Gen x = *ga, y = *gb;
    if (static_cast<int>(x.kind) > static_cast<int>(y.kind)) std::swap(x, y);
    if (x.kind == Gen::Kind::u && y.kind == Gen::Kind::u) return pair_uu(x.idx, y.idx);
    if (x.kind == Gen::Kind::u && y.kind == Gen::Kind::x) return pair_ux(x.idx, y.idx);
    if (x.kind == Gen::Kind::x && y.kind == Gen::Kind::x) return pair_xx(x.idx, y.idx);
    if (x.kind == Gen::Kind::x && y.kind == Gen::Kind::w) return pair_xw(x.idx);
    if (x.kind == Gen::Kind::x && y.kind == Gen::Kind::z) return pair_xz(x.idx);
    if (x.kind == Gen::Kind::w && y.kind == Gen::Kind::z) return pair_zw();
    throw std::runtime_error("not a straightening case");
}

GenMonomial GenMonomial::parse(const std::string& text) {
    GenMonomial M;
    std::string tok;
    auto flush = [&M](const std::string& t) {
        if (t.empty()) return;
        size_t caret = t.find('^');
        std::string name = t.substr(0, caret);
        int64_t exp = 1;
        if (caret != std::string::npos) exp = std::stoll(t.substr(caret + 1));
        if (exp < 0) throw std::invalid_argument("negative exponent in monomial: " + t);
        if (exp == 0) return;
        if (name == "w") M.w += exp;
        else if (name == "z") M.z += exp;
        else if (name.size() > 1 && (name[0] == 'u' || name[0] == 'x')) {
            std::string idx = name.substr(1);
            if (!idx.empty() && idx[0] == '_') idx = idx.substr(1);
            int64_t i = std::stoll(idx);
            if (name[0] == 'u') {
                if (i < 1) throw std::invalid_argument("u index must be >= 1: " + t);
                M.u[i] += exp;
            } else {
                M.x[i] += exp;
            }
        } else {
            throw std::invalid_argument("cannot parse factor: " + t);
        }
    };
    for (char ch : text) {
        if (ch == '*' || ch == ' ') {
            flush(tok);
            tok.clear();
        } else {
            tok.push_back(ch);
        }
    }
    flush(tok);
    return M;
}

bool GenMonomial::operator<(const GenMonomial& o) const {
    return std::tie(u, x, w, z) < std::tie(o.u, o.x, o.w, o.z);
}

std::optional<BasisElement> GenMonomial::classify() const {
    if (empty()) return BasisElement::One();
    if (!u.empty()) {
        if (u.size() != 1 || u.begin()->second != 1 || !x.empty()) return std::nullopt;
        if (w > 0 && z > 0) return std::nullopt;
        int64_t n = u.begin()->first;
        if (w > 0) return BasisElement::UW(n, w);
        if (z > 0) return BasisElement::UZ(n, z);
        return BasisElement::UPower(n);
    }
    std::vector<std::pair<Var, int64_t>> fs;
    for (const auto& [m, e] : x) fs.push_back({Var::X(m), e});
    if (w > 0) fs.push_back({Var::W(), w});
    if (z > 0) fs.push_back({Var::Z(), z});
    try {
        return BasisElement::Monomial(fs);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string GenMonomial::str() const {
    if (empty()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& name, int64_t e) {
        if (!first) os << "*";
        os << name;
        if (e != 1) os << "^" << e;
        first = false;
    };
    for (const auto& [n, e] : u) emit("u_" + std::to_string(n), e);
    for (const auto& [m, e] : x) emit("x_" + std::to_string(m), e);
    if (w) emit("w", w);
    if (z) emit("z", z);
    return os.str();
}

Vec3 multi_degree(const GenMonomial& M) {
    Vec3 mu{0, 0, 0};
    for (const auto& [n, e] : M.u) mu[0] += e;
    for (const auto& [m, e] : M.x) mu[0] += e;
    mu[0] += M.w + M.z;
    if (!M.x.empty()) {
        mu[1] = M.x.rbegin()->first - M.x.begin()->first;
        mu[2] = M.x.begin()->second + M.x.rbegin()->second;
    }
    return mu;
}

namespace {

void splice(std::deque<std::pair<GenMonomial, YCoeff>>& work, GenMonomial rest, const YCoeff& coeff,
            const BasisCombo& combo) {
    for (const auto& [b, c] : combo.terms) {
        GenMonomial next = rest;
        switch (b.tag) {
            case BasisElement::Tag::one: break;
            case BasisElement::Tag::u_power: next.u[b.n] += 1; break;
            case BasisElement::Tag::u_w:
                next.u[b.n] += 1;
                next.w += b.k;
                break;
            case BasisElement::Tag::u_z:
                next.u[b.n] += 1;
                next.z += b.k;
                break;
            case BasisElement::Tag::cluster_monomial:
                for (const auto& [v, e] : b.factors()) {
                    switch (v.kind) {
                        case Var::Kind::x: next.x[v.m] += e; break;
                        case Var::Kind::w: next.w += e; break;
                        case Var::Kind::z: next.z += e; break;
                    }
                }
                break;
        }
        work.push_back({std::move(next), coeff * c});
    }
}

void erase_zero(std::map<int64_t, int64_t>& m, int64_t key) {
    auto it = m.find(key);
    if (it != m.end() && it->second == 0) m.erase(it);
}

}  // namespace

BasisCombo expand_rewrite(const GenMonomial& M) {
    BasisCombo out;
    std::deque<std::pair<GenMonomial, YCoeff>> work;
    work.push_back({M, YCoeff::one(3)});
    int64_t steps = 0;
    const int64_t cap = 2000000;
    while (!work.empty()) {
        if (++steps > cap) throw std::runtime_error("straightening did not terminate within the step cap");
        auto [cur, coeff] = work.front();
        work.pop_front();
        if (auto b = cur.classify()) {
            out.add(*b, coeff);
            continue;
        }
        int64_t ucount = 0;
        for (const auto& [n, e] : cur.u) ucount += e;
        if (ucount >= 2) {
            auto it = cur.u.rbegin();
            int64_t n1 = it->first;
            int64_t n2 = (it->second >= 2) ? n1 : std::next(it)->first;
            GenMonomial rest = cur;
            rest.u[n1] -= 1;
            rest.u[n2] -= 1;
            erase_zero(rest.u, n1);
            erase_zero(rest.u, n2);
            splice(work, rest, coeff, pair_uu(n1, n2));
            continue;
        }
        if (ucount == 1 && !cur.x.empty()) {
            int64_t n = cur.u.begin()->first;
            int64_t m = cur.x.begin()->first;
            GenMonomial rest = cur;
            rest.u.clear();
            rest.x[m] -= 1;
            erase_zero(rest.x, m);
            splice(work, rest, coeff, pair_ux(n, m));
            continue;
        }
        if (cur.w > 0 && cur.z > 0) {
            GenMonomial rest = cur;
            rest.w -= 1;
            rest.z -= 1;
            splice(work, rest, coeff, pair_zw());
            continue;
        }
        auto find_parity = [&cur](int64_t parity) -> std::optional<int64_t> {
            for (const auto& [m, e] : cur.x)
                if ((((m % 2) + 2) % 2) == parity) return m;
            return std::nullopt;
        };
        if (cur.w > 0) {
            if (auto m = find_parity(0)) {
                GenMonomial rest = cur;
                rest.w -= 1;
                rest.x[*m] -= 1;
                erase_zero(rest.x, *m);
                splice(work, rest, coeff, pair_xw(*m));
                continue;
            }
        }
        if (cur.z > 0) {
            if (auto m = find_parity(1)) {
                GenMonomial rest = cur;
                rest.z -= 1;
                rest.x[*m] -= 1;
                erase_zero(rest.x, *m);
                splice(work, rest, coeff, pair_xz(*m));
                continue;
            }
        }
        if (!cur.x.empty() && cur.x.rbegin()->first - cur.x.begin()->first >= 3) {
            int64_t m1 = cur.x.begin()->first;
            int64_t mt = cur.x.rbegin()->first;
            GenMonomial rest = cur;
            rest.x[m1] -= 1;
            rest.x[mt] -= 1;
            erase_zero(rest.x, m1);
            erase_zero(rest.x, mt);
            splice(work, rest, coeff, pair_xx(m1, mt));
            continue;
        }
        throw std::logic_error("no straightening rule applies to " + cur.str());
    }
    return out;
}

namespace {

// strictly positive on the cone spanned by the columns of H, so <_H descent
// strictly increases it; picking the minimum guarantees progress
int64_t cone_weight(const Vec3& t) { return 2 * t[0] - t[1] - t[2]; }

}  // namespace

BasisCombo expand_eliminate(const ClusterLaurent& v) {
    if (v.ref() != Cluster::initial)
        throw std::invalid_argument("elimination expands initial-cluster values");
    // handle a general input per homogeneous component of the principal grading
    std::map<Vec3, ClusterLaurent> parts;
    for (const auto& [x, c] : v.terms()) {
        for (const auto& [m, k] : c.terms()) {
            Vec3 deg = principal_degree(x, m, kInitialH);
            auto [it, fresh] = parts.try_emplace(deg, Cluster::initial);
            it->second.add_term(x, YCoeff(k, m));
        }
    }
    BasisCombo out;
    const int64_t cap = 100000;
    for (auto& [deg, part] : parts) {
        int64_t steps = 0;
        while (!part.is_zero()) {
            if (++steps > cap) throw std::runtime_error("elimination failed to shrink the remainder");
            auto best = part.terms().begin();
            for (auto it = part.terms().begin(); it != part.terms().end(); ++it)
                if (cone_weight(it->first) < cone_weight(best->first)) best = it;
            Vec3 g = best->first;
            YCoeff coeff = best->second;
            BasisElement b = g_inverse(g, Cluster::initial);
            ClusterLaurent expansion = basis_to_laurent(b, Cluster::initial);
            if (!expansion.coeff_at(g).is_one())
                throw std::logic_error("leading coefficient of a basis element is not 1");
            part = part - expansion * coeff;
            out.add(b, coeff);
        }
    }
    return out;
}

ClusterLaurent combo_to_laurent(const BasisCombo& combo, Cluster c) {
    ClusterLaurent r(c);
    for (const auto& [b, coeff] : combo.terms) r = r + basis_to_laurent(b, c) * coeff;
    return r;
}

}  // namespace acluster
