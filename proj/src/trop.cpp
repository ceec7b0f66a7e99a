#include "acluster/trop.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace acluster {

std::string vec3_str(const Vec3& v) {
    std::ostringstream os;
    os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
    return os.str();
}

int64_t binom(int64_t a, int64_t b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    int64_t r = 1;
    for (int64_t i = 1; i <= b; ++i) r = checked_mul(r, a - b + i) / i;
    return r;
}

TropElement TropElement::generator(int rank, int i) {
    std::vector<int64_t> e(rank, 0);
    e.at(i) = 1;
    return TropElement(std::move(e));
}

bool TropElement::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int64_t e) { return e == 0; });
}

TropElement TropElement::operator*(const TropElement& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("tropical rank mismatch");
    std::vector<int64_t> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(exps_[i], o.exps_[i]);
    return TropElement(std::move(e));
}

TropElement TropElement::inverse() const {
    std::vector<int64_t> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
    return TropElement(std::move(e));
}

TropElement TropElement::pow(int64_t k) const {
    std::vector<int64_t> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(exps_[i], k);
    return TropElement(std::move(e));
}

bool TropElement::operator<(const TropElement& o) const {
    if (rank() != o.rank()) return rank() < o.rank();
    return exps_ < o.exps_;
}

std::string TropElement::str(const std::string& gen) const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (any) os << "*";
        os << gen << (i + 1);
        if (exps_[i] != 1) os << "^" << exps_[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

TropElement trop_oplus(const TropElement& a, const TropElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("tropical rank mismatch");
    std::vector<int64_t> e(a.exps().size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps()[i], b.exps()[i]);
    return TropElement(std::move(e));
}

YCoeff::YCoeff(int64_t c, const TropElement& m) {
    if (c != 0) terms_[m] = c;
}

bool YCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 && terms_.begin()->first.is_one();
}

void YCoeff::add_term(const TropElement& m, int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

YCoeff YCoeff::operator+(const YCoeff& o) const {
    YCoeff r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

YCoeff& YCoeff::operator+=(const YCoeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

YCoeff YCoeff::operator-(const YCoeff& o) const {
    YCoeff r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

YCoeff YCoeff::operator-() const {
    YCoeff r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

YCoeff YCoeff::operator*(const YCoeff& o) const {
    YCoeff r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, checked_mul(c1, c2));
    return r;
}

YCoeff YCoeff::operator*(const TropElement& m) const {
    YCoeff r;
    for (const auto& [m1, c1] : terms_) r.terms_[m1 * m] = c1;
    return r;
}

YCoeff YCoeff::operator*(int64_t c) const {
    YCoeff r;
    if (c == 0) return r;
    for (const auto& [m1, c1] : terms_) r.terms_[m1] = checked_mul(c1, c);
    return r;
}

TropElement YCoeff::eval_trop() const {
    if (terms_.empty()) throw std::invalid_argument("tropical evaluation of zero is undefined");
    std::optional<TropElement> acc;
    for (const auto& [m, c] : terms_) {
        if (c <= 0) throw std::invalid_argument("tropical evaluation needs positive integer coefficients");
        acc = acc ? trop_oplus(*acc, m) : m;
    }
    return *acc;
}

TropElement YCoeff::eval_trop_at(std::span<const TropElement> args) const {
    if (terms_.empty()) throw std::invalid_argument("tropical evaluation of zero is undefined");
    std::optional<TropElement> acc;
    for (const auto& [m, c] : terms_) {
        if (c <= 0) throw std::invalid_argument("tropical evaluation needs positive integer coefficients");
        if (static_cast<int>(args.size()) != m.rank())
            throw std::invalid_argument("tropical evaluation arity mismatch");
        TropElement v = args.empty() ? TropElement() : TropElement::one(args[0].rank());
        for (int i = 0; i < m.rank(); ++i) v = v * args[i].pow(m.exp(i));
        acc = acc ? trop_oplus(*acc, v) : v;
    }
    return *acc;
}

std::string YCoeff::str(const std::string& gen) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        int64_t a = c > 0 ? c : -c;
        if (a != 1 || m.is_one()) {
            os << a;
            if (!m.is_one()) os << "*";
        }
        if (!m.is_one()) os << m.str(gen);
        first = false;
    }
    return os.str();
}

namespace {

// shift so every variable has minimum exponent 0; returns the shift
TropElement normalize_min(const YCoeff& p, int rank) {
    std::vector<int64_t> mn(rank, 0);
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < rank; ++i)
            mn[i] = first ? m.exp(i) : std::min(mn[i], m.exp(i));
        first = false;
    }
    return TropElement(std::move(mn));
}

}  // namespace

std::optional<YCoeff> ycoeff_try_div(const YCoeff& num, const YCoeff& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero in ZP");
    if (num.is_zero()) return YCoeff::zero();
    int rank = num.terms().begin()->first.rank();
    TropElement sn = normalize_min(num, rank);
    TropElement sd = normalize_min(den, rank);
    YCoeff r = num * sn.inverse();
    YCoeff d = den * sd.inverse();
    // lex-leading term of the normalized divisor
    const auto& [eb, cb] = *d.terms().rbegin();
    YCoeff q;
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms().rbegin();
        if (cr % cb != 0) return std::nullopt;
        TropElement t = er * eb.inverse();
        for (int64_t e : t.exps())
            if (e < 0) return std::nullopt;
        YCoeff step(cr / cb, t);
        q += step;
        r = r - step * d;
    }
    return q * (sn * sd.inverse());
}

}  // namespace acluster
