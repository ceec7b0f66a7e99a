#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acluster/types.hpp"

namespace acluster {

// Monomial y_1^{e_1} ... y_r^{e_r} in the tropical semifield Trop(y_1..y_r).
// Rank 0 is the trivial semifield {1}. The auxiliary addition is
// componentwise min of exponent vectors; multiplication adds them.
class TropElement {
public:
    TropElement() = default;
    explicit TropElement(std::vector<int64_t> exps) : exps_(std::move(exps)) {}

    static TropElement one(int rank) { return TropElement(std::vector<int64_t>(rank, 0)); }
    static TropElement generator(int rank, int i);

    int rank() const { return static_cast<int>(exps_.size()); }
    const std::vector<int64_t>& exps() const { return exps_; }
    int64_t exp(int i) const { return exps_.at(i); }
    bool is_one() const;

    TropElement operator*(const TropElement& o) const;
    TropElement inverse() const;
    TropElement pow(int64_t k) const;

    bool operator==(const TropElement& o) const { return exps_ == o.exps_; }
    bool operator!=(const TropElement& o) const { return !(*this == o); }
    bool operator<(const TropElement& o) const;  // lexicographic, for map keys

    std::string str(const std::string& gen = "y") const;

private:
    std::vector<int64_t> exps_;
};

// componentwise min of exponent vectors
TropElement trop_oplus(const TropElement& a, const TropElement& b);

// Element of the group ring ZP over Trop(y_1..y_r): a finite integer
// combination of tropical monomials.  Zero coefficients are never stored;
// the empty map is the ring zero.
class YCoeff {
public:
    YCoeff() = default;
    YCoeff(int64_t c, const TropElement& m);
    static YCoeff zero() { return YCoeff(); }
    static YCoeff one(int rank) { return YCoeff(1, TropElement::one(rank)); }
    static YCoeff from(const TropElement& m) { return YCoeff(1, m); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t size() const { return terms_.size(); }
    const std::map<TropElement, int64_t>& terms() const { return terms_; }

    void add_term(const TropElement& m, int64_t c);

    YCoeff operator+(const YCoeff& o) const;
    YCoeff operator-(const YCoeff& o) const;
    YCoeff operator*(const YCoeff& o) const;
    YCoeff operator-() const;
    YCoeff& operator+=(const YCoeff& o);
    YCoeff operator*(const TropElement& m) const;
    YCoeff operator*(int64_t c) const;

    bool operator==(const YCoeff& o) const { return terms_ == o.terms_; }
    bool operator!=(const YCoeff& o) const { return !(*this == o); }
    bool operator<(const YCoeff& o) const { return terms_ < o.terms_; }

    // Tropical evaluation at the semifield generators: the oplus over all
    // monomials. Undefined (throws) unless every integer coefficient is > 0.
    TropElement eval_trop() const;
    // Evaluation at arbitrary semifield elements args[i] substituted for y_i.
    TropElement eval_trop_at(std::span<const TropElement> args) const;

    std::string str(const std::string& gen = "y") const;

private:
    std::map<TropElement, int64_t> terms_;
};

// Exact division in ZP (a Laurent-polynomial ring over Z); nullopt when the
// division leaves a remainder.
std::optional<YCoeff> ycoeff_try_div(const YCoeff& num, const YCoeff& den);

}  // namespace acluster
