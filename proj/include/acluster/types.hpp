#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace acluster {

using Vec3 = std::array<int64_t, 3>;
using Matrix3 = std::array<std::array<int64_t, 3>, 3>;

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exponent arithmetic");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in exponent arithmetic");
    return r;
}

inline int64_t pos_part(int64_t c) { return c > 0 ? c : 0; }
inline int64_t sg(int64_t c) { return c > 0 ? 1 : (c < 0 ? -1 : 0); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(int64_t c, const Vec3& a) {
    return {checked_mul(c, a[0]), checked_mul(c, a[1]), checked_mul(c, a[2])};
}
inline Vec3 negate(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

std::string vec3_str(const Vec3& v);

// binomial with C(a,b) = 0 unless 0 <= b <= a
int64_t binom(int64_t a, int64_t b);

}  // namespace acluster
