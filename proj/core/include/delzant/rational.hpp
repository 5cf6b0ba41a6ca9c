#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace delzant {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

// "p/q" with q > 0, always including the denominator ("2/1").
std::string to_string(const Rational& value);

// Accepts "p/q" or a bare integer "p". Throws Error(Parse) on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

std::int64_t to_int64(const Integer& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct IntVec2 {
    Integer x;
    Integer y;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
inline Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
inline Vec2& operator+=(Vec2& a, const Vec2& b) {
    a.x += b.x;
    a.y += b.y;
    return a;
}

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline Integer cross(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }
inline Integer dot(const IntVec2& a, const IntVec2& b) { return a.x * b.x + a.y * b.y; }
inline IntVec2 operator+(const IntVec2& a, const IntVec2& b) { return {a.x + b.x, a.y + b.y}; }
inline IntVec2 operator-(const IntVec2& a) { return {-a.x, -a.y}; }

inline Vec2 to_vec(const IntVec2& v) { return {Rational(v.x), Rational(v.y)}; }

// Lexicographic (x, then y).
bool lex_less(const Vec2& a, const Vec2& b);

// Strict weak order on nonzero vectors by polar angle in [0, 2pi).
bool angle_less(const Vec2& a, const Vec2& b);

// Rational vector = length * direction with direction primitive in Z^2 and
// length > 0. Throws Error(InvalidInput) for the zero vector.
std::pair<IntVec2, Rational> primitive_decomposition(const Vec2& v);

// Same as above for an integer vector; returns the primitive part.
IntVec2 primitive(const IntVec2& v);

// Primitive with first nonzero coordinate positive.
IntVec2 canonical_unsigned(const IntVec2& v);

bool int_less(const IntVec2& a, const IntVec2& b);

struct Vec3 {
    Rational x;
    Rational y;
    Rational z;

    friend bool operator==(const Vec3&, const Vec3&) = default;
};

struct IntVec3 {
    Integer x;
    Integer y;
    Integer z;

    friend bool operator==(const IntVec3&, const IntVec3&) = default;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3 to_vec(const IntVec3& v) { return {Rational(v.x), Rational(v.y), Rational(v.z)}; }

bool lex_less(const Vec3& a, const Vec3& b);

// Primitive integer vector positively proportional to a nonzero rational one.
IntVec3 primitive_direction(const Vec3& v);

}  // namespace delzant
