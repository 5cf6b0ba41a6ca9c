#include "delzant/rational.hpp"

#include "delzant/error.hpp"

#include <cctype>
#include <limits>

namespace delzant {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::Structural: return "structural";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Infeasible: return "infeasible";
        case ErrorKind::Inconsistent: return "inconsistent";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

std::string to_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(whole) + "\"");
    }
    Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw Error(ErrorKind::Parse, "malformed rational \"" + std::string(text) + "\"");
    }
    Integer den(std::string{den_text});
    if (den == 0) {
        throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(num, den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::int64_t to_int64(const Integer& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorKind::Unsupported, "integer " + value.str() + " exceeds 64 bits");
    }
    return value.convert_to<std::int64_t>();
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

namespace {
int half_plane(const Vec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }
}  // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_plane(a);
    int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

std::pair<IntVec2, Rational> primitive_decomposition(const Vec2& v) {
    if (v.x == 0 && v.y == 0) {
        throw Error(ErrorKind::InvalidInput, "zero vector has no primitive direction");
    }
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer scale = lcm(denominator(v.x), denominator(v.y));
    Integer ix = numerator(v.x) * (scale / denominator(v.x));
    Integer iy = numerator(v.y) * (scale / denominator(v.y));
    Integer g = gcd(ix, iy);
    IntVec2 dir{ix / g, iy / g};
    Rational length = Rational(g, scale);
    return {std::move(dir), std::move(length)};
}

IntVec2 primitive(const IntVec2& v) {
    if (v.x == 0 && v.y == 0) {
        throw Error(ErrorKind::InvalidInput, "zero vector has no primitive direction");
    }
    Integer g = gcd(v.x, v.y);
    if (g < 0) g = -g;
    return {v.x / g, v.y / g};
}

IntVec2 canonical_unsigned(const IntVec2& v) {
    IntVec2 p = primitive(v);
    if (p.x < 0 || (p.x == 0 && p.y < 0)) return -p;
    return p;
}

bool int_less(const IntVec2& a, const IntVec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

IntVec3 primitive_direction(const Vec3& v) {
    if (v.x == 0 && v.y == 0 && v.z == 0) {
        throw Error(ErrorKind::InvalidInput, "zero vector has no primitive direction");
    }
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer scale = lcm(lcm(denominator(v.x), denominator(v.y)), denominator(v.z));
    Integer ix = numerator(v.x) * (scale / denominator(v.x));
    Integer iy = numerator(v.y) * (scale / denominator(v.y));
    Integer iz = numerator(v.z) * (scale / denominator(v.z));
    Integer g = gcd(gcd(ix, iy), iz);
    if (g < 0) g = -g;
    return {ix / g, iy / g, iz / g};
}

}  // namespace delzant
