#include "fixtures.hpp"

#include <sstream>

namespace delzant::test {

Rational q(long long num, long long den) { return Rational(num) / Rational(den); }
Vec2 v2(long long x, long long y) { return {Rational(x), Rational(y)}; }
IntVec2 iv(long long x, long long y) { return {Integer(x), Integer(y)}; }

DelzantPolygon poly(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Vec2> v;
    for (const auto& [x, y] : pts) v.push_back({x, y});
    return DelzantPolygon(std::move(v));
}

DelzantPolygon unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
DelzantPolygon unit_triangle() { return poly({{0, 0}, {1, 0}, {0, 1}}); }
DelzantPolygon small_triangle() { return poly({{0, 0}, {q(1, 2), 0}, {0, q(1, 2)}}); }

DelzantPolygon subpolygon_hexagon() { return poly({{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}); }

DelzantPolygon three_pair_hexagon(const Rational& a, const Rational& b, const Rational& s, const Rational& t) {
    return poly({{s, 0}, {a, 0}, {a, b - t}, {a - t, b}, {0, b}, {0, s}});
}

DelzantPolygon three_pair_octagon(const Rational& a, const Rational& b, const Rational& s, const Rational& t,
                                  const Rational& u, const Rational& v) {
    return poly({{s, 0}, {a - u, 0}, {a - v, u - v}, {a, u + v}, {a, b - t}, {a - t, b}, {0, b}, {0, s}});
}

Polytope3 unit_cube() {
    std::vector<Vec3> v;
    for (int i = 0; i < 8; ++i) v.push_back({Rational(i & 1), Rational((i >> 1) & 1), Rational((i >> 2) & 1)});
    return Polytope3(v, {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}});
}

Polytope3 standard_simplex() {
    std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    return Polytope3(v, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

Polytope3 prism(const DelzantPolygon& base, const Rational& height) {
    const auto& b = base.vertices();
    const std::size_t n = b.size();
    std::vector<Vec3> v;
    for (const auto& p : b) v.push_back({p.x, p.y, Rational(0)});
    for (const auto& p : b) v.push_back({p.x, p.y, height});
    std::vector<std::vector<std::size_t>> facets;
    std::vector<std::size_t> bottom, top;
    for (std::size_t i = 0; i < n; ++i) {
        bottom.push_back(n - 1 - i);
        top.push_back(n + i);
        facets.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
    }
    facets.push_back(bottom);
    facets.push_back(top);
    return Polytope3(v, facets);
}

Polytope3 chopped_cube() {
    const Rational h = q(1, 2);
    // 0..6: cube vertices other than (1,1,1); 7..9: the cut triangle
    std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1},
                        {h, 1, 1}, {1, h, 1}, {1, 1, h}};
    return Polytope3(v, {
                            {0, 2, 3, 1},        // z = 0
                            {0, 1, 5, 4},        // y = 0
                            {0, 4, 6, 2},        // x = 0
                            {1, 3, 9, 8, 5},     // x = 1
                            {2, 6, 7, 9, 3},     // y = 1
                            {4, 5, 8, 7, 6},     // z = 1
                            {7, 8, 9},           // x + y + z = 5/2
                        });
}

std::string describe(const DelzantPolygon& p) {
    std::ostringstream out;
    for (const auto& v : p.vertices()) out << '(' << to_string(v.x) << ", " << to_string(v.y) << ") ";
    return out.str();
}

}  // namespace delzant::test
