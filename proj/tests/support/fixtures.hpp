#pragma once

#include "delzant/geometry.hpp"
#include "delzant/polytope3.hpp"

#include <string>
#include <vector>

namespace delzant::test {

Rational q(long long num, long long den = 1);
Vec2 v2(long long x, long long y);
IntVec2 iv(long long x, long long y);
DelzantPolygon poly(std::initializer_list<std::pair<Rational, Rational>> pts);

DelzantPolygon unit_square();
DelzantPolygon unit_triangle();
DelzantPolygon small_triangle();  // (0,0),(1/2,0),(0,1/2)

// (1,0),(2,0),(2,1),(1,2),(0,2),(0,1): edges (1,0),(-1,1),(0,-1) close up.
DelzantPolygon subpolygon_hexagon();

// a x b rectangle with corners (0,0) and (a,b) cut at depths s and t.
DelzantPolygon three_pair_hexagon(const Rational& a, const Rational& b, const Rational& s, const Rational& t);

// three_pair_hexagon with the corner (a,0) cut at depth u, then the new
// corner (a,u) cut at depth v < u. Normals (1,-1), (2,-1) stay unpaired.
DelzantPolygon three_pair_octagon(const Rational& a, const Rational& b, const Rational& s, const Rational& t,
                                  const Rational& u, const Rational& v);

Polytope3 unit_cube();
Polytope3 standard_simplex();
Polytope3 prism(const DelzantPolygon& base, const Rational& height);
Polytope3 chopped_cube();  // unit cube with the corner (1,1,1) cut at depth 1/2

std::string describe(const DelzantPolygon& p);

}  // namespace delzant::test
