#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace delzant::oracle {

namespace {

bool point_less(const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Integer igcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

void census_walk(const DelzantPolygon& p, int remaining, const std::vector<Rational>& depths,
                 std::map<std::size_t, std::uint64_t>& histogram) {
    if (remaining == 0) {
        ++histogram[parallel_pairs(p.vertices())];
        return;
    }
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational in_len = lattice_split(p.vertices()[i] - p.vertices()[(i + n - 1) % n]).first;
        const Rational out_len = lattice_split(p.vertices()[(i + 1) % n] - p.vertices()[i]).first;
        for (const auto& t : depths) {
            if (t < in_len && t < out_len) census_walk(chop(p, {i, t}), remaining - 1, depths, histogram);
        }
    }
}

}  // namespace

Rational fan_area(const std::vector<Vec2>& v) {
    Rational twice = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - v[0], v[i + 1] - v[0]);
    return twice / 2;
}

std::pair<Rational, IntVec2> lattice_split(const Vec2& v) {
    Integer den = boost::multiprecision::lcm(boost::multiprecision::denominator(v.x),
                                             boost::multiprecision::denominator(v.y));
    Integer x = boost::multiprecision::numerator(v.x) * (den / boost::multiprecision::denominator(v.x));
    Integer y = boost::multiprecision::numerator(v.y) * (den / boost::multiprecision::denominator(v.y));
    Integer g = igcd(x, y);
    return {Rational(g) / Rational(den), IntVec2{x / g, y / g}};
}

std::vector<Vec2> edge_vectors(const std::vector<Vec2>& v) {
    std::vector<Vec2> e;
    for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
    return e;
}

bool is_delzant(const std::vector<Vec2>& v) {
    const auto e = edge_vectors(v);
    for (std::size_t i = 0; i < e.size(); ++i) {
        IntVec2 in = lattice_split(e[(i + e.size() - 1) % e.size()]).second;
        IntVec2 out = lattice_split(e[i]).second;
        Integer det = in.x * out.y - in.y * out.x;
        if (det != 1 && det != -1) return false;
    }
    return true;
}

std::size_t parallel_pairs(const std::vector<Vec2>& v) {
    const auto e = edge_vectors(v);
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (cross(e[i], e[j]) == 0) ++count;
        }
    }
    return count;
}

std::vector<Vec2> angle_sort_polygon(const std::vector<Vec2>& edges, const IntVec2& anchor) {
    const Vec2& first = edges.front();
    // Outward normal of a CCW edge (x, y) points along (y, -x).
    const bool ccw = dot(to_vec(anchor), Vec2{first.y, -first.x}) > 0;
    auto angle = [](const Vec2& e) { return std::atan2(to_double(e.y), to_double(e.x)); };
    const double a0 = angle(first);
    auto offset = [&](const Vec2& e) {
        double d = ccw ? angle(e) - a0 : a0 - angle(e);
        while (d < 0) d += 2 * M_PI;
        while (d >= 2 * M_PI) d -= 2 * M_PI;
        return d;
    };
    std::vector<Vec2> rest(edges.begin() + 1, edges.end());
    std::sort(rest.begin(), rest.end(), [&](const Vec2& a, const Vec2& b) { return offset(a) < offset(b); });
    std::vector<Vec2> pts{Vec2{0, 0}};
    Vec2 cur = first;
    for (const auto& e : rest) {
        pts.push_back(cur);
        cur += e;
    }
    if (!ccw) std::reverse(pts.begin() + 1, pts.end());
    return pts;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;
    std::vector<Vec2> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = hull.size();
        for (const auto& p : points) {
            while (hull.size() >= base + 2 &&
                   cross(hull[hull.size() - 1] - hull[hull.size() - 2], p - hull[hull.size() - 2]) <= 0) {
                hull.pop_back();
            }
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(points.begin(), points.end());
    }
    return hull;
}

std::vector<Vec2> halfplane_vertices(const HalfSpaceSystem& system) {
    std::vector<Vec2> pts;
    const auto& h = system.entries;
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            Rational a(h[i].normal[0]), b(h[i].normal[1]), c(h[j].normal[0]), d(h[j].normal[1]);
            Rational det = a * d - b * c;
            if (det == 0) continue;
            Vec2 x{(h[i].offset * d - b * h[j].offset) / det, (a * h[j].offset - c * h[i].offset) / det};
            bool feasible = std::all_of(h.begin(), h.end(), [&](const HalfSpace& s) {
                return Rational(s.normal[0]) * x.x + Rational(s.normal[1]) * x.y <= s.offset;
            });
            if (feasible) pts.push_back(x);
        }
    }
    return convex_hull(pts);
}

std::pair<Rational, Rational> area_quadratic(const ThreePairFamily& family) {
    const Rational t1 = (family.lower + family.upper) / 2 == 0 ? family.upper / 2 : (family.lower + family.upper) / 2;
    const auto e0 = family.edges_at(Rational(0));
    const auto e1 = family.edges_at(t1);
    // Order the edges as the polygon at t = 0 traverses them.
    const auto verts = family.polygon_at(Rational(0)).vertices();
    const auto ordered = edge_vectors(verts);
    std::vector<Vec2> a, b;
    for (const auto& e : ordered) {
        std::size_t k = 0;
        while (!(e0[k] == e)) ++k;
        a.push_back(e0[k]);
        b.push_back((1 / t1) * (e1[k] - e0[k]));
    }
    Rational A = 0, B = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            A += cross(a[i], b[j]) + cross(b[i], a[j]);
            B += cross(b[i], b[j]);
        }
    }
    return {A / 2, B / 2};
}

std::map<std::size_t, std::uint64_t> chop_census(int d, int bound) {
    std::vector<Rational> depths;
    for (int p = 1; p <= bound; ++p) {
        for (int qd = 1; qd <= bound; ++qd) depths.push_back(Rational(p) / Rational(qd));
    }
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
    std::map<std::size_t, std::uint64_t> histogram;
    for (int m = 0; m <= bound; ++m) {
        for (int w = 1; w <= bound; ++w) {
            for (int h = 1; h <= bound; ++h) {
                census_walk(hirzebruch(static_cast<unsigned>(m), Rational(w), Rational(h)), d - 4, depths, histogram);
            }
        }
    }
    return histogram;
}

std::vector<Vec2> random_convex(std::mt19937_64& rng, std::size_t max_edges) {
    std::uniform_int_distribution<int> coord(-12, 12);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<std::size_t> count(3, 14);
    for (;;) {
        std::vector<Vec2> pts;
        const std::size_t n = count(rng);
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back({Rational(coord(rng)) / den(rng), Rational(coord(rng)) / den(rng)});
        }
        auto hull = convex_hull(pts);
        if (hull.size() >= 3 && hull.size() <= max_edges) return hull;
    }
}

bool same_set(std::vector<Vec2> a, std::vector<Vec2> b) {
    std::sort(a.begin(), a.end(), point_less);
    std::sort(b.begin(), b.end(), point_less);
    return a == b;
}

}  // namespace delzant::oracle
