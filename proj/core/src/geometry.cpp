#include "delzant/geometry.hpp"

#include "delzant/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace delzant {

namespace {

Rational signed_double_area(const std::vector<Vec2>& vertices) {
    Rational sum = 0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        sum += cross(vertices[i], vertices[(i + 1) % n]);
    }
    return sum;
}

std::string index_label(std::size_t i) { return "vertex " + std::to_string(i); }

}  // namespace

DelzantPolygon::DelzantPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) {
        throw Error(ErrorKind::Structural, "polygon needs at least 3 vertices, got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i] == vertices_[(i + 1) % n]) {
            throw Error(ErrorKind::Structural, "repeated vertex at " + index_label(i));
        }
    }
    Rational twice_area = signed_double_area(vertices_);
    if (twice_area == 0) throw Error(ErrorKind::Structural, "polygon has zero area");
    if (twice_area < 0) {
        std::reverse(vertices_.begin() + 1, vertices_.end());
        reversed_ = true;
    }

    edges_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 v = vertices_[(i + 1) % n] - vertices_[i];
        auto [dir, len] = primitive_decomposition(v);
        IntVec2 normal{dir.y, -dir.x};
        edges_.push_back(Edge{std::move(v), std::move(dir), std::move(len), std::move(normal)});
    }

    // Strictly left turns everywhere and exactly one wrap of the edge angles
    // rules out both reflex vertices and self-overlapping star shapes.
    std::size_t wraps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& cur = edges_[i].vector;
        const Vec2& next = edges_[(i + 1) % n].vector;
        if (cross(cur, next) <= 0) {
            throw Error(ErrorKind::Structural, "polygon is not strictly convex at " + index_label((i + 1) % n));
        }
        if (angle_less(next, cur)) ++wraps;
    }
    if (wraps != 1) throw Error(ErrorKind::Structural, "polygon winds more than once");
}

bool polygon_less(const DelzantPolygon& a, const DelzantPolygon& b) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end(), [](const Vec2& x, const Vec2& y) {
        return lex_less(x, y);
    });
}

IntVec2 primitive_outward_normal(const Vec2& edge_vector) {
    if (edge_vector.x == 0 && edge_vector.y == 0) {
        throw Error(ErrorKind::InvalidInput, "zero edge vector has no outward normal");
    }
    auto [dir, len] = primitive_decomposition(edge_vector);
    return {dir.y, -dir.x};
}

ValidationReport validate_delzant(const DelzantPolygon& polygon) {
    ValidationReport report;
    const auto& edges = polygon.edges();
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec2& incoming = edges[(i + n - 1) % n].direction;
        const IntVec2& outgoing = edges[i].direction;
        Integer det = cross(outgoing, incoming);
        if (det != 1 && det != -1) {
            report.valid = false;
            report.defects.push_back({i, polygon.vertices()[i], det});
        }
    }
    return report;
}

Rational area(const DelzantPolygon& polygon) { return signed_double_area(polygon.vertices()) / 2; }

DelzantPolygon normalize_translation(const DelzantPolygon& polygon) {
    const auto& v = polygon.vertices();
    auto it = std::min_element(v.begin(), v.end(), [](const Vec2& a, const Vec2& b) { return lex_less(a, b); });
    const Vec2 origin = *it;
    std::vector<Vec2> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(v[(static_cast<std::size_t>(it - v.begin()) + k) % v.size()] - origin);
    }
    return DelzantPolygon(std::move(out));
}

DelzantPolygon translate(const DelzantPolygon& polygon, const Vec2& offset) {
    std::vector<Vec2> out;
    out.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) out.push_back(v + offset);
    return DelzantPolygon(std::move(out));
}

DelzantPolygon negate(const DelzantPolygon& polygon) {
    std::vector<Vec2> out;
    out.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) out.push_back(-v);
    return DelzantPolygon(std::move(out));
}

bool same_vertex_set(const DelzantPolygon& a, const DelzantPolygon& b) {
    if (a.size() != b.size()) return false;
    auto va = a.vertices();
    auto vb = b.vertices();
    auto less = [](const Vec2& x, const Vec2& y) { return lex_less(x, y); };
    std::sort(va.begin(), va.end(), less);
    std::sort(vb.begin(), vb.end(), less);
    return va == vb;
}

IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

DelzantPolygon transform(const DelzantPolygon& polygon, const IntMatrix2& matrix) {
    Integer det = matrix.det();
    if (det != 1 && det != -1) {
        throw Error(ErrorKind::InvalidInput, "transform needs a unimodular matrix, det = " + det.str());
    }
    std::vector<Vec2> out;
    out.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) out.push_back(matrix.apply(v));
    return DelzantPolygon(std::move(out));
}

std::optional<Sl2zMap> sl2z_equivalent(const DelzantPolygon& p, const DelzantPolygon& q) {
    const std::size_t n = p.size();
    if (q.size() != n) return std::nullopt;

    // Columns of M_P are P's edge directions 0 and 1; A = M_Q * M_P^{-1}.
    const IntVec2& p0 = p.edges()[0].direction;
    const IntVec2& p1 = p.edges()[1].direction;
    const Integer det_p = cross(p0, p1);

    for (std::size_t j = 0; j < n; ++j) {
        const IntVec2& q0 = q.edges()[j].direction;
        const IntVec2& q1 = q.edges()[(j + 1) % n].direction;
        // M_P^{-1} = (1/det) ((p1.y, -p1.x), (-p0.y, p0.x))
        Integer a = q0.x * p1.y - q1.x * p0.y;
        Integer b = -q0.x * p1.x + q1.x * p0.x;
        Integer c = q0.y * p1.y - q1.y * p0.y;
        Integer d = -q0.y * p1.x + q1.y * p0.x;
        if (a % det_p != 0 || b % det_p != 0 || c % det_p != 0 || d % det_p != 0) continue;
        IntMatrix2 m{a / det_p, b / det_p, c / det_p, d / det_p};
        if (m.det() != 1) continue;

        Vec2 shift = q.vertices()[j] - m.apply(p.vertices()[0]);
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) {
            match = m.apply(p.vertices()[i]) + shift == q.vertices()[(j + i) % n];
        }
        if (match) return Sl2zMap{std::move(m), std::move(shift)};
    }
    return std::nullopt;
}

SubpolygonReport detect_subpolygons(const DelzantPolygon& polygon) {
    const std::size_t n = polygon.size();
    if (n > kMaxSubpolygonEdges) {
        throw Error(ErrorKind::Budget, "subpolygon search limited to " + std::to_string(kMaxSubpolygonEdges) +
                                           " edges, polygon has " + std::to_string(n));
    }
    SubpolygonReport report;
    if (n < 6) return report;

    // Walk subsets in Gray-code order so each step adds or removes one edge.
    const auto& edges = polygon.edges();
    const std::uint32_t count = std::uint32_t{1} << n;
    Vec2 sum{0, 0};
    std::uint32_t mask = 0;
    for (std::uint32_t k = 1; k < count; ++k) {
        const std::uint32_t gray = k ^ (k >> 1);
        const std::uint32_t flipped = gray ^ mask;
        const auto bit = static_cast<std::size_t>(std::countr_zero(flipped));
        if (gray & flipped) {
            sum += edges[bit].vector;
        } else {
            sum = sum - edges[bit].vector;
        }
        mask = gray;
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size < 3 || n - size < 3) continue;
        if (sum.x == 0 && sum.y == 0) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint32_t{1} << i)) subset.push_back(i);
            }
            report.subsets.push_back(std::move(subset));
        }
    }
    std::sort(report.subsets.begin(), report.subsets.end());
    return report;
}

std::size_t parallel_pair_count(const DelzantPolygon& polygon) {
    std::vector<IntVec2> normals;
    normals.reserve(polygon.size());
    for (const auto& e : polygon.edges()) normals.push_back(canonical_unsigned(e.outward_normal));
    std::sort(normals.begin(), normals.end(), int_less);
    std::size_t pairs = 0;
    for (std::size_t i = 1; i < normals.size(); ++i) {
        if (normals[i] == normals[i - 1]) ++pairs;
    }
    return pairs;
}

}  // namespace delzant
