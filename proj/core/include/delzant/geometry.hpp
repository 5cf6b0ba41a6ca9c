#pragma once

#include "delzant/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace delzant {

// Edge i of a polygon runs from vertex i to vertex i+1.
struct Edge {
    Vec2 vector;
    IntVec2 direction;       // primitive, positively proportional to `vector`
    Rational lattice_length; // vector = lattice_length * direction
    IntVec2 outward_normal;  // primitive, orthogonal, pointing out of the polygon
};

/// A strictly convex rational polygon with vertices stored counterclockwise.
///
/// Construction enforces the structural invariants (at least three vertices,
/// strict convexity, no repeated vertices) and reverses clockwise input.
/// Whether the polygon is Delzant is a separate question answered by
/// validate_delzant(). Instances are immutable.
class DelzantPolygon {
public:
    explicit DelzantPolygon(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }

    // True when the constructor had to reverse clockwise input.
    bool was_reversed() const { return reversed_; }

    friend bool operator==(const DelzantPolygon& a, const DelzantPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    std::vector<Vec2> vertices_;
    std::vector<Edge> edges_;
    bool reversed_ = false;
};

// Lexicographic order on vertex lists; used to sort and dedupe canonical forms.
bool polygon_less(const DelzantPolygon& a, const DelzantPolygon& b);

// Outward normal of a counterclockwise edge (a, b): primitive vector along (b, -a).
IntVec2 primitive_outward_normal(const Vec2& edge_vector);

struct VertexDefect {
    std::size_t vertex_index;
    Vec2 vertex;
    Integer determinant;  // det[outgoing | incoming] primitive directions
};

struct ValidationReport {
    bool valid = true;
    std::vector<VertexDefect> defects;
};

ValidationReport validate_delzant(const DelzantPolygon& polygon);

Rational area(const DelzantPolygon& polygon);

// Translate so the lexicographically smallest vertex is the origin and list it
// first. Two polygons are translates iff their canonical forms are equal.
DelzantPolygon normalize_translation(const DelzantPolygon& polygon);

DelzantPolygon translate(const DelzantPolygon& polygon, const Vec2& offset);

// Point reflection x -> -x.
DelzantPolygon negate(const DelzantPolygon& polygon);

// Same vertex set, ignoring where the cyclic list starts.
bool same_vertex_set(const DelzantPolygon& a, const DelzantPolygon& b);

// Row-major 2x2 integer matrix ((a, b), (c, d)).
struct IntMatrix2 {
    Integer a;
    Integer b;
    Integer c;
    Integer d;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }
    Integer det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    IntVec2 apply(const IntVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs);

// Image A*P. Requires det A = +-1.
DelzantPolygon transform(const DelzantPolygon& polygon, const IntMatrix2& matrix);

struct Sl2zMap {
    IntMatrix2 matrix;  // det = 1
    Vec2 translation;   // matrix * P + translation = Q
};

// Searches for A in SL(2,Z) and v with A*P + v = Q as vertex sets. Candidate
// matrices are solved from P's first pair of adjacent edge directions mapped
// onto each adjacent pair of Q, in Q's vertex order.
std::optional<Sl2zMap> sl2z_equivalent(const DelzantPolygon& p, const DelzantPolygon& q);

inline constexpr std::size_t kMaxSubpolygonEdges = 20;

struct SubpolygonReport {
    std::vector<std::vector<std::size_t>> subsets;  // edge index sets, ascending
    bool empty() const { return subsets.empty(); }
};

// Every proper subset of at least three edges, leaving at least three, whose
// edge vectors sum to zero. Exhaustive; throws Error(Budget) above
// kMaxSubpolygonEdges edges.
SubpolygonReport detect_subpolygons(const DelzantPolygon& polygon);

// Number of unsigned normal directions carried by two edges.
std::size_t parallel_pair_count(const DelzantPolygon& polygon);

}  // namespace delzant
