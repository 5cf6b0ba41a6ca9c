#pragma once

#include "delzant/rational.hpp"

#include <cstddef>
#include <vector>

namespace delzant {

struct Facet3 {
    IntVec3 normal;                     // primitive, outward
    Rational offset;                    // normal . x on the facet
    std::vector<std::size_t> vertices;  // counterclockwise seen from outside
};

// A convex rational 3-polytope given by its vertices and facet cycles.
// The constructor derives each facet's outward primitive normal and offset,
// fixes facet orientation, and rejects non-planar, non-convex or incomplete
// facial structure. It does not compute hulls.
class Polytope3 {
public:
    Polytope3(std::vector<Vec3> vertices, std::vector<std::vector<std::size_t>> facets);

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<Facet3>& facets() const { return facets_; }

    // Area of facet i in units of the lattice Z^3 cap (facet plane).
    Rational facet_lattice_area(std::size_t i) const;

    std::vector<Vec3> sorted_vertices() const;

private:
    std::vector<Vec3> vertices_;
    std::vector<Facet3> facets_;
};

// Vertex sets agree (facet listing order is ignored).
bool same_vertex_set(const Polytope3& a, const Polytope3& b);

struct VertexDefect3 {
    std::size_t vertex_index;
    std::size_t facet_count;
    Integer determinant;  // of the three facet normals; 0 if facet_count != 3
};

struct ValidationReport3 {
    bool valid = true;
    std::vector<VertexDefect3> defects;
};

// Simple (three facets per vertex) with normals forming a Z^3 basis.
ValidationReport3 validate_delzant(const Polytope3& polytope);

}  // namespace delzant
