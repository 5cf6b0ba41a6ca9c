#include "delzant/polytope3.hpp"

#include "delzant/error.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace delzant {

namespace {

// Twice the vector area of a closed polygon in space (Newell).
Vec3 doubled_vector_area(const std::vector<Vec3>& points, const std::vector<std::size_t>& cycle) {
    Vec3 sum{0, 0, 0};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        sum = sum + cross(points[cycle[i]], points[cycle[(i + 1) % cycle.size()]]);
    }
    return sum;
}

}  // namespace

Polytope3::Polytope3(std::vector<Vec3> vertices, std::vector<std::vector<std::size_t>> facets)
    : vertices_(std::move(vertices)) {
    const std::size_t nv = vertices_.size();
    if (nv < 4) throw Error(ErrorKind::Structural, "3-polytope needs at least 4 vertices");
    if (facets.size() < 4) throw Error(ErrorKind::Structural, "3-polytope needs at least 4 facets");

    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> incidence(nv, 0);
    for (std::size_t f = 0; f < facets.size(); ++f) {
        auto cycle = facets[f];
        const std::string label = "facet " + std::to_string(f);
        if (cycle.size() < 3) throw Error(ErrorKind::Structural, label + " has fewer than 3 vertices");
        for (auto idx : cycle) {
            if (idx >= nv) throw Error(ErrorKind::Structural, label + " references a missing vertex");
        }
        Vec3 area2 = doubled_vector_area(vertices_, cycle);
        if (area2 == Vec3{0, 0, 0}) throw Error(ErrorKind::Structural, label + " is degenerate");
        IntVec3 normal = primitive_direction(area2);
        Vec3 n = to_vec(normal);
        Rational offset = dot(n, vertices_[cycle[0]]);
        std::set<std::size_t> on_facet(cycle.begin(), cycle.end());
        if (on_facet.size() != cycle.size()) throw Error(ErrorKind::Structural, label + " repeats a vertex");

        int above = 0;
        int below = 0;
        for (std::size_t i = 0; i < nv; ++i) {
            Rational h = dot(n, vertices_[i]) - offset;
            if (on_facet.count(i)) {
                if (h != 0) throw Error(ErrorKind::Structural, label + " is not planar");
            } else if (h > 0) {
                ++above;
            } else if (h < 0) {
                ++below;
            } else {
                throw Error(ErrorKind::Structural, label + " omits a vertex lying in its plane");
            }
        }
        if (above > 0 && below > 0) throw Error(ErrorKind::Structural, "polytope is not convex at " + label);
        if (above > 0) {
            normal = IntVec3{-normal.x, -normal.y, -normal.z};
            offset = -offset;
            std::reverse(cycle.begin(), cycle.end());
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            auto a = cycle[i];
            auto b = cycle[(i + 1) % cycle.size()];
            edges.insert({std::min(a, b), std::max(a, b)});
            ++incidence[a];
        }
        facets_.push_back(Facet3{std::move(normal), std::move(offset), std::move(cycle)});
    }
    for (std::size_t i = 0; i < nv; ++i) {
        if (incidence[i] < 3) {
            throw Error(ErrorKind::Structural, "vertex " + std::to_string(i) + " lies on fewer than 3 facets");
        }
    }
    // Euler's relation catches facet lists that do not close up a sphere.
    const auto euler = static_cast<long>(nv) - static_cast<long>(edges.size()) + static_cast<long>(facets_.size());
    if (euler != 2) throw Error(ErrorKind::Structural, "facet structure is not a polytope boundary (V-E+F != 2)");
}

Rational Polytope3::facet_lattice_area(std::size_t i) const {
    const Facet3& f = facets_.at(i);
    Vec3 n = to_vec(f.normal);
    // Euclidean area * |u| / |u|^2: the lattice in the facet plane has covolume |u|.
    return dot(doubled_vector_area(vertices_, f.vertices), n) / (2 * dot(n, n));
}

std::vector<Vec3> Polytope3::sorted_vertices() const {
    auto out = vertices_;
    std::sort(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) { return lex_less(a, b); });
    return out;
}

bool same_vertex_set(const Polytope3& a, const Polytope3& b) { return a.sorted_vertices() == b.sorted_vertices(); }

ValidationReport3 validate_delzant(const Polytope3& polytope) {
    ValidationReport3 report;
    const auto& facets = polytope.facets();
    for (std::size_t v = 0; v < polytope.vertices().size(); ++v) {
        std::vector<const IntVec3*> normals;
        for (const auto& f : facets) {
            if (std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end()) normals.push_back(&f.normal);
        }
        Integer det = 0;
        if (normals.size() == 3) {
            const IntVec3& a = *normals[0];
            const IntVec3& b = *normals[1];
            const IntVec3& c = *normals[2];
            det = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
        }
        if (det != 1 && det != -1) {
            report.valid = false;
            report.defects.push_back({v, normals.size(), det});
        }
    }
    return report;
}

}  // namespace delzant
