#include "delzant/spectral.hpp"

#include "delzant/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace delzant {

SpectralData spectral_data(const DelzantPolygon& polygon) {
    SpectralData data;
    data.vertex_count = polygon.size();
    data.area = area(polygon);
    for (const auto& edge : polygon.edges()) {
        IntVec2 key = canonical_unsigned(edge.outward_normal);
        auto it = std::find_if(data.classes.begin(), data.classes.end(),
                               [&](const NormalClass& c) { return c.normal == key; });
        if (it == data.classes.end()) {
            data.classes.push_back(NormalClass{std::move(key), edge.lattice_length, 1});
        } else {
            it->length_sum += edge.lattice_length;
            ++it->edge_count;
        }
    }
    std::sort(data.classes.begin(), data.classes.end(),
              [](const NormalClass& a, const NormalClass& b) { return int_less(a.normal, b.normal); });
    return data;
}

bool same_hearable_data(const SpectralData& a, const SpectralData& b, bool compare_counts) {
    if (a.vertex_count != b.vertex_count || a.area != b.area || a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        if (a.classes[i].normal != b.classes[i].normal || a.classes[i].length_sum != b.classes[i].length_sum) {
            return false;
        }
        if (compare_counts && a.classes[i].edge_count != b.classes[i].edge_count) return false;
    }
    return true;
}

std::vector<Stratum> fixed_point_strata(const DelzantPolygon& polygon, const IntVec2& theta) {
    std::vector<Stratum> strata;
    if (theta.x == 0 && theta.y == 0) {
        strata.push_back({{FaceKind::Polygon, 0}, 0});
        return strata;
    }
    const auto& edges = polygon.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (cross(edges[i].outward_normal, theta) == 0) strata.push_back({{FaceKind::Edge, i}, 1});
    }
    for (std::size_t i = 0; i < polygon.size(); ++i) strata.push_back({{FaceKind::Vertex, i}, 2});
    return strata;
}

double PreimageVolume::value() const {
    double v = std::pow(2.0 * std::numbers::pi, two_pi_power) * to_double(measure);
    if (direction) v *= std::hypot(to_double(Rational(direction->x)), to_double(Rational(direction->y)));
    return v;
}

std::vector<HeatLeadingTerm> donnelly_leading_term(const DelzantPolygon& polygon, const IntVec2& theta) {
    constexpr int n = 2;
    std::vector<HeatLeadingTerm> terms;
    if (theta.x == 0 && theta.y == 0) {
        terms.push_back({{FaceKind::Polygon, 0}, 0, -n, {n, area(polygon), std::nullopt}, {}});
        return terms;
    }
    if (gcd(theta.x, theta.y) != 1) {
        throw Error(ErrorKind::InvalidInput, "theta direction (" + theta.x.str() + ", " + theta.y.str() +
                                                 ") is not primitive; reduce it first");
    }
    for (const auto& stratum : fixed_point_strata(polygon, theta)) {
        const std::size_t i = stratum.face.index;
        if (stratum.face.kind == FaceKind::Edge) {
            const Edge& e = polygon.edges()[i];
            terms.push_back({stratum.face, 1, -(n - 1), {1, e.lattice_length, e.direction}, {1}});
        } else {
            // Isotropy weights at a vertex are the primitive edge vectors leaving it.
            const auto& edges = polygon.edges();
            const IntVec2& out = edges[i].direction;
            const IntVec2 back = -edges[(i + edges.size() - 1) % edges.size()].direction;
            terms.push_back({stratum.face, 2, 0, {0, Rational(1), std::nullopt},
                             {to_int64(dot(out, theta)), to_int64(dot(back, theta))}});
        }
    }
    return terms;
}

double evaluate_leading_coefficient(const HeatLeadingTerm& term, double s) {
    double denominator = 1.0;
    for (auto w : term.weights) {
        double factor = 2.0 - 2.0 * std::cos(static_cast<double>(w) * s);
        if (std::abs(factor) < kPoleTolerance) {
            throw Error(ErrorKind::InvalidInput, "pole: 2 - 2cos(" + std::to_string(w) + " * s) vanishes at s = " +
                                                     std::to_string(s));
        }
        denominator *= factor;
    }
    return term.volume.value() / denominator;
}

int euler_characteristic(int d) {
    if (d < 3) throw Error(ErrorKind::InvalidInput, "a polygon has at least 3 vertices, got " + std::to_string(d));
    return 4 - d;
}

int vertex_count(int chi) {
    if (chi > 1) throw Error(ErrorKind::InvalidInput, "Euler characteristic " + std::to_string(chi) + " exceeds 1");
    return 4 - chi;
}

HalfSpaceSystem bundle_facet_data(const DelzantPolygon& polygon) {
    HalfSpaceSystem system;
    system.dim = 2;
    const auto& edges = polygon.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const IntVec2& u = edges[i].outward_normal;
        system.entries.push_back({{u.x, u.y}, dot(to_vec(u), polygon.vertices()[i]), edges[i].lattice_length});
    }
    return system;
}

HalfSpaceSystem bundle_facet_data(const Polytope3& polytope) {
    HalfSpaceSystem system;
    system.dim = 3;
    for (std::size_t i = 0; i < polytope.facets().size(); ++i) {
        const Facet3& f = polytope.facets()[i];
        system.entries.push_back({{f.normal.x, f.normal.y, f.normal.z}, f.offset, polytope.facet_lattice_area(i)});
    }
    return system;
}

}  // namespace delzant
