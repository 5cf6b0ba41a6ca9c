#pragma once

#include "delzant/geometry.hpp"
#include "delzant/polytope3.hpp"
#include "delzant/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace delzant {

// Edges sharing one unsigned normal direction.
struct NormalClass {
    IntVec2 normal;  // primitive, first nonzero coordinate positive
    Rational length_sum;
    int edge_count = 1;  // 1 or 2

    friend bool operator==(const NormalClass&, const NormalClass&) = default;
};

/// What the equivariant and real spectra of a toric surface determine about
/// its moment polygon: vertex count, unsigned normals with summed lattice
/// lengths, and area. Classes are sorted by normal (lexicographic).
struct SpectralData {
    std::size_t vertex_count = 0;
    std::vector<NormalClass> classes;
    Rational area;

    std::size_t parallel_pairs() const { return vertex_count - classes.size(); }

    friend bool operator==(const SpectralData&, const SpectralData&) = default;
};

SpectralData spectral_data(const DelzantPolygon& polygon);

// Equality of the hearable data; per-class edge counts only when asked.
bool same_hearable_data(const SpectralData& a, const SpectralData& b, bool compare_counts);

enum class FaceKind { Polygon, Edge, Vertex };

struct FaceId {
    FaceKind kind = FaceKind::Polygon;
    std::size_t index = 0;  // edge or vertex index; 0 for the polygon itself

    friend bool operator==(const FaceId&, const FaceId&) = default;
};

struct Stratum {
    FaceId face;
    int codimension = 0;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

// Faces whose pre-images are fixed by exp(i*theta): the whole polygon for
// theta = 0, the edges with normal parallel to theta plus all vertices when
// theta is a normal direction, and just the vertices otherwise.
std::vector<Stratum> fixed_point_strata(const DelzantPolygon& polygon, const IntVec2& theta);

// (2pi)^two_pi_power * measure * |direction| (direction absent -> factor 1).
struct PreimageVolume {
    int two_pi_power = 0;
    Rational measure;
    std::optional<IntVec2> direction;

    double value() const;
};

struct HeatLeadingTerm {
    FaceId face;
    int codimension = 0;
    int t_exponent = 0;  // -(n - q)
    PreimageVolume volume;
    std::vector<std::int64_t> weights;  // one per normal 2-plane
};

// Leading coefficients of the equivariant heat trace for theta along a
// primitive direction (or zero). Throws Error(InvalidInput) for a
// non-primitive nonzero direction.
std::vector<HeatLeadingTerm> donnelly_leading_term(const DelzantPolygon& polygon, const IntVec2& theta_direction);

// vol(Q) / prod_i (2 - 2 cos(weight_i * s)). Throws Error(InvalidInput) at a pole.
double evaluate_leading_coefficient(const HeatLeadingTerm& term, double s);

inline constexpr double kPoleTolerance = 1e-12;

// chi(M_R) = 4 - d for the real locus of a toric surface with d facets.
int euler_characteristic(int vertex_count);
int vertex_count(int euler_characteristic);

struct HalfSpace {
    std::vector<Integer> normal;  // signed primitive outward normal, length = dim
    Rational offset;              // max of normal . x over the polytope
    Rational volume;              // lattice volume of the facet

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

struct HalfSpaceSystem {
    int dim = 2;
    std::vector<HalfSpace> entries;

    friend bool operator==(const HalfSpaceSystem&, const HalfSpaceSystem&) = default;
};

// Facet hyperplanes and volumes recovered from the line-bundle spectrum.
HalfSpaceSystem bundle_facet_data(const DelzantPolygon& polygon);
HalfSpaceSystem bundle_facet_data(const Polytope3& polytope);

}  // namespace delzant
