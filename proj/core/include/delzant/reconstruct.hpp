#pragma once

#include "delzant/geometry.hpp"
#include "delzant/polytope3.hpp"
#include "delzant/rational.hpp"
#include "delzant/spectral.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace delzant {

struct SignedEdgeList {
    std::vector<Vec2> edges;
    IntVec2 anchor_normal;  // outward normal chosen for edges[0]
};

/// Unique convex polygon containing 0 and edges[0] whose first edge is
/// edges[0] with anchor_normal pointing outward. Starting from edges[0], each
/// step takes the unused edge that turns inward and makes the most obtuse
/// angle with the current edge. Throws Error(Infeasible) if the edges do not
/// close up into a strictly convex polygon, Error(InvalidInput) if the anchor
/// is not orthogonal to edges[0].
DelzantPolygon build_most_obtuse(const SignedEdgeList& input);

/// Volume-preserving one-parameter family of polygons with three parallel
/// pairs. The three doubled classes get split differences
/// delta_j(t) = base_splits[j] + t * kernel[j]; since
/// sum_j kernel[j] * directions[j] = 0 the edges close for every t.
/// For a doubled class with sum L, the two edges are (L + delta)/2 * w and
/// -(L - delta)/2 * w for the signed direction w.
struct ThreePairFamily {
    std::vector<Vec2> fixed_edges;          // edges of the single classes
    std::array<IntVec2, 3> directions;      // signed primitive directions of the doubled classes
    std::array<Rational, 3> length_sums;
    std::array<Rational, 3> base_splits;
    std::array<Rational, 3> kernel;
    Rational base_area;
    Rational linear;     // A in area(t) = base_area + A t + B t^2
    Rational quadratic;  // B
    Rational lower;      // open admissibility interval for t
    Rational upper;

    bool admissible(const Rational& t) const { return lower < t && t < upper; }
    std::vector<Vec2> edges_at(const Rational& t) const;
    DelzantPolygon polygon_at(const Rational& t) const;
};

// Builds the family through the given (admissible) base splits; A and B are
// obtained by exact interpolation of the area at t = 0, +delta, -delta with
// delta half the distance from 0 to the nearer end of the interval.
ThreePairFamily make_three_pair_family(std::vector<Vec2> fixed_edges, const std::array<IntVec2, 3>& directions,
                                       const std::array<Rational, 3>& length_sums,
                                       const std::array<Rational, 3>& base_splits);

// The family through a polygon with exactly three parallel pairs (t = 0 is P).
ThreePairFamily three_pair_family_of(const DelzantPolygon& polygon);

// Admissible rational t with area(t) = target_area, ascending. When the base
// area equals the target these are 0 and, if admissible, -A/B. Irrational
// roots are not representable and are skipped. Throws Error(Unsupported)
// when A = B = 0 and the target equals the constant area (a whole interval
// of solutions).
std::vector<Rational> solve_three_pair_parameter(const ThreePairFamily& family, const Rational& target_area);

struct EnumerateOptions {
    int max_parallel_pairs = 3;
    // Use the per-class edge counts in the data to fix which classes are
    // doubled. Off by default: the spectrum does not say which normals repeat.
    bool trust_counts = false;
};

struct AssignmentTrace {
    std::vector<std::size_t> doubled;  // indices into SpectralData::classes
    std::vector<int> signs;            // +1 / -1 per class
    std::vector<Rational> splits;      // one per doubled class
    bool anchor_flipped = false;
    std::optional<Rational> family_parameter;  // three-pair case only
};

struct DroppedBranch {
    AssignmentTrace trace;
    std::string reason;
};

struct CandidateSet {
    std::vector<DelzantPolygon> candidates;  // canonical forms, sorted
    std::vector<AssignmentTrace> traces;     // first assignment producing each candidate
    std::vector<DroppedBranch> dropped;      // closed edge systems rejected later
};

/// All Delzant polygons (up to translation) reproducing the data exactly.
/// Throws Error(Unsupported) for more parallel pairs than allowed and
/// Error(Infeasible) when nothing matches.
CandidateSet enumerate_candidates(const SpectralData& data, const EnumerateOptions& options = {});

struct GenericityReport {
    bool generic = false;
    std::string diagnosis;
    SubpolygonReport subpolygons;
    std::size_t productive_assignments = 0;  // (doubled set, sign pattern up to global sign) yielding candidates
};

// Generic: no subpolygons, and the data admit a single choice of repeated
// normals. Rectangles are generic.
GenericityReport is_generic(const DelzantPolygon& polygon);

using Polytope = std::variant<DelzantPolygon, Polytope3>;

DelzantPolygon bundle_reconstruct_2d(const HalfSpaceSystem& system);
Polytope3 bundle_reconstruct_3d(const HalfSpaceSystem& system);
Polytope bundle_reconstruct(const HalfSpaceSystem& system);

}  // namespace delzant
