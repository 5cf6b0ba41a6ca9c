#pragma once

#include "delzant/error.hpp"
#include "delzant/geometry.hpp"
#include "delzant/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

namespace delzant {

// Moment polygon of a Hirzebruch surface: (0,0), (w,0), (w,h), (0,h+m*w).
// m = 0 gives a rectangle.
DelzantPolygon hirzebruch(unsigned m, const Rational& w, const Rational& h);

struct ChopSpec {
    std::size_t vertex_index = 0;
    Rational lattice_depth;  // lattice length of the new edge
};

/// Corner chopping (toric blow-up) at one vertex. The two incident edges
/// lose `lattice_depth` each and a new edge with normal equal to the sum of
/// their normals appears. Requires a Delzant input and a depth strictly below
/// both incident lattice lengths; throws Error(InvalidInput) naming the edge
/// otherwise.
DelzantPolygon chop(const DelzantPolygon& polygon, const ChopSpec& spec);

inline constexpr int kMaxChopAttempts = 256;

struct RandomOptions {
    bool sl2z_twist = false;  // apply a random SL(2,Z) map and translation for d >= 4
};

/// Seeded sampler over Delzant polygons with `d` edges.
///
/// d = 3: a scaled standard simplex moved by a random SL(2,Z) map and
/// translation. d = 4: a Hirzebruch trapezoid. d >= 5: a Hirzebruch
/// trapezoid followed by d - 4 random corner choppings. All integer choices
/// lie in [1, bound] (m in [0, bound]); depths are p/q with 1 <= p <= q <=
/// bound, halved every 16 rejected attempts. A chop that finds no admissible
/// depth within kMaxChopAttempts throws Error(Budget).
DelzantPolygon random_delzant(int d, std::uint64_t seed, int bound, const RandomOptions& options = {});

inline constexpr int kPerturbDenominator = 1024;

class PerturbationError : public Error {
public:
    PerturbationError(const std::string& message, std::optional<DelzantPolygon> last)
        : Error(ErrorKind::Budget, message), last_attempt(std::move(last)) {}

    std::optional<DelzantPolygon> last_attempt;
};

/// Shift the support offsets by small rationals (same normals, same cyclic
/// order) until is_generic() holds. Attempt k moves offset i by
/// (k+2)^(i-d+1) / (kPerturbDenominator * 2^k). Returns the input unchanged
/// when it is already generic.
DelzantPolygon perturb_generic(const DelzantPolygon& polygon, int budget);

struct ZooCensus {
    int edge_count = 0;
    int bound = 0;
    std::map<std::size_t, std::uint64_t> histogram;  // parallel pairs -> polygons
    std::uint64_t total = 0;

    // Census fraction (not a probability) with at most `pairs` parallel pairs.
    double fraction_at_most(std::size_t pairs) const;
};

class CensusBudgetError : public Error {
public:
    CensusBudgetError(const std::string& message, ZooCensus partial_result)
        : Error(ErrorKind::Budget, message), partial(std::move(partial_result)) {}

    ZooCensus partial;
};

struct CensusOptions {
    unsigned threads = 1;
    std::uint64_t node_budget = 4'000'000'000ULL;
};

inline constexpr int kMaxCensusBound = 20;

/// Exhaustive census of parametrized d-gons: Hirzebruch bases with m in
/// [0, bound] and integer w, h in [1, bound], followed by every sequence of
/// d - 4 corner chops at any vertex with depth p/q (1 <= p, q <= bound)
/// admissible at that step. Chop sequences are counted as distinct instances.
ZooCensus parallel_pair_census(int d, int bound, const CensusOptions& options = {});

}  // namespace delzant
