#pragma once

#include "delzant/geometry.hpp"
#include "delzant/polytope3.hpp"
#include "delzant/reconstruct.hpp"
#include "delzant/spectral.hpp"
#include "delzant/zoo.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace delzant::io {

// Insertion-ordered so documents keep the documented key order.
using Json = nlohmann::ordered_json;

struct ParsedPolygon {
    DelzantPolygon polygon;
    std::vector<std::string> warnings;
};

// {"dim":2,"vertices":[["p/q","p/q"],...]}
Json to_json(const DelzantPolygon& polygon);
std::string serialize_polygon(const DelzantPolygon& polygon);  // compact, byte-stable

// Errors (malformed rationals, zero denominators, repeated vertices,
// non-convex input) are reported as Error(Parse) with a JSON location.
ParsedPolygon polygon_from_json(const Json& doc);
ParsedPolygon parse_polygon(std::string_view text);

// {"dim":3,"vertices":[["p/q","p/q","p/q"],...],"facets":[[0,1,2],...]}
Json to_json(const Polytope3& polytope);
Polytope3 polytope3_from_json(const Json& doc);

// {"d":4,"classes":[{"normal":[0,1],"lengthSum":"2/1","count":2},...],"area":"1/1"}
// "count" may be omitted on input (stored as 0: unknown).
Json to_json(const SpectralData& data);
SpectralData spectral_from_json(const Json& doc);

// {"dim":3,"entries":[{"normal":[0,0,-1],"offset":"0/1","volume":"1/1"},...]}
Json to_json(const HalfSpaceSystem& system);
HalfSpaceSystem halfspaces_from_json(const Json& doc);

// {"candidates":[{"polygon":{...},"trace":{...}}],"dropped":[{"trace":{...},"reason":"..."}]}
Json to_json(const CandidateSet& set);
std::vector<DelzantPolygon> candidate_polygons_from_json(const Json& doc);

// {"d":8,"histogram":{"1":n1,...},"total":N,"bound":B}
Json to_json(const ZooCensus& census);

Json parse_document(std::string_view text);

}  // namespace delzant::io
