#include "delzant/io.hpp"

#include "delzant/error.hpp"

#include <algorithm>
#include <limits>

namespace delzant::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::Parse, where + ": " + what);
}

const Json& member(const Json& doc, const char* key, const std::string& where) {
    if (!doc.is_object()) fail(where, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

Rational rational_at(const Json& value, const std::string& where) {
    if (!value.is_string()) fail(where, "expected a \"p/q\" string");
    try {
        return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Integer integer_at(const Json& value, const std::string& where) {
    if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
    if (value.is_string()) {
        try {
            Rational r = parse_rational(value.get<std::string>());
            if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r);
        } catch (const Error&) {
        }
    }
    fail(where, "expected an integer");
}

Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

int dim_at(const Json& doc, const std::string& where) {
    const Json& dim = member(doc, "dim", where);
    if (!dim.is_number_integer()) fail(where + ".dim", "expected an integer");
    return dim.get<int>();
}

Json trace_json(const AssignmentTrace& trace) {
    Json t;
    t["doubled"] = trace.doubled;
    t["signs"] = trace.signs;
    Json splits = Json::array();
    for (const auto& s : trace.splits) splits.push_back(to_string(s));
    t["splits"] = std::move(splits);
    t["anchorFlipped"] = trace.anchor_flipped;
    if (trace.family_parameter) t["familyParameter"] = to_string(*trace.family_parameter);
    return t;
}

}  // namespace

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const DelzantPolygon& polygon) {
    Json doc;
    doc["dim"] = 2;
    Json vertices = Json::array();
    for (const auto& v : polygon.vertices()) vertices.push_back(Json::array({to_string(v.x), to_string(v.y)}));
    doc["vertices"] = std::move(vertices);
    return doc;
}

std::string serialize_polygon(const DelzantPolygon& polygon) { return to_json(polygon).dump(); }

ParsedPolygon polygon_from_json(const Json& doc) {
    if (dim_at(doc, "$") != 2) fail("$.dim", "polygon must have dim 2");
    const Json& list = member(doc, "vertices", "$");
    if (!list.is_array()) fail("$.vertices", "expected an array");
    std::vector<Vec2> vertices;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "$.vertices[" + std::to_string(i) + "]";
        const Json& pt = list[i];
        if (!pt.is_array() || pt.size() != 2) fail(where, "expected a pair of coordinates");
        Vec2 v{rational_at(pt[0], where + "[0]"), rational_at(pt[1], where + "[1]")};
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (vertices[j] == v) fail(where, "repeats vertex " + std::to_string(j));
        }
        vertices.push_back(std::move(v));
    }
    try {
        ParsedPolygon parsed{DelzantPolygon(std::move(vertices)), {}};
        if (parsed.polygon.was_reversed()) {
            parsed.warnings.emplace_back("vertices were clockwise; reversed to counterclockwise");
        }
        return parsed;
    } catch (const Error& e) {
        fail("$.vertices", e.what());
    }
}

ParsedPolygon parse_polygon(std::string_view text) { return polygon_from_json(parse_document(text)); }

Json to_json(const Polytope3& polytope) {
    Json doc;
    doc["dim"] = 3;
    Json vertices = Json::array();
    for (const auto& v : polytope.vertices()) {
        vertices.push_back(Json::array({to_string(v.x), to_string(v.y), to_string(v.z)}));
    }
    doc["vertices"] = std::move(vertices);
    Json facets = Json::array();
    for (const auto& f : polytope.facets()) facets.push_back(f.vertices);
    doc["facets"] = std::move(facets);
    return doc;
}

Polytope3 polytope3_from_json(const Json& doc) {
    if (dim_at(doc, "$") != 3) fail("$.dim", "polytope must have dim 3");
    const Json& list = member(doc, "vertices", "$");
    const Json& facet_list = member(doc, "facets", "$");
    if (!list.is_array() || !facet_list.is_array()) fail("$", "vertices and facets must be arrays");
    std::vector<Vec3> vertices;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "$.vertices[" + std::to_string(i) + "]";
        const Json& pt = list[i];
        if (!pt.is_array() || pt.size() != 3) fail(where, "expected three coordinates");
        vertices.push_back({rational_at(pt[0], where + "[0]"), rational_at(pt[1], where + "[1]"),
                            rational_at(pt[2], where + "[2]")});
    }
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t i = 0; i < facet_list.size(); ++i) {
        const Json& f = facet_list[i];
        if (!f.is_array()) fail("$.facets[" + std::to_string(i) + "]", "expected an index array");
        std::vector<std::size_t> cycle;
        for (const auto& idx : f) {
            if (!idx.is_number_unsigned()) fail("$.facets[" + std::to_string(i) + "]", "expected vertex indices");
            cycle.push_back(idx.get<std::size_t>());
        }
        facets.push_back(std::move(cycle));
    }
    try {
        return Polytope3(std::move(vertices), std::move(facets));
    } catch (const Error& e) {
        fail("$", e.what());
    }
}

Json to_json(const SpectralData& data) {
    Json doc;
    doc["d"] = data.vertex_count;
    Json classes = Json::array();
    for (const auto& c : data.classes) {
        Json entry;
        entry["normal"] = Json::array({integer_json(c.normal.x), integer_json(c.normal.y)});
        entry["lengthSum"] = to_string(c.length_sum);
        entry["count"] = c.edge_count;
        classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    doc["area"] = to_string(data.area);
    return doc;
}

SpectralData spectral_from_json(const Json& doc) {
    SpectralData data;
    const Json& d = member(doc, "d", "$");
    if (!d.is_number_unsigned()) fail("$.d", "expected a vertex count");
    data.vertex_count = d.get<std::size_t>();
    const Json& classes = member(doc, "classes", "$");
    if (!classes.is_array()) fail("$.classes", "expected an array");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string where = "$.classes[" + std::to_string(i) + "]";
        const Json& normal = member(classes[i], "normal", where);
        if (!normal.is_array() || normal.size() != 2) fail(where + ".normal", "expected two integers");
        IntVec2 u{integer_at(normal[0], where + ".normal[0]"), integer_at(normal[1], where + ".normal[1]")};
        if (u.x == 0 && u.y == 0) fail(where + ".normal", "zero normal");
        if (canonical_unsigned(u) != u) fail(where + ".normal", "normal must be primitive with first nonzero entry positive");
        Rational sum = rational_at(member(classes[i], "lengthSum", where), where + ".lengthSum");
        if (sum <= 0) fail(where + ".lengthSum", "length sum must be positive");
        int count = 0;
        if (auto it = classes[i].find("count"); it != classes[i].end()) {
            if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != 2)) {
                fail(where + ".count", "count must be 1 or 2");
            }
            count = it->get<int>();
        }
        data.classes.push_back({std::move(u), std::move(sum), count});
    }
    std::sort(data.classes.begin(), data.classes.end(),
              [](const NormalClass& a, const NormalClass& b) { return int_less(a.normal, b.normal); });
    for (std::size_t i = 1; i < data.classes.size(); ++i) {
        if (data.classes[i].normal == data.classes[i - 1].normal) fail("$.classes", "repeated normal class");
    }
    data.area = rational_at(member(doc, "area", "$"), "$.area");
    if (data.area <= 0) fail("$.area", "area must be positive");
    return data;
}

Json to_json(const HalfSpaceSystem& system) {
    Json doc;
    doc["dim"] = system.dim;
    Json entries = Json::array();
    for (const auto& e : system.entries) {
        Json entry;
        Json normal = Json::array();
        for (const auto& c : e.normal) normal.push_back(integer_json(c));
        entry["normal"] = std::move(normal);
        entry["offset"] = to_string(e.offset);
        entry["volume"] = to_string(e.volume);
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

HalfSpaceSystem halfspaces_from_json(const Json& doc) {
    HalfSpaceSystem system;
    system.dim = dim_at(doc, "$");
    if (system.dim != 2 && system.dim != 3) fail("$.dim", "dimension must be 2 or 3");
    const Json& entries = member(doc, "entries", "$");
    if (!entries.is_array()) fail("$.entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "$.entries[" + std::to_string(i) + "]";
        const Json& normal = member(entries[i], "normal", where);
        if (!normal.is_array() || static_cast<int>(normal.size()) != system.dim) {
            fail(where + ".normal", "expected " + std::to_string(system.dim) + " integers");
        }
        HalfSpace h;
        for (std::size_t k = 0; k < normal.size(); ++k) {
            h.normal.push_back(integer_at(normal[k], where + ".normal[" + std::to_string(k) + "]"));
        }
        h.offset = rational_at(member(entries[i], "offset", where), where + ".offset");
        h.volume = rational_at(member(entries[i], "volume", where), where + ".volume");
        system.entries.push_back(std::move(h));
    }
    return system;
}

Json to_json(const CandidateSet& set) {
    Json doc;
    Json candidates = Json::array();
    for (std::size_t i = 0; i < set.candidates.size(); ++i) {
        Json c;
        c["polygon"] = to_json(set.candidates[i]);
        c["trace"] = trace_json(set.traces[i]);
        candidates.push_back(std::move(c));
    }
    doc["candidates"] = std::move(candidates);
    Json dropped = Json::array();
    for (const auto& d : set.dropped) {
        Json entry;
        entry["trace"] = trace_json(d.trace);
        entry["reason"] = d.reason;
        dropped.push_back(std::move(entry));
    }
    doc["dropped"] = std::move(dropped);
    return doc;
}

std::vector<DelzantPolygon> candidate_polygons_from_json(const Json& doc) {
    const Json& list = member(doc, "candidates", "$");
    if (!list.is_array()) fail("$.candidates", "expected an array");
    std::vector<DelzantPolygon> out;
    for (const auto& c : list) out.push_back(polygon_from_json(member(c, "polygon", "$.candidates[]")).polygon);
    return out;
}

Json to_json(const ZooCensus& census) {
    Json doc;
    doc["d"] = census.edge_count;
    Json histogram = Json::object();
    for (const auto& [pairs, count] : census.histogram) histogram[std::to_string(pairs)] = count;
    doc["histogram"] = std::move(histogram);
    doc["total"] = census.total;
    doc["bound"] = census.bound;
    return doc;
}

}  // namespace delzant::io
