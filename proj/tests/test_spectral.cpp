#include "delzant/error.hpp"
#include "delzant/spectral.hpp"
#include "delzant/zoo.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace delzant;
using namespace delzant::test;

namespace {

NormalClass cls(long long x, long long y, Rational sum, int count) { return {iv(x, y), std::move(sum), count}; }

bool same_classes(const std::vector<NormalClass>& a, const std::vector<NormalClass>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].normal == b[i].normal) || a[i].length_sum != b[i].length_sum || a[i].edge_count != b[i].edge_count) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Spectral, DataOfBasicPolygons) {
    auto sq = spectral_data(unit_square());
    EXPECT_EQ(sq.vertex_count, 4U);
    EXPECT_TRUE(same_classes(sq.classes, {cls(0, 1, 2, 2), cls(1, 0, 2, 2)}));
    EXPECT_EQ(sq.area, 1);

    auto tri = spectral_data(unit_triangle());
    EXPECT_EQ(tri.vertex_count, 3U);
    EXPECT_TRUE(same_classes(tri.classes, {cls(0, 1, 1, 1), cls(1, 0, 1, 1), cls(1, 1, 1, 1)}));
    EXPECT_EQ(tri.area, q(1, 2));

    auto h = spectral_data(hirzebruch(1, 1, 1));
    EXPECT_EQ(h.vertex_count, 4U);
    EXPECT_TRUE(same_classes(h.classes, {cls(0, 1, 1, 1), cls(1, 0, 3, 2), cls(1, 1, 1, 1)}));
    EXPECT_EQ(h.area, q(3, 2));
    EXPECT_EQ(h.parallel_pairs(), 1U);
}

TEST(Spectral, DataIsTranslationInvariant) {
    for (int seed = 0; seed < 30; ++seed) {
        auto p = random_delzant(3 + seed % 6, seed, 4);
        auto d = spectral_data(p);
        EXPECT_TRUE(same_hearable_data(d, spectral_data(translate(p, {q(3, 4), q(-5)})), true));
        std::size_t total = 0;
        for (const auto& c : d.classes) total += static_cast<std::size_t>(c.edge_count);
        EXPECT_EQ(total, d.vertex_count);
        EXPECT_EQ(d.parallel_pairs(), oracle::parallel_pairs(p.vertices()));
    }
}

TEST(Spectral, HearableDataIgnoresCountsUnlessAsked) {
    auto a = spectral_data(unit_square());
    auto b = a;
    b.classes[0].edge_count = 1;
    EXPECT_TRUE(same_hearable_data(a, b, false));
    EXPECT_FALSE(same_hearable_data(a, b, true));
    b.area = 2;
    EXPECT_FALSE(same_hearable_data(a, b, false));
}

TEST(Spectral, FixedPointStrata) {
    auto sq = unit_square();
    auto whole = fixed_point_strata(sq, iv(0, 0));
    ASSERT_EQ(whole.size(), 1U);
    EXPECT_EQ(whole[0].face.kind, FaceKind::Polygon);
    EXPECT_EQ(whole[0].codimension, 0);

    auto vertical = fixed_point_strata(sq, iv(1, 0));
    std::size_t edges = 0, vertices = 0;
    for (const auto& s : vertical) {
        if (s.face.kind == FaceKind::Edge) {
            ++edges;
            EXPECT_EQ(s.codimension, 1);
            EXPECT_EQ(canonical_unsigned(sq.edges()[s.face.index].outward_normal), iv(1, 0));
        }
        if (s.face.kind == FaceKind::Vertex) ++vertices;
    }
    EXPECT_EQ(edges, 2U);
    EXPECT_EQ(vertices, 4U);

    auto generic = fixed_point_strata(sq, iv(1, 2));
    EXPECT_EQ(generic.size(), 4U);
    for (const auto& s : generic) EXPECT_EQ(s.face.kind, FaceKind::Vertex);
}

TEST(Spectral, StrataAlwaysContainEveryVertex) {
    for (int seed = 0; seed < 20; ++seed) {
        auto p = random_delzant(3 + seed % 5, seed, 3);
        for (const auto& theta : {iv(1, 0), iv(0, 1), iv(1, 1), iv(2, -3), iv(-1, 5)}) {
            std::vector<bool> seen(p.size(), false);
            for (const auto& s : fixed_point_strata(p, theta)) {
                if (s.face.kind == FaceKind::Vertex) seen[s.face.index] = true;
            }
            for (bool b : seen) EXPECT_TRUE(b);
        }
    }
}

TEST(Spectral, LeadingTermsOfSquare) {
    auto sq = unit_square();
    auto zero = donnelly_leading_term(sq, iv(0, 0));
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_EQ(zero[0].codimension, 0);
    EXPECT_EQ(zero[0].t_exponent, -2);
    EXPECT_NEAR(zero[0].volume.value(), 4 * M_PI * M_PI, 1e-12);

    auto terms = donnelly_leading_term(sq, iv(1, 0));
    std::size_t edges = 0, vertices = 0;
    for (const auto& t : terms) {
        EXPECT_EQ(t.t_exponent, -(2 - t.codimension));
        if (t.codimension == 1) {
            ++edges;
            EXPECT_NEAR(t.volume.value(), 2 * M_PI, 1e-12);
            EXPECT_EQ(t.weights, std::vector<std::int64_t>{1});
        } else if (t.codimension == 2) {
            ++vertices;
            EXPECT_EQ(t.weights.size(), 2U);
        }
    }
    EXPECT_EQ(edges, 2U);
    EXPECT_EQ(vertices, 4U);
    EXPECT_THROW(donnelly_leading_term(sq, iv(2, 0)), Error);
}

TEST(Spectral, EvaluateLeadingCoefficient) {
    HeatLeadingTerm term{{FaceKind::Edge, 0}, 1, -1, {1, Rational(1), IntVec2{1, 0}}, {1}};
    EXPECT_NEAR(evaluate_leading_coefficient(term, M_PI), 2 * M_PI / 4, 1e-12);
    EXPECT_NEAR(evaluate_leading_coefficient(term, M_PI / 2), M_PI, 1e-12);
    EXPECT_THROW(evaluate_leading_coefficient(term, 0.0), Error);
    EXPECT_THROW(evaluate_leading_coefficient(term, 2 * M_PI), Error);
}

TEST(Spectral, GeneralVertexWeightsAreTheEdgePairings) {
    // For theta off every normal, vertex weights are nonzero and pair theta with the
    // primitive edge directions leaving the vertex.
    auto p = hirzebruch(1, 2, 1);
    for (const auto& t : donnelly_leading_term(p, iv(2, 3))) {
        ASSERT_EQ(t.codimension, 2);
        for (auto w : t.weights) EXPECT_NE(w, 0);
    }
}

TEST(Spectral, EulerCharacteristic) {
    EXPECT_EQ(euler_characteristic(3), 1);
    EXPECT_EQ(euler_characteristic(4), 0);
    EXPECT_EQ(euler_characteristic(7), -3);
    for (int d = 3; d < 40; ++d) EXPECT_EQ(vertex_count(euler_characteristic(d)), d);
    EXPECT_THROW(euler_characteristic(2), Error);
    EXPECT_THROW(vertex_count(2), Error);
}

TEST(Spectral, BundleFacetData) {
    auto tri = bundle_facet_data(unit_triangle());
    ASSERT_EQ(tri.entries.size(), 3U);
    EXPECT_EQ(tri.dim, 2);
    std::vector<HalfSpace> expected{{{0, -1}, 0, 1}, {{1, 1}, 1, 1}, {{-1, 0}, 0, 1}};
    EXPECT_EQ(tri.entries, expected);

    auto h = bundle_facet_data(hirzebruch(1, 1, 1));
    std::vector<HalfSpace> hexp{{{0, -1}, 0, 1}, {{1, 0}, 1, 1}, {{1, 1}, 2, 1}, {{-1, 0}, 0, 2}};
    EXPECT_EQ(h.entries, hexp);

    auto cube = bundle_facet_data(unit_cube());
    EXPECT_EQ(cube.dim, 3);
    ASSERT_EQ(cube.entries.size(), 6U);
    for (const auto& e : cube.entries) {
        EXPECT_TRUE(e.offset == 0 || e.offset == 1);
        EXPECT_EQ(e.volume, 1);
    }
}

TEST(Spectral, BundleOffsetsAreSupportValues) {
    for (int seed = 0; seed < 25; ++seed) {
        auto p = random_delzant(3 + seed % 6, seed, 5);
        for (const auto& e : bundle_facet_data(p).entries) {
            Rational best = -1000000;
            for (const auto& v : p.vertices()) {
                Rational val = Rational(e.normal[0]) * v.x + Rational(e.normal[1]) * v.y;
                if (val > best) best = val;
            }
            EXPECT_EQ(best, e.offset);
        }
    }
}
