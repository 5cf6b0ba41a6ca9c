#include "delzant/error.hpp"
#include "delzant/reconstruct.hpp"
#include "delzant/zoo.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace delzant;
using namespace delzant::test;

TEST(Zoo, Hirzebruch) {
    EXPECT_EQ(hirzebruch(0, 1, 1), unit_square());
    auto h = hirzebruch(1, 1, 1);
    EXPECT_TRUE(oracle::same_set(h.vertices(), {v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 2)}));
    EXPECT_TRUE(oracle::is_delzant(h.vertices()));
    auto h2 = hirzebruch(2, 1, 1);
    bool slant = false;
    for (const auto& e : h2.edges()) slant = slant || e.direction == iv(-1, 2);
    EXPECT_TRUE(slant);
    EXPECT_EQ(parallel_pair_count(h2), 1U);
    EXPECT_THROW(hirzebruch(1, 0, 1), Error);
    EXPECT_THROW(hirzebruch(1, 1, q(-1, 2)), Error);
}

TEST(Zoo, ChopSquareCorner) {
    auto p = chop(unit_square(), {0, q(1, 3)});
    EXPECT_EQ(p.size(), 5U);
    EXPECT_TRUE(oracle::same_set(p.vertices(), {{q(1, 3), 0}, v2(1, 0), v2(1, 1), v2(0, 1), {0, q(1, 3)}}));
    bool found = false;
    for (const auto& e : p.edges()) {
        if (e.outward_normal == iv(-1, -1)) {
            found = true;
            EXPECT_EQ(e.lattice_length, q(1, 3));
        }
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(area(p), 1 - q(1, 18));
}

TEST(Zoo, ChopTriangleCorner) {
    auto tri = unit_triangle();
    auto p = chop(tri, {1, q(1, 4)});
    EXPECT_EQ(p.size(), 4U);
    EXPECT_TRUE(validate_delzant(p).valid);
    // normals at (1,0) are (0,-1) and (1,1)
    bool found = false;
    for (const auto& e : p.edges()) found = found || e.outward_normal == iv(1, 0);
    EXPECT_TRUE(found);
}

TEST(Zoo, RepeatedChopsStayDelzant) {
    auto p = chop(unit_square(), {0, q(1, 3)});
    // the new edge runs from vertex 0 to vertex 1 or ends at vertex 0; chop both of its ends
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.edges()[i].outward_normal == iv(-1, -1)) {
            auto q1 = chop(p, {i, q(1, 10)});
            EXPECT_TRUE(validate_delzant(q1).valid);
            auto q2 = chop(q1, {(i + 2) % q1.size(), q(1, 10)});
            EXPECT_TRUE(validate_delzant(q2).valid);
        }
    }
}

TEST(Zoo, ChopRejectsBadSpecs) {
    auto sq = unit_square();
    auto kind = [&](const DelzantPolygon& p, ChopSpec s) {
        try {
            chop(p, s);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    EXPECT_EQ(kind(sq, {0, 1}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind(sq, {0, 0}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind(sq, {0, q(-1, 2)}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind(sq, {4, q(1, 2)}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind(poly({{0, 0}, {2, 0}, {0, 3}}), {0, q(1, 2)}), ErrorKind::Validation);
    try {
        chop(sq, {0, 2});
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("edge"), std::string::npos);
    }
}

TEST(ZooProperty, ChopSoundness) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_delzant(3 + static_cast<int>(rng() % 6), rng(), 4);
        const std::size_t i = rng() % p.size();
        const auto& edges = p.edges();
        Rational limit = std::min(edges[(i + p.size() - 1) % p.size()].lattice_length, edges[i].lattice_length);
        Rational t = limit * Rational(1 + static_cast<int>(rng() % 9)) / 10;
        auto c = chop(p, {i, t});
        EXPECT_TRUE(oracle::is_delzant(c.vertices()));
        EXPECT_LT(area(c), area(p));
        EXPECT_EQ(c.size(), p.size() + 1);
        const IntVec2 expected = edges[(i + p.size() - 1) % p.size()].outward_normal + edges[i].outward_normal;
        bool found = false;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Vec2 e = c.vertices()[(k + 1) % c.size()] - c.vertices()[k];
            if (primitive_outward_normal(e) == expected) {
                found = true;
                EXPECT_EQ(oracle::lattice_split(e).first, t);
            }
        }
        EXPECT_TRUE(found);
    }
}

TEST(Zoo, RandomIsDeterministicAndValid) {
    EXPECT_EQ(random_delzant(6, 42, 5), random_delzant(6, 42, 5));
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto p = random_delzant(7, s, 5);
        EXPECT_EQ(p.size(), 7U);
        EXPECT_TRUE(oracle::is_delzant(p.vertices()));
        auto twisted = random_delzant(7, s, 5, {true});
        EXPECT_TRUE(oracle::is_delzant(twisted.vertices()));
    }
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto tri = random_delzant(3, s, 5);
        EXPECT_EQ(tri.size(), 3U);
        EXPECT_TRUE(oracle::is_delzant(tri.vertices()));
    }
}

TEST(Zoo, RandomFourGonIsHirzebruch) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto p = random_delzant(4, s, 4);
        bool matched = false;
        for (unsigned m = 0; m <= 4 && !matched; ++m) {
            for (int wn = 1; wn <= 4 && !matched; ++wn) {
                for (int wd = 1; wd <= 4 && !matched; ++wd) {
                    for (int hn = 1; hn <= 4 && !matched; ++hn) {
                        for (int hd = 1; hd <= 4 && !matched; ++hd) {
                            matched = hirzebruch(m, q(wn, wd), q(hn, hd)) == p;
                        }
                    }
                }
            }
        }
        EXPECT_TRUE(matched) << describe(p);
    }
}

TEST(Zoo, RandomRejectsBadArguments) {
    EXPECT_THROW(random_delzant(2, 1, 3), Error);
    EXPECT_THROW(random_delzant(5, 1, 0), Error);
}

TEST(Zoo, PerturbGeneric) {
    auto pentagon = random_delzant(5, 3, 5);
    ASSERT_TRUE(is_generic(pentagon).generic);
    EXPECT_EQ(perturb_generic(pentagon, 10), pentagon);

    auto hex = subpolygon_hexagon();
    auto fixed = perturb_generic(hex, 20);
    EXPECT_TRUE(detect_subpolygons(fixed).empty());
    EXPECT_TRUE(is_generic(fixed).generic);
    EXPECT_TRUE(oracle::is_delzant(fixed.vertices()));
    ASSERT_EQ(fixed.size(), hex.size());
    for (std::size_t i = 0; i < hex.size(); ++i) {
        EXPECT_EQ(fixed.edges()[i].outward_normal, hex.edges()[i].outward_normal);
    }
    EXPECT_EQ(parallel_pair_count(fixed), parallel_pair_count(hex));
}

TEST(Zoo, PerturbBudgetExhaustion) {
    try {
        perturb_generic(subpolygon_hexagon(), 0);
        FAIL();
    } catch (const PerturbationError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
    }
}

TEST(Census, FourGons) {
    auto c = parallel_pair_census(4, 3);
    EXPECT_EQ(c.total, 4U * 3 * 3);
    for (const auto& [pairs, n] : c.histogram) EXPECT_TRUE(pairs == 1 || pairs == 2);
    EXPECT_EQ(c.histogram.at(2), 9U);
}

TEST(Census, MatchesLiteralChopping) {
    for (auto [d, bound] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 2}, std::pair{6, 3}, std::pair{7, 2}}) {
        auto fast = parallel_pair_census(d, bound);
        auto slow = oracle::chop_census(d, bound);
        EXPECT_EQ(fast.histogram, slow) << "d=" << d << " bound=" << bound;
        std::uint64_t sum = 0;
        for (const auto& [k, n] : fast.histogram) sum += n;
        EXPECT_EQ(sum, fast.total);
    }
}

TEST(Census, ThreadsGiveTheSameHistogram) {
    auto one = parallel_pair_census(7, 3);
    auto four = parallel_pair_census(7, 3, {4, 4'000'000'000ULL});
    EXPECT_EQ(one.histogram, four.histogram);
    EXPECT_EQ(one.total, four.total);
}

TEST(Census, BudgetCarriesPartialResult) {
    try {
        parallel_pair_census(8, 3, {1, 1000});
        FAIL();
    } catch (const CensusBudgetError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
        EXPECT_LT(e.partial.total, parallel_pair_census(8, 3).total);
    }
}

TEST(Census, NonTrivialFractions) {
    auto five = parallel_pair_census(5, 3);
    EXPECT_GT(five.histogram[1], 0U);
    EXPECT_GT(five.total - five.histogram[1], 0U);
    auto eight = parallel_pair_census(8, 3);
    EXPECT_GT(eight.fraction_at_most(3), 0.0);
    EXPECT_LT(eight.fraction_at_most(3), 1.0);
    EXPECT_THROW(parallel_pair_census(5, kMaxCensusBound + 1), Error);
}
