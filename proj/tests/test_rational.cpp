#include "delzant/error.hpp"
#include "delzant/rational.hpp"

#include <gtest/gtest.h>

using namespace delzant;

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1) / 2);
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(parse_rational("2")), "2/1");
    EXPECT_EQ(to_string(Rational(-3) / 9), "-1/3");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "x", "1//2", "1/2/3", "1.5", " 1", "/2", "2/", "4/-8"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << "accepted \"" << bad << "\"";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
        }
    }
}

TEST(Rational, HugeValuesSurviveRoundTrip) {
    const std::string big = "123456789012345678901234567891/2";
    EXPECT_EQ(to_string(parse_rational(big)), big);
}

TEST(Rational, PrimitiveDecomposition) {
    auto [dir, len] = primitive_decomposition({Rational(-2), Rational(4)});
    EXPECT_EQ(dir, (IntVec2{-1, 2}));
    EXPECT_EQ(len, 2);
    auto [dir2, len2] = primitive_decomposition({Rational(1) / 3, Rational(1) / 2});
    EXPECT_EQ(dir2, (IntVec2{2, 3}));
    EXPECT_EQ(len2, Rational(1) / 6);
}

TEST(Rational, CanonicalUnsigned) {
    EXPECT_EQ(canonical_unsigned({0, -3}), (IntVec2{0, 1}));
    EXPECT_EQ(canonical_unsigned({-2, 4}), (IntVec2{1, -2}));
    EXPECT_EQ(canonical_unsigned({1, 1}), (IntVec2{1, 1}));
}

TEST(Rational, AngleOrderIsPolarFromPositiveXAxis) {
    std::vector<Vec2> in{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
        EXPECT_TRUE(angle_less(in[i], in[i + 1])) << i;
        EXPECT_FALSE(angle_less(in[i + 1], in[i])) << i;
    }
}

TEST(Rational, Int64ConversionOverflows) {
    EXPECT_EQ(to_int64(Integer(-5)), -5);
    Integer huge = Integer(1) << 80;
    EXPECT_THROW(to_int64(huge), Error);
}
