#include <gtest/gtest.h>

#include "fundstring/fundstring.hpp"

using namespace fundstring;

namespace {

Weight W(std::string_view s) { return Weight::parse(s); }

}  // namespace

TEST(Binom, Convention) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(-3, 2), 0);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(-1, -1), 0);
  EXPECT_EQ(binom(3, 4), 0);
}

TEST(Binom, LargeValuesAreExact) {
  EXPECT_EQ(binom(100, 50).str(), "100891344545564193334812497256");
  EXPECT_EQ(binom(1'000'000, 1), 1'000'000);
  EXPECT_EQ(binom(1'000'000, 999'999), 1'000'000);
}

TEST(Ballot, Examples) {
  EXPECT_EQ(ballot(1, 1), 2);
  EXPECT_EQ(ballot(0, 2), 2);
  for (int m = 0; m < 20; ++m) EXPECT_EQ(ballot(m, 0), 1);
  // Catalan numbers at m = 0
  EXPECT_EQ(ballot(0, 5), 42);
  EXPECT_EQ(ballot(-1, 3), 0);
}

TEST(Ballot, RationalForm) {
  for (int m = 0; m <= 30; ++m) {
    for (int t = 0; t <= 30; ++t) {
      BigInt const num = BigInt(m + 1) * binom(m + 2 * t, t);
      ASSERT_EQ(num % (m + t + 1), 0);
      EXPECT_EQ(num / (m + t + 1), ballot(m, t)) << m << "," << t;
    }
  }
}

TEST(HockeyStick, PartialSums) {
  for (int n = 1; n <= 20; ++n) {
    BigInt s = 0;
    for (int r = 0; r <= 20; ++r) {
      s += binom(r + n - 1, n - 1);
      EXPECT_EQ(s, binom(r + n, n));
    }
  }
}

TEST(HalfInteger, Formatting) {
  EXPECT_EQ(HalfInteger{6}.to_string(), "3");
  EXPECT_EQ(HalfInteger{3}.to_string(), "3/2");
  EXPECT_EQ(HalfInteger{-1}.to_string(), "-1/2");
  EXPECT_TRUE(HalfInteger{4}.is_integer());
  EXPECT_EQ(HalfInteger{4}.as_int(), 2);
}

TEST(WeightParse, IntegersAndHalves) {
  EXPECT_EQ(W("2,-1,0"), Weight::from_ints({2, -1, 0}));
  EXPECT_EQ(W(" 1/2 , 1/2, -1/2").to_string(), "1/2,1/2,-1/2");
  EXPECT_FALSE(W("1/2,3/2").is_integral());
  EXPECT_TRUE(W("2/2,4/2").is_integral());
}

TEST(WeightParse, Rejections) {
  EXPECT_THROW(W("1,1/2"), Error);
  EXPECT_THROW(W("1/3,0"), Error);
  EXPECT_THROW(W(""), Error);
  EXPECT_THROW(W("1,,2"), Error);
  EXPECT_THROW(W("x"), Error);
  EXPECT_THROW(Weight::from_doubled({1, 2}), Error);
}

TEST(WeightStats, OneNorm) {
  EXPECT_EQ(one_norm(W("2,-1,0")).twice, 6);
  EXPECT_EQ(one_norm(W("0,0")).twice, 0);
  EXPECT_EQ(one_norm(W("1/2,1/2,-1/2")).to_string(), "3/2");
}

TEST(WeightStats, ZeroCount) {
  EXPECT_EQ(zero_count(W("2,-1,0")), 1);
  EXPECT_EQ(zero_count(W("0,0,0")), 3);
  EXPECT_EQ(zero_count(W("1/2,-1/2")), 0);
}

TEST(WeightStats, NegCount) {
  EXPECT_EQ(neg_count(W("1/2,-1/2,-1/2")), 2);
  EXPECT_EQ(neg_count(W("1,1,0")), 0);
  EXPECT_EQ(neg_count(W("-1,-1")), 2);
}

TEST(Integrality, GroupLattice) {
  EXPECT_TRUE(is_G_integral(LieType(Family::D, 3), W("1,1,0")));
  EXPECT_FALSE(is_G_integral(LieType(Family::D, 3), W("1/2,1/2,1/2")));
  EXPECT_TRUE(is_G_integral(LieType(Family::C, 2), W("2,-1")));
}

TEST(Dominant, Representatives) {
  EXPECT_EQ(dominant_representative(LieType(Family::C, 3), W("0,-2,1")), W("2,1,0"));
  EXPECT_EQ(dominant_representative(LieType(Family::D, 2), W("-1,-1")), W("1,1"));
  EXPECT_EQ(dominant_representative(LieType(Family::D, 2), W("1,-1")), W("1,-1"));
  EXPECT_EQ(dominant_representative(LieType(Family::D, 3), W("-1,0,-2")), W("2,1,0"));
  EXPECT_EQ(dominant_representative(LieType(Family::B, 2), W("-1/2,3/2")), W("3/2,1/2"));
  EXPECT_EQ(dominant_representative(LieType(Family::A, 2), W("0,2,1")), W("2,1,0"));
}

TEST(Dominant, Idempotent) {
  for (Family f : {Family::B, Family::C, Family::D}) {
    LieType const lie(f, 3);
    for (auto const& w : weyl_orbit(lie, W("2,-1,1"))) {
      Weight const d = dominant_representative(lie, w);
      EXPECT_TRUE(is_dominant(lie, d));
      EXPECT_EQ(dominant_representative(lie, d), d);
    }
  }
}

TEST(Orbit, Sizes) {
  EXPECT_EQ(weyl_orbit(LieType(Family::C, 2), W("1,0")).size(), 4u);
  EXPECT_EQ(weyl_orbit(LieType(Family::B, 3), W("2,1,0")).size(), 24u);
  EXPECT_EQ(weyl_orbit(LieType(Family::D, 3), W("2,1,1")).size(), 12u);
  EXPECT_EQ(weyl_orbit(LieType(Family::D, 3), W("2,1,0")).size(), 24u);
  EXPECT_EQ(weyl_orbit(LieType(Family::D, 2), W("1,-1")).size(), 2u);
  EXPECT_EQ(weyl_orbit(LieType(Family::A, 2), W("1,1,0")).size(), 3u);
}

TEST(NormalizeA, Examples) {
  EXPECT_EQ(normalize_A(2, 0, 2, W("1,1,0")), W("1,1,0"));
  EXPECT_EQ(normalize_A(2, 0, 2, W("0,0,-1")), W("1,1,0"));
  EXPECT_FALSE(normalize_A(1, 1, 1, W("1,0")).has_value());
  EXPECT_FALSE(normalize_A(2, 0, 1, W("-1,0,0")).has_value());
}

TEST(LieType, Validation) {
  EXPECT_THROW(LieType(Family::B, 1), Error);
  EXPECT_THROW(LieType(Family::A, 0), Error);
  EXPECT_NO_THROW(LieType(Family::D, 2));
  EXPECT_EQ(LieType(Family::A, 3).ambient_dim(), 4);
  EXPECT_EQ(parse_family("d"), Family::D);
  EXPECT_THROW(parse_family("E"), Error);
  EXPECT_THROW(require_rank(LieType(Family::C, 3), W("1,0")), Error);
}

TEST(Label, Validation) {
  LieType const d4(Family::D, 4);
  EXPECT_THROW(StringLabel(d4, 0, 0), Error);
  EXPECT_THROW(StringLabel(d4, 0, 5), Error);
  EXPECT_THROW(StringLabel(d4, -1, 1), Error);
  EXPECT_THROW(StringLabel::spin_plus(LieType(Family::C, 3), 0), Error);
  EXPECT_THROW(StringLabel::spin_minus(LieType(Family::B, 3), 0), Error);
  EXPECT_THROW(StringLabel(d4, 0, 3, Variant::SplitTop), Error);
  EXPECT_EQ(highest_weights(StringLabel(d4, 1, 4)).size(), 2u);
  EXPECT_EQ(highest_weights(StringLabel::spin_minus(d4, 1)).front(), W("3/2,1/2,1/2,-1/2"));
}
