#include <gtest/gtest.h>

#include "fundstring/fundstring.hpp"

using namespace fundstring;

namespace {

Weight W(std::string_view s) { return Weight::parse(s); }

}  // namespace

TEST(RootSystem, CountsAndRho) {
  auto const c2 = root_system(LieType(Family::C, 2));
  EXPECT_EQ(c2.positive_roots.size(), 4u);
  EXPECT_EQ(c2.rho, W("2,1"));
  auto const d3 = root_system(LieType(Family::D, 3));
  EXPECT_EQ(d3.positive_roots.size(), 6u);
  EXPECT_EQ(d3.rho, W("2,1,0"));
  auto const b2 = root_system(LieType(Family::B, 2));
  EXPECT_EQ(b2.positive_roots.size(), 4u);
  EXPECT_EQ(b2.rho, W("3/2,1/2"));
  EXPECT_EQ(root_system(LieType(Family::A, 3)).positive_roots.size(), 6u);
  EXPECT_EQ(root_system(LieType(Family::D, 2)).positive_roots.size(), 2u);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(root_system(LieType(Family::B, n)).simple_roots.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(root_system(LieType(Family::C, n)).positive_roots.size(), static_cast<std::size_t>(n * n));
    EXPECT_EQ(root_system(LieType(Family::D, n)).positive_roots.size(), static_cast<std::size_t>(n * (n - 1)));
  }
}

TEST(Freudenthal, Examples) {
  LieType const c2(Family::C, 2);
  EXPECT_EQ(freudenthal(c2, W("1,0"), W("0,1")), 1);
  EXPECT_EQ(freudenthal(c2, W("2,0"), W("0,0")), 2);
  EXPECT_EQ(freudenthal(c2, W("2,0"), W("1,0")), 0);
  LieType const a1(Family::A, 1);
  for (int k = 0; k <= 6; ++k) {
    for (auto const& [w, m] : weight_diagram(a1, Weight::from_ints({k, 0})).entries) EXPECT_EQ(m, 1);
  }
}

TEST(Freudenthal, RejectsNonDominantHighest) {
  EXPECT_THROW(freudenthal(LieType(Family::C, 2), W("0,1"), W("0,0")), Error);
  EXPECT_THROW(weyl_dimension(LieType(Family::D, 3), W("1,1,-2")), Error);
}

TEST(WeightDiagram, Examples) {
  auto const c2 = weight_diagram(LieType(Family::C, 2), W("1,1"));
  EXPECT_EQ(c2.entries.size(), 5u);
  EXPECT_EQ(c2.total(), 5);
  auto const b2 = weight_diagram(LieType(Family::B, 2), W("1/2,1/2"));
  EXPECT_EQ(b2.entries.size(), 4u);
  for (auto const& [w, m] : b2.entries) EXPECT_EQ(m, 1);

  // adjoint of sl(3) in ambient coordinates: six roots and a doubled zero weight
  auto const a2 = weight_diagram(LieType(Family::A, 2), W("2,1,0"));
  EXPECT_EQ(a2.entries.size(), 7u);
  EXPECT_EQ(a2.at(W("1,1,1")), 2);
  EXPECT_EQ(a2.at(W("2,0,1")), 1);
  EXPECT_EQ(a2.total(), 8);
}

TEST(WeylDimension, Examples) {
  EXPECT_EQ(weyl_dimension(LieType(Family::C, 2), W("1,0")), 4);
  EXPECT_EQ(weyl_dimension(LieType(Family::D, 3), W("1,0,0")), 6);
  EXPECT_EQ(weyl_dimension(LieType(Family::B, 2), W("1/2,1/2")), 4);
  EXPECT_EQ(weyl_dimension(LieType(Family::A, 2), W("1,0,-1")), 8);
  EXPECT_EQ(weyl_dimension(LieType(Family::B, 4), W("6,1,1,0")), 46683);
  EXPECT_EQ(weyl_dimension(StringLabel(LieType(Family::D, 3), 0, 3)), 20);  // 10 + 10
}

TEST(TensorOracle, Examples) {
  LieType const c2(Family::C, 2);
  EXPECT_EQ(tensor_sigma_oracle(c2, 1, 1, W("0,0")), 4);
  EXPECT_EQ(tensor_sigma_oracle(c2, 0, 1, W("1,0")), 1);
  EXPECT_EQ(tensor_sigma_oracle(LieType(Family::B, 2), 1, 1, W("1,0")), 2);
  EXPECT_EQ(tensor_sigma_diagram(c2, 1, 1).total(), 16);
  EXPECT_EQ(tensor_sigma_oracle(c2, 1, 1, W("1/2,1/2")), 0);
}

TEST(Dominance, SimpleRootCoefficients) {
  LieType const d3(Family::D, 3);
  auto const c = simple_root_coefficients(d3, W("1,1,0"), W("0,0,0"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_FALSE(simple_root_coefficients(d3, W("1,0,0"), W("1,1,0")).has_value());
  EXPECT_FALSE(simple_root_coefficients(LieType(Family::C, 2), W("1,0"), W("0,0")).has_value());
  EXPECT_TRUE(simple_root_coefficients(LieType(Family::B, 2), W("1,0"), W("0,0")).has_value());
}

TEST(GenFunc, Examples) {
  EXPECT_TRUE(genfunc_check(3, W("1,0,0"), 12));
  EXPECT_TRUE(genfunc_check(2, W("0,0"), 12));
  EXPECT_TRUE(genfunc_check(3, W("2,1,0"), 2));
  auto const c = genfunc_coefficients(2, 0, 6);
  EXPECT_EQ(c, (std::vector<BigInt>{1, 0, 1, 0, 1, 0, 1}));
  auto const s = genfunc_coefficients(3, 3, 6);
  EXPECT_EQ(s, (std::vector<BigInt>{0, 0, 0, 1, 0, 2, 0}));
  EXPECT_THROW(genfunc_check(3, W("1/2,1/2,1/2"), 4), Error);
  // a wrong source is caught
  EXPECT_FALSE(genfunc_check(3, W("1,0,0"), 5, [](int) { return BigInt(1); }));
}
