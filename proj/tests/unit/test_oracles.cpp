#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace oracle;

// Hand-computed values that pin down the reference implementations.

TEST(Oracle, Solve) {
  Cols cols{{1, 0}, {1, 1}};
  EXPECT_EQ(*solve(cols, {0, 1}), (Vec{-1, 1}));
  EXPECT_FALSE(solve({{1, 2}, {2, 4}}, {1, 0}).has_value());
}

TEST(Oracle, RatioExtremes) {
  auto e = l1_ratio_extremes({{1, 0}, {1, 1}});
  EXPECT_EQ(e.min_ratio, q(1, 2));
  EXPECT_EQ(e.max_ratio, 2);
  auto b = l1_ratio_extremes({{q(1, 3), q(1, 3), q(1, 3)}, {1, 1, 0}, {1, 0, 1}});
  EXPECT_EQ(b.min_ratio, q(1, 5));
  EXPECT_EQ(b.max_ratio, 2);
  auto d = l1_ratio_extremes({{3}});
  EXPECT_EQ(d.min_ratio, 3);
  EXPECT_EQ(d.max_ratio, 3);
}

TEST(Oracle, OperatorNorm) {
  // Rows (1, -2), (0, -1).
  EXPECT_EQ(operator_norm_by_vertices({{1, 0}, {-2, -1}}), 3);
}

TEST(Oracle, UnconditionalConstant) {
  EXPECT_EQ(unconditional_by_definition({{1, 0}, {0, 1}}), 1);
  EXPECT_EQ(unconditional_by_definition({{1, 0}, {1, 1}}), 3);
}

TEST(Oracle, Bottleneck) {
  Cols block{{q(1, 3), q(1, 3), q(1, 3)}, {q(1, 2), q(1, 2), 0}, {q(1, 2), 0, q(1, 2)}};
  EXPECT_EQ(bottleneck_by_permutations(block), q(4, 3));
  EXPECT_EQ(bottleneck_by_permutations({{0, 1}, {1, 0}}), 0);
}
