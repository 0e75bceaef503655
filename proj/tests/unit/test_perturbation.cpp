#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace l1basis;
using test::basis_of;
using test::to_cols;

namespace {

/// Extremes of ||sum a x|| / ||sum a y||, computed with the oracle's solver.
oracle::Extremes ratio_extremes(const Basis& x, const Basis& y) {
  const std::size_t n = x.dimension();
  oracle::Cols m;
  for (std::size_t i = 0; i < n; ++i) {
    oracle::Vec e(n);
    e[i] = 1;
    m.push_back(oracle::combine(to_cols(x), *oracle::solve(to_cols(y), e)));
  }
  return oracle::l1_ratio_extremes(m);
}

}  // namespace

TEST(PerturbationRadius, Examples) {
  Basis e2 = Basis::standard(2);
  auto same = e2.vectors();
  EXPECT_EQ(perturbation_radius(e2, same).m, 0);
  std::vector<Vector> y{{1, ratio(1, 4)}, {0, 1}};
  auto r = perturbation_radius(e2, y, Scalar(ratio(1, 4)));
  EXPECT_EQ(r.m, ratio(1, 4));
  EXPECT_FALSE(r.dominated);  // strict inequality
  EXPECT_TRUE(perturbation_radius(e2, y, Scalar(ratio(1, 3))).dominated);
  auto block = prop1_block(3, true).basis.vectors();
  auto b = perturbation_radius(Basis::standard(3), block);
  EXPECT_EQ(b.m, ratio(4, 3));
  EXPECT_EQ(b.per_index_distances, (std::vector<Scalar>{ratio(4, 3), 1, 1}));
}

TEST(PerturbationRadius, IsSymmetricAndSatisfiesTheTriangleInequality) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    auto a = random_basis(n, rng()).vectors();
    auto b = random_basis(n, rng()).vectors();
    auto c = random_basis(n, rng()).vectors();
    EXPECT_EQ(perturbation_radius(a, b).m, perturbation_radius(b, a).m);
    EXPECT_EQ(perturbation_radius(a, a).m, 0);
    if (a != b) {
      EXPECT_GT(perturbation_radius(a, b).m, 0);
    }
    auto ab = perturbation_radius(a, b).per_index_distances;
    auto bc = perturbation_radius(b, c).per_index_distances;
    auto ac = perturbation_radius(a, c).per_index_distances;
    for (std::size_t j = 0; j < n; ++j) EXPECT_LE(ac[j], ab[j] + bc[j]);
  }
}

TEST(BpCriterion, Examples) {
  Basis e3 = Basis::standard(3);
  auto same = e3.vectors();
  auto zero = bp_criterion(e3, same);
  EXPECT_EQ(zero.sum, 0);
  EXPECT_TRUE(zero.passes);

  Vector u{ratio(1, 18), ratio(-1, 18), ratio(1, 18)};  // (1/6) times a unit sign-alternating vector
  std::vector<Vector> y;
  for (const auto& v : same) y.push_back(v + u);
  auto half = bp_criterion(e3, y);
  EXPECT_EQ(half.sum, ratio(1, 2));
  EXPECT_TRUE(half.passes);

  std::vector<Vector> swap{{0, 1}, {1, 0}};
  auto s = bp_criterion(Basis::standard(2), swap);
  EXPECT_EQ(s.sum, 4);
  EXPECT_FALSE(s.passes);
}

TEST(BpCriterion, PassingPerturbationsAreInvertible) {
  std::mt19937_64 rng(6);
  int passing = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Basis x = random_basis(n, rng(), {.kind = RandomKind::near_standard});
    Rng r(rng());
    auto y = random_perturbation(x.vectors(), 1 / (Scalar(static_cast<long>(n)) * linf_norm(dual_norms(coefficient_functionals(x)))), r);
    auto bp = bp_criterion(x, y);
    ASSERT_TRUE(bp.passes);
    ++passing;
    EXPECT_NO_THROW(Basis::from_columns(y));
  }
  EXPECT_EQ(passing, 300);
}

TEST(Sandwich, Examples) {
  Basis e2 = Basis::standard(2);
  auto same = std::get<SandwichCertificate>(sandwich_check(e2, e2));
  EXPECT_EQ(same.m, 0);
  EXPECT_EQ(same.bound_low, 1);
  EXPECT_EQ(same.bound_high, 1);
  EXPECT_EQ(same.actual_low, 1);
  EXPECT_EQ(same.actual_high, 1);

  Basis y = basis_of({{"5/4", "0"}, {"1/4", "1"}});
  auto c = std::get<SandwichCertificate>(sandwich_check(e2, y));
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.m, ratio(1, 4));
  EXPECT_EQ(c.bound_low, ratio(4, 5));
  EXPECT_EQ(c.bound_high, ratio(4, 3));
  auto e = ratio_extremes(e2, y);
  EXPECT_EQ(c.actual_low, e.min_ratio);
  EXPECT_EQ(c.actual_high, e.max_ratio);
  EXPECT_TRUE(c.holds);

  std::vector<Vector> swap{{0, 1}, {1, 0}};
  EXPECT_TRUE(std::holds_alternative<NotApplicable>(sandwich_check(e2, Basis::from_columns(swap))));
}

TEST(Sandwich, ActualConstantsMatchOracleAndLieWithinBounds) {
  std::mt19937_64 rng(12);
  Basis block = prop1_block(3).basis;
  for (int t = 0; t < 100; ++t) {
    const bool use_block = t % 4 == 0;
    Basis x = use_block ? block : random_basis(1 + rng() % 4, rng());
    Scalar k = equivalence_constants(x).k1;
    Rng r(rng());
    Basis y = Basis::from_columns(random_perturbation(x.vectors(), k, r));
    auto c = std::get<SandwichCertificate>(sandwich_check(x, y));
    auto e = ratio_extremes(x, y);
    EXPECT_EQ(c.actual_low, e.min_ratio);
    EXPECT_EQ(c.actual_high, e.max_ratio);
    EXPECT_TRUE(c.holds);
  }
}

TEST(Bottleneck, MatchingFindsPerfectAssignments) {
  std::vector<std::vector<bool>> allowed{{false, true, false}, {true, true, false}, {false, true, true}};
  auto m = max_bipartite_matching(allowed, 3);
  EXPECT_EQ(m, (std::vector<int>{1, 0, 2}));
  allowed[2] = {false, true, false};
  m = max_bipartite_matching(allowed, 3);
  EXPECT_NE(std::find(m.begin(), m.end(), -1), m.end());
}

TEST(Bottleneck, Examples) {
  auto s = min_dominating_delta(Basis::standard(4));
  EXPECT_EQ(s.delta_min, 0);
  EXPECT_EQ(s.assignment, (std::vector<std::size_t>{0, 1, 2, 3}));
  auto b = min_dominating_delta(prop1_block(3, true).basis);
  EXPECT_EQ(b.delta_min, ratio(4, 3));
  EXPECT_EQ(b.distance_matrix(0, 0), ratio(4, 3));
  EXPECT_EQ(b.distance_matrix(0, 1), 1);
  EXPECT_EQ(b.distance_matrix(2, 2), 1);
  EXPECT_EQ(b.distance_matrix(1, 2), 2);
  EXPECT_TRUE(b.input_normalized);
}

TEST(Bottleneck, NormalizedBlocksReachTwoMinusTwoOverN) {
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_EQ(min_dominating_delta(prop1_block(n, true).basis).delta_min, ratio(2 * (static_cast<long>(n) - 1), static_cast<long>(n)));
}

TEST(Bottleneck, MatchesPermutationBruteForce) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto kind = t % 3 == 0 ? RandomKind::signed_permutation : t % 3 == 1 ? RandomKind::near_standard : RandomKind::dense;
    Basis b = random_basis(n, rng(), {.kind = kind, .radius = 1}).normalized();
    auto r = min_dominating_delta(b);
    EXPECT_EQ(r.delta_min, oracle::bottleneck_by_permutations(to_cols(b)));
    EXPECT_LE(r.delta_min, 2);
    Scalar worst = 0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, r.distance_matrix(i, r.assignment[i]));
    EXPECT_EQ(worst, r.delta_min);
  }
}

TEST(Bottleneck, SignInsensitiveVariant) {
  Basis flipped = basis_of({{"0", "-1"}, {"1", "0"}});
  EXPECT_EQ(min_dominating_delta(flipped).delta_min, 2);
  EXPECT_EQ(min_dominating_delta_up_to_sign(flipped).delta_min, 0);
}
