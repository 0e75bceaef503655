#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace l1basis;
using test::basis_of;
using test::to_cols;

TEST(Basis, CoefficientFunctionalsOfTheStandardBasis) {
  auto d = coefficient_functionals(Basis::standard(4));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.functional(j), unit_vector(4, j));
  for (auto x : dual_norms(d)) EXPECT_EQ(x, 1);
}

TEST(Basis, CoefficientFunctionalsOfTheThreeDimensionalBlock) {
  Basis b = basis_of({{"1/3", "1/3", "1/3"}, {"1", "1", "0"}, {"1", "0", "1"}});
  auto d = coefficient_functionals(b);
  EXPECT_EQ(d.functional(0), (Vector{-3, 3, 3}));
  EXPECT_EQ(d.functional(1), (Vector{1, 0, -1}));
  EXPECT_EQ(d.functional(2), (Vector{1, -1, 0}));
  EXPECT_EQ(dual_norms(d), (std::vector<Scalar>{3, 1, 1}));
  auto c = equivalence_constants(b);
  EXPECT_EQ(c.k1, ratio(1, 5));
  EXPECT_EQ(c.k2, 2);
}

TEST(Basis, EquivalenceConstantsOfSmallExamples) {
  auto s = equivalence_constants(Basis::standard(5));
  EXPECT_EQ(s.k1, 1);
  EXPECT_EQ(s.k2, 1);
  Basis b = basis_of({{"1", "0"}, {"1", "1"}});
  auto c = equivalence_constants(b);
  EXPECT_EQ(c.k1, ratio(1, 2));
  EXPECT_EQ(c.k2, 2);
  EXPECT_EQ(c.k2_witness, 1u);
  // The k1 witness coefficients reach the bound exactly.
  Vector a = c.k1_coefficients(b);
  EXPECT_EQ(l1_norm(b.matrix() * a), c.k1 * l1_norm(a));
}

TEST(Basis, BiorthogonalityAndOptimalityOnRandomBases) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    Basis b = random_basis(1 + rng() % 5, rng());
    auto d = coefficient_functionals(b);
    EXPECT_TRUE(is_biorthogonal(b, d));
    auto c = equivalence_constants(b);
    EXPECT_LE(c.k1, c.k2);
    EXPECT_EQ(l1_norm(b.vector(c.k2_witness)), c.k2);
    Vector a = c.k1_coefficients(b);
    EXPECT_EQ(l1_norm(b.matrix() * a), c.k1 * l1_norm(a));
    // No sampled combination leaves [k1, k2].
    for (int s = 0; s < 20; ++s) {
      Vector alpha(b.dimension());
      for (auto& x : alpha) x = ratio(static_cast<long>(rng() % 17) - 8, 4);
      if (l1_norm(alpha) == 0) continue;
      Scalar r = l1_norm(b.matrix() * alpha) / l1_norm(alpha);
      EXPECT_LE(c.k1, r);
      EXPECT_LE(r, c.k2);
    }
  }
}

TEST(Basis, ConstantsMatchRayEnumerationOracle) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    Basis b = random_basis(1 + rng() % 4, rng());
    auto c = equivalence_constants(b);
    auto e = oracle::l1_ratio_extremes(to_cols(b));
    EXPECT_EQ(c.k1, e.min_ratio);
    EXPECT_EQ(c.k2, e.max_ratio);
  }
}

TEST(Basis, ScalingAndPermutation) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 4;
    Basis b = random_basis(n, rng());
    auto c = equivalence_constants(b);
    auto K = unconditional_constant(b).value;
    Scalar f = ratio(static_cast<long>(rng() % 7) + 1, 3);
    auto scaled_cols = b.vectors();
    for (auto& v : scaled_cols) v = f * v;
    Basis scaled = Basis::from_columns(scaled_cols);
    auto cs = equivalence_constants(scaled);
    EXPECT_EQ(cs.k1, f * c.k1);
    EXPECT_EQ(cs.k2, f * c.k2);
    EXPECT_EQ(unconditional_constant(scaled).value, K);

    // Permute vectors and coordinates together.
    std::vector<std::size_t> perm(n), coord(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(coord.begin(), coord.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(coord.begin(), coord.end(), rng);
    std::vector<Vector> pc(n, Vector(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) pc[j][coord[i]] = b.vector(perm[j])[i];
    Basis permuted = Basis::from_columns(pc);
    auto cp = equivalence_constants(permuted);
    EXPECT_EQ(cp.k1, c.k1);
    EXPECT_EQ(cp.k2, c.k2);
    EXPECT_EQ(unconditional_constant(permuted).value, K);
  }
}

TEST(Basis, NormalizationRescalesVectorsAndFunctionals) {
  Basis b = basis_of({{"1/3", "1/3", "1/3"}, {"1", "1", "0"}, {"1", "0", "1"}});
  EXPECT_FALSE(b.is_normalized());
  EXPECT_EQ(b.first_unnormalized(), std::optional<std::size_t>(1));
  Basis n = b.normalized();
  EXPECT_TRUE(n.is_normalized());
  EXPECT_EQ(n.vector(1), (Vector{ratio(1, 2), ratio(1, 2), 0}));
  EXPECT_EQ(n.matrix() * n.inverse(), Matrix::identity(3));
}

TEST(Basis, RejectsSingularAndMismatchedInput) {
  EXPECT_THROW(basis_of({{"1", "2"}, {"2", "4"}}), SingularMatrix);
  std::vector<Vector> ragged{{1, 0}, {0}};
  EXPECT_THROW(Basis::from_columns(ragged), LengthMismatch);
}

TEST(Unconditional, Examples) {
  auto s = unconditional_constant(Basis::standard(4));
  EXPECT_EQ(s.value, 1);
  EXPECT_EQ(s.witness_signs, (SignVector{1, 1, 1, 1}));
  auto u = unconditional_constant(basis_of({{"1", "0"}, {"1", "1"}}));
  EXPECT_EQ(u.value, 3);
  EXPECT_EQ(u.witness_signs, (SignVector{1, -1}));
  Vector d{ratio(-2, 3), 5, ratio(1, 7)};
  EXPECT_EQ(unconditional_constant(Basis::from_matrix(Matrix::diagonal(d))).value, 1);
}

TEST(Unconditional, WitnessAttainsTheValue) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    Basis b = random_basis(1 + rng() % 6, rng());
    auto u = unconditional_constant(b);
    EXPECT_EQ(u.witness_signs.front(), 1);
    EXPECT_EQ(operator_norm_l1(sign_operator(b, u.witness_signs)), u.value);
  }
}

TEST(Unconditional, MatchesDefinitionOracle) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 150; ++t) {
    Basis b = random_basis(1 + rng() % 6, rng());
    EXPECT_EQ(unconditional_constant(b).value, oracle::unconditional_by_definition(to_cols(b)));
  }
}

TEST(Unconditional, IndependentOfWorkerCount) {
  Basis b = random_basis(12, 77);
  auto one = unconditional_constant(b, {.workers = 1});
  for (unsigned w : {2u, 3u, 8u}) {
    auto many = unconditional_constant(b, {.workers = w});
    EXPECT_EQ(many.value, one.value);
    EXPECT_EQ(many.witness_signs, one.witness_signs);
  }
}

TEST(Unconditional, CapIsEnforced) {
  EXPECT_THROW(unconditional_constant(Basis::standard(6), {.cap = 5}), DimensionTooLarge);
  try {
    unconditional_constant(Basis::standard(30));
    FAIL();
  } catch (const DimensionTooLarge& e) {
    EXPECT_EQ(e.dimension(), 30u);
    EXPECT_EQ(e.cap(), 24u);
    EXPECT_NE(e.cost_estimate().find("536870912"), std::string::npos) << e.cost_estimate();
  }
}
