#ifndef L1BASIS_CONSTRUCTIONS_HPP
#define L1BASIS_CONSTRUCTIONS_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "l1basis/basis.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/matrix.hpp"

namespace l1basis {

// ---------------------------------------------------------------------------
// The n-dimensional block x_1 = (1/n, ..., 1/n), x_i = e_1 + e_i (2 <= i <= n)
// ---------------------------------------------------------------------------

struct Prop1Block {
  std::size_t n = 0;
  Basis basis = Basis::standard(1);
  bool normalized = false;
};

inline Matrix prop1_matrix(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = Scalar(1, n);
  for (std::size_t j = 1; j < n; ++j) {
    m(0, j) = 1;
    m(j, j) = 1;
  }
  return m;
}

/// Closed-form coefficient functionals of the unnormalized block:
///   x_1* = -n/(n-2) e_1 + sum_{i>=2} n/(n-2) e_i
///   x_j* = 1/(n-2) e_1 + (n-3)/(n-2) e_j - sum_{i not in {1,j}} 1/(n-2) e_i
inline std::vector<Vector> prop1_closed_form_functionals(std::size_t n) {
  if (n < 3) throw InvalidArgument("the block needs n >= 3");
  const Scalar d = n - 2;
  std::vector<Vector> rows(n, Vector(n));
  rows[0][0] = Scalar(-static_cast<long>(n)) / d;
  for (std::size_t i = 1; i < n; ++i) rows[0][i] = Scalar(static_cast<long>(n)) / d;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) rows[j][i] = Scalar(-1) / d;
    rows[j][0] = Scalar(1) / d;
    rows[j][j] = Scalar(static_cast<long>(n) - 3) / d;
  }
  for (auto& r : rows)
    for (auto& x : r) x.canonicalize();
  return rows;
}

/// Lower equivalence constant of the unnormalized block: 1/5 at n = 3 and
/// (n-2)/(3n-5) from n = 4 on.
inline Scalar prop1_expected_k1(std::size_t n) {
  if (n == 3) return Scalar(1, 5);
  return ratio(static_cast<long>(n) - 2, 3 * static_cast<long>(n) - 5);
}

/// Every self-check the construction must satisfy; empty when all pass.
inline std::vector<std::string> verify_prop1_block(const Prop1Block& block) {
  std::vector<std::string> failures;
  const std::size_t n = block.n;
  const Basis& b = block.basis;
  DualSystem dual = coefficient_functionals(b);

  // Normalizing divides x_j by ||x_j||_1, which multiplies x_j* by it.
  auto expected = prop1_closed_form_functionals(n);
  if (block.normalized)
    for (std::size_t j = 1; j < n; ++j) expected[j] = Scalar(2) * expected[j];
  for (std::size_t j = 0; j < n; ++j)
    if (dual.functional(j) != expected[j])
      failures.push_back("functional x_" + std::to_string(j + 1) + "* differs from the closed form");
  if (!is_biorthogonal(b, dual)) failures.push_back("functionals are not biorthogonal");

  if (linf_norm(b.matrix().column_view(0)) != Scalar(1, n)) failures.push_back("max |x_1(i)| != 1/n");

  auto c = equivalence_constants(b);
  if (block.normalized) {
    if (c.k2 != 1) failures.push_back("normalized block has k2 != 1");
  } else {
    if (c.k2 != 2) failures.push_back("k2 = " + to_string(c.k2) + ", expected 2");
    if (c.k1 != prop1_expected_k1(n))
      failures.push_back("k1 = " + to_string(c.k1) + ", expected " + to_string(prop1_expected_k1(n)));
    if (c.k1 < Scalar(1, 5)) failures.push_back("k1 < 1/5");
  }
  return failures;
}

inline Prop1Block prop1_block(std::size_t n, bool normalized = false, InversionOptions options = {}) {
  if (n < 3) throw InvalidArgument("the block is defined for n >= 3, got n = " + std::to_string(n));
  Prop1Block block{n, Basis::from_matrix(prop1_matrix(n), options), normalized};
  if (normalized) block.basis = block.basis.normalized();
  if (auto failures = verify_prop1_block(block); !failures.empty())
    throw Error("block self-check failed at n = " + std::to_string(n) + ": " + failures.front());
  return block;
}

/// Finite section of the block-diagonal basis built from blocks of the
/// given sizes. Constants are combined blockwise; `assemble()` builds the
/// full matrix when it is small enough to invert.
struct Prop1DirectSum {
  std::vector<Prop1Block> blocks;
  std::size_t dimension = 0;
  /// min over all vectors of ||x||_inf, equal to 1 / (largest block size).
  Scalar sup_norm_witness;
  Scalar k1;
  Scalar k2;

  Matrix matrix() const {
    Matrix m(dimension);
    std::size_t offset = 0;
    for (const auto& blk : blocks) {
      for (std::size_t j = 0; j < blk.n; ++j)
        for (std::size_t i = 0; i < blk.n; ++i) m(offset + i, offset + j) = blk.basis.matrix()(i, j);
      offset += blk.n;
    }
    return m;
  }

  Basis assemble(InversionOptions options = {}) const { return Basis::from_matrix(matrix(), options); }
};

inline Prop1DirectSum prop1_direct_sum(const std::vector<std::size_t>& sizes, bool normalized = false) {
  if (sizes.empty()) throw InvalidArgument("direct sum needs at least one block");
  Prop1DirectSum s;
  bool first = true;
  for (std::size_t n : sizes) {
    Prop1Block blk = prop1_block(n, normalized);
    auto c = equivalence_constants(blk.basis);
    for (std::size_t j = 0; j < n; ++j) {
      Scalar sup = linf_norm(blk.basis.matrix().column_view(j));
      if (first || sup < s.sup_norm_witness) s.sup_norm_witness = sup;
      first = false;
    }
    if (s.blocks.empty() || c.k1 < s.k1) s.k1 = c.k1;
    if (s.blocks.empty() || c.k2 > s.k2) s.k2 = c.k2;
    s.dimension += n;
    s.blocks.push_back(std::move(blk));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Random bases
// ---------------------------------------------------------------------------

enum class RandomKind { near_standard, dense, signed_permutation };

struct RandomMode {
  RandomKind kind = RandomKind::dense;
  /// near_standard: every column lies strictly within this l1 distance of e_j.
  Scalar radius = Scalar(1, 4);
  /// dense: entries a / denominator with |a| <= max_numerator.
  long max_numerator = 8;
  long denominator = 4;
};

inline std::string to_string(RandomKind k) {
  switch (k) {
    case RandomKind::near_standard: return "near_standard";
    case RandomKind::dense: return "dense";
    case RandomKind::signed_permutation: return "signed_permutation";
  }
  return "unknown";
}

inline RandomKind parse_random_kind(const std::string& s) {
  if (s == "near_standard") return RandomKind::near_standard;
  if (s == "dense") return RandomKind::dense;
  if (s == "signed_permutation") return RandomKind::signed_permutation;
  throw InvalidArgument("unknown random mode '" + s + "'");
}

/// mt19937_64 is fully specified by the standard; reduction by modulo keeps
/// the draws identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() >> 63) != 0; }

  /// Rational a / den with |a| <= max_numerator.
  Scalar grid(long max_numerator, long den) {
    return ratio(between(-max_numerator, max_numerator), den);
  }

 private:
  std::mt19937_64 engine_;
};

/// Moves each vector by a random rational offset of l1 length strictly in
/// (0, bound). A zero bound returns the vectors unchanged.
inline std::vector<Vector> random_perturbation(std::span<const Vector> x, const Scalar& bound, Rng& rng) {
  std::vector<Vector> out(x.begin(), x.end());
  if (sgn(bound) <= 0) return out;
  constexpr long kSteps = 64;
  for (auto& v : out) {
    Vector w(v.size());
    for (auto& c : w) c = rng.grid(8, 8);
    if (l1_norm(w) == 0) w[static_cast<std::size_t>(rng.below(w.size()))] = rng.coin() ? 1 : -1;
    Scalar length = bound * ratio(rng.between(1, kSteps - 1), kSteps);
    Scalar scale = length / l1_norm(w);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += scale * w[i];
  }
  return out;
}

inline constexpr int kMaxSingularRejections = 100;

/// Deterministic in (n, seed, mode).
inline Basis random_basis(std::size_t n, std::uint64_t seed, const RandomMode& mode = {}) {
  if (n < 1) throw InvalidArgument("random_basis needs n >= 1");
  Rng rng(seed);
  if (mode.kind == RandomKind::signed_permutation) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);
    Matrix m(n);
    for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = rng.coin() ? -1 : 1;
    return Basis::from_matrix(std::move(m));
  }
  for (int attempt = 0; attempt < kMaxSingularRejections; ++attempt) {
    Matrix m(n);
    if (mode.kind == RandomKind::dense) {
      if (mode.denominator <= 0 || mode.max_numerator <= 0) throw InvalidArgument("dense grid must be nonempty");
      for (std::size_t j = 0; j < n; ++j)
        for (auto& x : m.column_view(j)) x = rng.grid(mode.max_numerator, mode.denominator);
    } else {
      std::vector<Vector> e = Matrix::identity(n).columns();
      m = Matrix::from_columns(random_perturbation(e, mode.radius, rng));
    }
    try {
      return Basis::from_matrix(std::move(m));
    } catch (const SingularMatrix&) {
    }
  }
  throw GenerationFailed("no invertible draw after " + std::to_string(kMaxSingularRejections) + " attempts (n = " +
                         std::to_string(n) + ", mode " + to_string(mode.kind) + ")");
}

}  // namespace l1basis

#endif  // L1BASIS_CONSTRUCTIONS_HPP
