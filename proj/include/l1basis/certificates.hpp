#ifndef L1BASIS_CERTIFICATES_HPP
#define L1BASIS_CERTIFICATES_HPP

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "l1basis/basis.hpp"
#include "l1basis/certified.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/norms.hpp"
#include "l1basis/unconditional.hpp"

namespace l1basis {

inline Scalar l2_norm_squared(std::span<const Scalar> v) {
  Scalar s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

// ---------------------------------------------------------------------------
// (k, 1)-equivalence of a normalized K-unconditional basis with
// k = inf ||x_n||_2 / (K sqrt 2). Everything is compared squared.
// ---------------------------------------------------------------------------

struct Thm2Certificate {
  Scalar K;
  SignVector K_witness;
  Scalar inf_l2_sq;             // min_n ||x_n||_2^2
  std::size_t inf_index = 0;    // n attaining the minimum
  Scalar k_sq_scaled;           // inf_l2_sq / (2 K^2), i.e. k^2
  Scalar k1_actual;             // optimal lower constant
  Scalar k2_actual;             // optimal upper constant, 1 for normalized input
  bool lower_holds = false;     // k1_actual^2 >= k_sq_scaled
  bool upper_holds = false;     // k2_actual <= 1
  bool holds = false;
};

inline Thm2Certificate thm2_check(const Basis& b, EnumerationOptions options = {}) {
  if (auto j = b.first_unnormalized()) throw NotNormalized(*j);
  Thm2Certificate c;
  auto K = unconditional_constant(b, options);
  c.K = K.value;
  c.K_witness = K.witness_signs;
  for (std::size_t j = 0; j < b.dimension(); ++j) {
    Scalar s = l2_norm_squared(b.matrix().column_view(j));
    if (j == 0 || s < c.inf_l2_sq) {
      c.inf_l2_sq = s;
      c.inf_index = j;
    }
  }
  c.k_sq_scaled = c.inf_l2_sq / (2 * c.K * c.K);
  auto eq = equivalence_constants(b);
  c.k1_actual = eq.k1;
  c.k2_actual = eq.k2;
  c.lower_holds = c.k1_actual * c.k1_actual >= c.k_sq_scaled;
  c.upper_holds = c.k2_actual <= 1;
  c.holds = c.lower_holds && c.upper_holds;
  return c;
}

// ---------------------------------------------------------------------------
// ||sum a_i x_i||_1 >= 1/(C sqrt 2) * sum |a_i| ||x_i||_2, checked as
// 2 C^2 ||sum a_i x_i||_1^2 >= (sum |a_i| ||x_i||_2)^2.
// ---------------------------------------------------------------------------

struct Fact2Result {
  Scalar lhs_sq_scaled;  // 2 C^2 ||sum a_i x_i||_1^2
  Interval rhs_bounds;   // certified enclosure of sum |a_i| ||x_i||_2
  double rhs_approx = 0.0;
  bool holds = false;
  /// Equality case or a near tie that the 40-digit bounds could not settle.
  bool needed_refinement = false;
};

inline constexpr unsigned kRadicalSumDigits = 40;

/// Variant taking a precomputed unconditional constant C of b.
inline Fact2Result fact2_check(const Basis& b, const Scalar& C, std::span<const Scalar> alphas) {
  const std::size_t n = b.dimension();
  if (alphas.size() > n) throw LengthMismatch(n, alphas.size());
  Vector combo(n);
  std::vector<RadicalTerm> terms;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (sgn(alphas[i]) == 0) continue;
    auto col = b.matrix().column_view(i);
    for (std::size_t r = 0; r < n; ++r) combo[r] += alphas[i] * col[r];
    terms.push_back({abs(alphas[i]), l2_norm_squared(col)});
  }
  Scalar l1 = l1_norm(combo);
  Fact2Result out;
  out.lhs_sq_scaled = 2 * C * C * l1 * l1;
  auto cmp = compare_radical_sum(terms, out.lhs_sq_scaled, kRadicalSumDigits);
  out.rhs_bounds = cmp.sum_bounds;
  out.rhs_approx = Scalar((cmp.sum_bounds.lo + cmp.sum_bounds.hi) / 2).get_d();
  out.holds = cmp.order != std::strong_ordering::greater;
  out.needed_refinement = cmp.needed_refinement;
  return out;
}

inline Fact2Result fact2_check(const Basis& b, std::span<const Scalar> alphas, EnumerationOptions options = {}) {
  return fact2_check(b, unconditional_constant(b, options).value, alphas);
}

// ---------------------------------------------------------------------------
// ||v||_p^p <= ||v||_inf^(p-1) * ||v||_1 for 1 < p < inf.
// ---------------------------------------------------------------------------

struct InterpolationResult {
  Interval lhs;  // ||v||_p^p
  Interval rhs;  // ||v||_inf^(p-1) * ||v||_1
  bool holds = false;
  bool equality = false;
  /// Non-integer p only: no precision up to the cap separated the sides and
  /// the equality structure was absent.
  bool inconclusive = false;
};

inline constexpr mpfr_prec_t kInterpolationMaxBits = 1 << 14;

inline InterpolationResult interpolation_check(std::span<const Scalar> v, const Scalar& p) {
  if (p <= 1) throw InvalidArgument("interpolation_check needs p > 1, got " + to_string(p));
  if (v.empty()) throw InvalidArgument("interpolation_check of an empty vector");
  const Scalar sup = linf_norm(v);
  const Scalar l1 = l1_norm(v);
  const Scalar p_minus_1 = p - 1;

  auto evaluate = [&](mpfr_prec_t bits) {
    Interval lhs = Interval::point(0);
    for (const auto& x : v) lhs = lhs + rational_power(abs(x), p, bits);
    Interval pw = sgn(sup) == 0 ? Interval::point(0) : rational_power(sup, p_minus_1, bits);
    return std::pair{lhs, Interval{pw.lo * l1, pw.hi * l1}};
  };

  InterpolationResult r;
  mpfr_prec_t bits = bits_for_digits(kDefaultNormDigits);
  for (;;) {
    auto [lhs, rhs] = evaluate(bits);
    r.lhs = lhs;
    r.rhs = rhs;
    if (lhs.is_point() && rhs.is_point()) {
      r.equality = lhs.lo == rhs.lo;
      r.holds = lhs.lo <= rhs.lo;
      return r;
    }
    if (lhs.hi < rhs.lo) {
      r.holds = true;
      return r;
    }
    if (lhs.lo > rhs.hi) return r;
    // Overlap. If every nonzero |v_i| equals sup, both sides are the same
    // closed form (#support) * sup^p.
    bool constant_modulus = true;
    for (const auto& x : v)
      if (sgn(x) != 0 && abs(x) != sup) constant_modulus = false;
    if (constant_modulus) {
      r.holds = r.equality = true;
      return r;
    }
    if (bits >= kInterpolationMaxBits) {
      r.inconclusive = true;
      return r;
    }
    bits *= 2;
  }
}

}  // namespace l1basis

#endif  // L1BASIS_CERTIFICATES_HPP
