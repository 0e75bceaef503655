#ifndef L1BASIS_CERTIFIED_HPP
#define L1BASIS_CERTIFIED_HPP

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <optional>
#include <cstddef>
#include <span>
#include <vector>

#include "l1basis/errors.hpp"
#include "l1basis/scalar.hpp"

namespace l1basis {

/// Closed rational interval [lo, hi] known to contain a real quantity.
struct Interval {
  Scalar lo;
  Scalar hi;

  static Interval point(const Scalar& x) { return {x, x}; }
  bool is_point() const { return lo == hi; }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
};

/// Bits of working precision needed for `digits` decimal digits.
inline mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

namespace detail {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Scalar to_scalar() const {
    Scalar q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

// x^(num/den) for x >= 0 and a positive rational exponent, rounded in the
// direction `rnd`. Every intermediate step rounds the same way, and each step
// is monotone non-decreasing in its argument, so the result is a directed
// bound of the true value.
inline Scalar directed_rational_power(const Scalar& x, const Scalar& exponent, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  if (sgn(x) == 0) return 0;
  if (is_integer(exponent)) return pow_uint(x, exponent.get_num().get_ui());
  const unsigned long num = exponent.get_num().get_ui();
  const unsigned long den = exponent.get_den().get_ui();
  MpfrValue v(bits);
  mpfr_set_q(v.get(), pow_uint(x, num).get_mpq_t(), rnd);
  mpfr_rootn_ui(v.get(), v.get(), den, rnd);
  return v.to_scalar();
}

}  // namespace detail

/// Certified enclosure of x^exponent for rational x >= 0 and rational
/// exponent > 0. Exact (a point) whenever the exponent is an integer.
inline Interval rational_power(const Scalar& x, const Scalar& exponent, mpfr_prec_t bits) {
  if (sgn(x) < 0) throw InvalidArgument("rational_power: negative base");
  if (sgn(exponent) <= 0) throw InvalidArgument("rational_power: exponent must be positive");
  if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
    throw InvalidArgument("rational_power: exponent too large");
  if (is_integer(exponent)) return Interval::point(pow_uint(x, exponent.get_num().get_ui()));
  return {detail::directed_rational_power(x, exponent, bits, MPFR_RNDD),
          detail::directed_rational_power(x, exponent, bits, MPFR_RNDU)};
}

/// Certified enclosure of sqrt(x) for rational x >= 0.
inline Interval certified_sqrt(const Scalar& x, mpfr_prec_t bits) {
  if (sgn(x) < 0) throw InvalidArgument("certified_sqrt: negative argument");
  mpz_class num_root, den_root;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
    mpz_sqrt(num_root.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), x.get_den_mpz_t());
    Scalar r(num_root, den_root);
    r.canonicalize();
    return Interval::point(r);
  }
  detail::MpfrValue lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_scalar(), hi.to_scalar()};
}

/// True when x is the square of a rational.
inline bool is_rational_square(const Scalar& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

/// One term c * sqrt(radicand) of a radical sum; both parts must be >= 0.
struct RadicalTerm {
  Scalar coefficient;
  Scalar radicand;
};

struct RadicalComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  /// Enclosure of the radical sum at the precision that settled the comparison.
  Interval sum_bounds;
  /// False when the initial certified bounds settled it; true when grouping
  /// into independent radicals or precision refinement was needed.
  bool needed_refinement = false;
};

/// Exactly compares S = sum c_i sqrt(q_i) against sqrt(target_square).
///
/// First tries certified bounds at `initial_digits`. When those straddle the
/// target, terms are merged into classes whose radicands differ by a rational
/// square factor. A single class reduces to an exact rational comparison of
/// squares. With two or more independent radicals and positive coefficients,
/// S^2 is irrational and can never equal the rational target, so doubling the
/// precision eventually separates the two.
inline RadicalComparison compare_radical_sum(std::span<const RadicalTerm> terms, const Scalar& target_square,
                                             unsigned initial_digits = 40) {
  if (sgn(target_square) < 0) throw InvalidArgument("compare_radical_sum: negative target");
  std::vector<RadicalTerm> live;
  for (const auto& t : terms) {
    if (sgn(t.coefficient) < 0 || sgn(t.radicand) < 0)
      throw InvalidArgument("compare_radical_sum: negative coefficient or radicand");
    if (sgn(t.coefficient) != 0 && sgn(t.radicand) != 0) live.push_back(t);
  }

  auto bound = [&](mpfr_prec_t bits) {
    Interval s = Interval::point(0);
    for (const auto& t : live) {
      Interval r = certified_sqrt(t.radicand, bits);
      s = s + Interval{t.coefficient * r.lo, t.coefficient * r.hi};
    }
    return s;
  };
  auto settle = [&](const Interval& s) -> std::optional<std::strong_ordering> {
    Scalar lo_sq = s.lo * s.lo, hi_sq = s.hi * s.hi;
    if (hi_sq < target_square) return std::strong_ordering::less;
    if (lo_sq > target_square) return std::strong_ordering::greater;
    if (s.is_point()) return cmp(lo_sq, target_square) == 0 ? std::strong_ordering::equal : std::strong_ordering::less;
    return std::nullopt;
  };

  mpfr_prec_t bits = bits_for_digits(initial_digits);
  Interval s = bound(bits);
  if (auto o = settle(s)) return {*o, s, false};

  // Merge terms: sqrt(q) = sqrt(q / r) * sqrt(r) with sqrt(q / r) rational.
  std::vector<RadicalTerm> classes;
  for (const auto& t : live) {
    bool merged = false;
    for (auto& c : classes) {
      Scalar ratio = t.radicand / c.radicand;
      if (is_rational_square(ratio)) {
        c.coefficient += t.coefficient * certified_sqrt(ratio, 64).lo;
        merged = true;
        break;
      }
    }
    if (!merged) classes.push_back(t);
  }
  if (classes.size() <= 1) {
    Scalar sq = classes.empty() ? Scalar(0) : Scalar(classes[0].coefficient * classes[0].coefficient * classes[0].radicand);
    int c = cmp(sq, target_square);
    auto order = c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    return {order, s, true};
  }
  for (;;) {
    bits *= 2;
    s = bound(bits);
    if (auto o = settle(s)) return {*o, s, true};
  }
}

}  // namespace l1basis

#endif  // L1BASIS_CERTIFIED_HPP
