#ifndef L1BASIS_NORMS_HPP
#define L1BASIS_NORMS_HPP

#include <optional>
#include <span>
#include <string>

#include "l1basis/certified.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/matrix.hpp"
#include "l1basis/scalar.hpp"

namespace l1basis {

/// Exponent of an lp norm: a rational p >= 1, or infinity.
class PNorm {
 public:
  static PNorm infinity() { return PNorm(); }

  static PNorm finite(const Scalar& p) {
    if (p < 1) throw InvalidArgument("p-norm requires p >= 1, got " + l1basis::to_string(p));
    return PNorm(p);
  }

  static PNorm one() { return finite(1); }
  static PNorm two() { return finite(2); }

  bool is_infinite() const noexcept { return !p_.has_value(); }
  const Scalar& exponent() const {
    if (!p_) throw InvalidArgument("the infinity norm has no finite exponent");
    return *p_;
  }
  bool is_integer_exponent() const { return p_ && is_integer(*p_); }

  std::string to_string() const { return p_ ? l1basis::to_string(*p_) : std::string("inf"); }

  friend bool operator==(const PNorm&, const PNorm&) = default;

 private:
  PNorm() = default;
  explicit PNorm(Scalar p) : p_(std::move(p)) {}
  std::optional<Scalar> p_;
};

/// Result of evaluating an lp norm.
///
/// The "measure" is the quantity carried exactly: ||v||_inf for p = inf and
/// ||v||_p^p for finite p (so ||v||_1 itself when p = 1). Comparing two
/// NormValues with the same p reduces to comparing measures. For non-integer
/// p the measure is irrational in general and only certified bounds are kept.
struct NormValue {
  PNorm p = PNorm::one();
  std::optional<Scalar> exact_measure;
  Interval measure_bounds;
  double approx = 0.0;  // ||v||_p, for display only

  bool is_exact() const { return exact_measure.has_value(); }
};

inline constexpr unsigned kDefaultNormDigits = 40;

inline NormValue lp_norm(std::span<const Scalar> v, const PNorm& p, unsigned digits = kDefaultNormDigits) {
  if (v.empty()) throw InvalidArgument("lp_norm of an empty vector");
  NormValue out;
  out.p = p;
  if (p.is_infinite()) {
    Scalar m = linf_norm(v);
    out.exact_measure = m;
    out.measure_bounds = Interval::point(m);
    out.approx = m.get_d();
    return out;
  }
  const Scalar& e = p.exponent();
  const mpfr_prec_t bits = bits_for_digits(digits);
  Interval sum = Interval::point(0);
  for (const auto& x : v) sum = sum + rational_power(abs(x), e, bits);
  if (sum.is_point()) out.exact_measure = sum.lo;
  out.measure_bounds = sum;
  out.approx = std::pow(Scalar((sum.lo + sum.hi) / 2).get_d(), 1.0 / e.get_d());
  return out;
}

}  // namespace l1basis

#endif  // L1BASIS_NORMS_HPP
