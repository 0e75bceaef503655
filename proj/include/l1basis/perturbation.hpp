#ifndef L1BASIS_PERTURBATION_HPP
#define L1BASIS_PERTURBATION_HPP

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "l1basis/basis.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/matrix.hpp"

namespace l1basis {

struct PerturbationReport {
  Scalar m;  // max_n ||x_n - y_n||_1
  std::optional<Scalar> delta;
  /// m < delta, strictly. Only meaningful when delta is set.
  bool dominated = false;
  std::vector<Scalar> per_index_distances;
};

inline PerturbationReport perturbation_radius(std::span<const Vector> x, std::span<const Vector> y,
                                              std::optional<Scalar> delta = std::nullopt) {
  if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
  PerturbationReport r;
  r.m = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].size() != y[j].size()) throw LengthMismatch(x[j].size(), y[j].size());
    Scalar d = l1_distance(x[j], y[j]);
    if (d > r.m) r.m = d;
    r.per_index_distances.push_back(std::move(d));
  }
  if (delta) {
    r.dominated = r.m < *delta;
    r.delta = std::move(delta);
  }
  return r;
}

inline PerturbationReport perturbation_radius(const Basis& x, std::span<const Vector> y,
                                              std::optional<Scalar> delta = std::nullopt) {
  if (y.size() != x.dimension()) throw LengthMismatch(x.dimension(), y.size());
  const auto xs = x.vectors();
  return perturbation_radius(xs, y, std::move(delta));
}

struct BpCriterion {
  Scalar sum;   // sum_n ||x_n*|| * ||x_n - y_n||_1
  bool passes;  // sum < 1
};

/// Small-perturbation test: when the weighted distance sum is below 1, the
/// perturbed system is a basis equivalent to x.
inline BpCriterion bp_criterion(const Basis& x, std::span<const Vector> y) {
  const std::size_t n = x.dimension();
  if (y.size() != n) throw LengthMismatch(n, y.size());
  const auto norms = dual_norms(coefficient_functionals(x));
  Scalar sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j].size() != n) throw LengthMismatch(n, y[j].size());
    sum += norms[j] * l1_distance(x.matrix().column_view(j), y[j]);
  }
  bool passes = sum < 1;
  return {std::move(sum), passes};
}

/// Exact sandwich for a perturbation y of x with radius m below the lower
/// equivalence constant k of x:
///   k/(k+m) ||sum a y|| <= ||sum a x|| <= k/(k-m) ||sum a y||.
struct SandwichCertificate {
  Scalar k;
  Scalar m;
  Scalar bound_low;    // k / (k + m)
  Scalar bound_high;   // k / (k - m)
  Scalar actual_low;   // inf ||sum a x|| / ||sum a y||
  Scalar actual_high;  // sup ||sum a x|| / ||sum a y||
  bool holds = false;
};

/// The radius is not below k, so the estimate says nothing.
struct NotApplicable {
  Scalar k;
  Scalar m;
};

using SandwichOutcome = std::variant<SandwichCertificate, NotApplicable>;

inline SandwichOutcome sandwich_check(const Basis& x, const Basis& y) {
  if (x.dimension() != y.dimension()) throw LengthMismatch(x.dimension(), y.dimension());
  Scalar k = equivalence_constants(x).k1;
  const auto ys = y.vectors();
  Scalar m = perturbation_radius(x, ys).m;
  if (m >= k) return NotApplicable{k, m};

  SandwichCertificate c;
  c.bound_low = k / (k + m);
  c.bound_high = k / (k - m);
  c.actual_high = operator_norm_l1(x.matrix() * y.inverse());
  c.actual_low = 1 / operator_norm_l1(y.matrix() * x.inverse());
  c.holds = c.bound_low <= c.actual_low && c.actual_low <= c.actual_high && c.actual_high <= c.bound_high;
  c.k = std::move(k);
  c.m = std::move(m);
  return c;
}

}  // namespace l1basis

#endif  // L1BASIS_PERTURBATION_HPP
