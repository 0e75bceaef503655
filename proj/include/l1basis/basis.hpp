#ifndef L1BASIS_BASIS_HPP
#define L1BASIS_BASIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "l1basis/errors.hpp"
#include "l1basis/matrix.hpp"
#include "l1basis/scalar.hpp"

namespace l1basis {

/// n linearly independent vectors of l1^n, held as the columns of an
/// invertible matrix T. The inverse is computed once at construction, which
/// is also where invertibility is checked.
class Basis {
 public:
  static Basis from_matrix(Matrix m, InversionOptions options = {}) {
    Matrix inv = invert(m, options);
    return Basis(std::move(m), std::move(inv));
  }

  static Basis from_columns(std::span<const Vector> columns, InversionOptions options = {}) {
    return from_matrix(Matrix::from_columns(columns), options);
  }

  /// The standard unit vector basis e_1, ..., e_n.
  static Basis standard(std::size_t n) { return Basis(Matrix::identity(n), Matrix::identity(n)); }

  std::size_t dimension() const noexcept { return matrix_.size(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const Matrix& inverse() const noexcept { return inverse_; }
  Vector vector(std::size_t j) const { return matrix_.column(j); }
  std::vector<Vector> vectors() const { return matrix_.columns(); }

  /// Index of the first vector whose l1 norm is not exactly 1, if any.
  std::optional<std::size_t> first_unnormalized() const {
    for (std::size_t j = 0; j < dimension(); ++j)
      if (l1_norm(matrix_.column_view(j)) != 1) return j;
    return std::nullopt;
  }
  bool is_normalized() const { return !first_unnormalized().has_value(); }

  /// Every vector divided by its own l1 norm.
  Basis normalized() const {
    Matrix m = matrix_;
    Matrix inv = inverse_;
    for (std::size_t j = 0; j < dimension(); ++j) {
      Scalar norm = l1_norm(matrix_.column_view(j));
      for (auto& x : m.column_view(j)) x /= norm;
      // Row j of the inverse scales by the reciprocal factor.
      for (std::size_t i = 0; i < dimension(); ++i) inv(j, i) *= norm;
    }
    return Basis(std::move(m), std::move(inv));
  }

  friend bool operator==(const Basis& a, const Basis& b) { return a.matrix_ == b.matrix_; }

 private:
  Basis(Matrix m, Matrix inv) : matrix_(std::move(m)), inverse_(std::move(inv)) {}

  Matrix matrix_;
  Matrix inverse_;
};

/// Coefficient functionals x_1*, ..., x_n*; functional(j)[i] is x_j*(i).
class DualSystem {
 public:
  explicit DualSystem(std::vector<Vector> functionals) : functionals_(std::move(functionals)) {}

  std::size_t size() const noexcept { return functionals_.size(); }
  const Vector& functional(std::size_t j) const { return functionals_.at(j); }
  const std::vector<Vector>& functionals() const noexcept { return functionals_; }

  /// x_j*(v) = sum_i x_j*(i) v(i).
  Scalar apply(std::size_t j, std::span<const Scalar> v) const {
    const Vector& f = functional(j);
    if (f.size() != v.size()) throw LengthMismatch(f.size(), v.size());
    Scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += f[i] * v[i];
    return s;
  }

 private:
  std::vector<Vector> functionals_;
};

inline bool is_biorthogonal(const Basis& b, const DualSystem& d) {
  if (d.size() != b.dimension()) return false;
  for (std::size_t j = 0; j < d.size(); ++j)
    for (std::size_t i = 0; i < b.dimension(); ++i)
      if (d.apply(j, b.matrix().column_view(i)) != (i == j ? 1 : 0)) return false;
  return true;
}

inline DualSystem coefficient_functionals(const Basis& b) {
  std::vector<Vector> rows;
  rows.reserve(b.dimension());
  for (std::size_t j = 0; j < b.dimension(); ++j) rows.push_back(b.inverse().row(j));
  DualSystem d(std::move(rows));
  if (!is_biorthogonal(b, d)) throw Error("internal error: coefficient functionals are not biorthogonal");
  return d;
}

/// Norm of each functional on l1^n, i.e. the l-infinity norm of its row.
inline std::vector<Scalar> dual_norms(const DualSystem& d) {
  std::vector<Scalar> out;
  out.reserve(d.size());
  for (const auto& f : d.functionals()) out.push_back(linf_norm(f));
  return out;
}

/// Optimal constants with k1 * sum|a_i| <= ||sum a_i x_i||_1 <= k2 * sum|a_i|.
struct EquivalenceConstants {
  Scalar k1;
  Scalar k2;
  /// Coordinate i whose signed unit vector e_i is the image attaining k1:
  /// the coefficients are alpha = T^-1 e_i, i.e. alpha_j = x_j*(i).
  std::size_t k1_witness = 0;
  /// Basis index j attaining k2 at alpha = e_j.
  std::size_t k2_witness = 0;

  Vector k1_coefficients(const Basis& b) const { return b.inverse().column(k1_witness); }
};

/// k2 = max_j ||x_j||_1 and 1/k1 = max_i sum_j |x_j*(i)|. Both are attained,
/// so they are the optimal constants, not just valid ones.
inline EquivalenceConstants equivalence_constants(const Basis& b) {
  auto [k2, j] = max_column_l1(b.matrix());
  auto [inv_k1, i] = max_column_l1(b.inverse());
  return {Scalar(1) / inv_k1, k2, i, j};
}

}  // namespace l1basis

#endif  // L1BASIS_BASIS_HPP
