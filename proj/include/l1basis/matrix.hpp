#ifndef L1BASIS_MATRIX_HPP
#define L1BASIS_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l1basis/errors.hpp"
#include "l1basis/scalar.hpp"

namespace l1basis {

/// A point of l1^n; coordinate i is x(i).
using Vector = std::vector<Scalar>;

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline Scalar l1_norm(std::span<const Scalar> v) {
  Scalar s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

inline Scalar linf_norm(std::span<const Scalar> v) {
  Scalar m = 0;
  for (const auto& x : v) {
    Scalar a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

inline Scalar l1_distance(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += abs(Scalar(a[i] - b[i]));
  return s;
}

/// Dense square matrix of exact rationals, stored column-major so that
/// column j is the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const Scalar> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_columns(std::span<const Vector> columns) {
    const std::size_t n = columns.size();
    Matrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (columns[j].size() != n) throw LengthMismatch(n, columns[j].size());
      std::copy(columns[j].begin(), columns[j].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(j * n));
    }
    return m;
  }

  /// Row-major nested initializer, convenient in tests: {{a, b}, {c, d}}.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t n = rows.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw LengthMismatch(n, rows[i].size());
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[j * n_ + i]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[j * n_ + i]; }

  std::span<const Scalar> column_view(std::size_t j) const { return {data_.data() + j * n_, n_}; }
  std::span<Scalar> column_view(std::size_t j) { return {data_.data() + j * n_, n_}; }

  Vector column(std::size_t j) const {
    auto c = column_view(j);
    return {c.begin(), c.end()};
  }

  Vector row(std::size_t i) const {
    Vector r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> cols;
    cols.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) cols.push_back(column(j));
    return cols;
  }

  Matrix transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw LengthMismatch(a.n_, b.n_);
    const std::size_t n = a.n_;
    Matrix c(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        for (std::size_t i = 0; i < n; ++i) c(i, j) += a(i, k) * bkj;
      }
    return c;
  }

  friend Vector operator*(const Matrix& a, std::span<const Scalar> v) {
    if (a.n_ != v.size()) throw LengthMismatch(a.n_, v.size());
    Vector r(a.n_);
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (sgn(v[k]) == 0) continue;
      for (std::size_t i = 0; i < a.n_; ++i) r[i] += a(i, k) * v[k];
    }
    return r;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) { return a * std::span<const Scalar>(v); }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

/// Largest l1 column norm and the lowest column index attaining it.
inline std::pair<Scalar, std::size_t> max_column_l1(const Matrix& m) {
  Scalar best = -1;
  std::size_t arg = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Scalar s = l1_norm(m.column_view(j));
    if (s > best) {
      best = s;
      arg = j;
    }
  }
  return {best < 0 ? Scalar(0) : best, arg};
}

/// Operator norm of m acting on l1^n: the maximum absolute column sum.
inline Scalar operator_norm_l1(const Matrix& m) { return max_column_l1(m).first; }

struct InversionOptions {
  std::size_t dimension_cap = 64;
};

/// Exact inverse by rational Gauss-Jordan elimination. The pivot in each
/// column is the entry of largest absolute value, lowest row on ties.
inline Matrix invert(const Matrix& m, InversionOptions options = {}) {
  const std::size_t n = m.size();
  if (n > options.dimension_cap)
    throw DimensionTooLarge(n, options.dimension_cap, "exact inversion of a " + std::to_string(n) + "x" +
                                                          std::to_string(n) + " rational matrix");
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  // Row operations are applied to both a and inv; row order is tracked
  // implicitly by swapping.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    Scalar best = 0;
    for (std::size_t r = col; r < n; ++r) {
      Scalar v = abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot == n) throw SingularMatrix(col);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace l1basis

#endif  // L1BASIS_MATRIX_HPP
