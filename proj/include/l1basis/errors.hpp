#ifndef L1BASIS_ERRORS_HPP
#define L1BASIS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace l1basis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual)
      : Error("length mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Raised by exact inversion when the matrix has rank < n.
/// `dependent_column()` is the first column (0-based) that lies in the span
/// of the columns before it.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(std::size_t column)
      : Error("singular matrix: column " + std::to_string(column + 1) +
              " is a linear combination of the preceding columns"),
        column_(column) {}

  std::size_t dependent_column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A computation whose cost grows exponentially (or cubically with rational
/// entry growth) was asked to run above its configured cap.
class DimensionTooLarge : public Error {
 public:
  DimensionTooLarge(std::size_t n, std::size_t cap, std::string cost)
      : Error("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap) + " (" + cost + ")"),
        n_(n),
        cap_(cap),
        cost_(std::move(cost)) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }
  const std::string& cost_estimate() const noexcept { return cost_; }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::string cost_;
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(std::size_t column)
      : Error("basis vector " + std::to_string(column + 1) + " does not have unit l1 norm"), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace l1basis

#endif  // L1BASIS_ERRORS_HPP
