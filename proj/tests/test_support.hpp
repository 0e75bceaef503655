#ifndef L1BASIS_TESTS_TEST_SUPPORT_HPP
#define L1BASIS_TESTS_TEST_SUPPORT_HPP

#include <initializer_list>
#include <random>

#include "l1basis/l1basis.hpp"
#include "oracles.hpp"

namespace l1basis::test {

inline oracle::Cols to_cols(const Basis& b) {
  oracle::Cols out;
  for (const auto& v : b.vectors()) out.push_back(v);
  return out;
}

inline oracle::Cols to_cols(const Matrix& m) { return m.columns(); }

/// Basis from columns written as rational strings.
inline Basis basis_of(std::initializer_list<std::initializer_list<const char*>> cols) {
  std::vector<Vector> vs;
  for (auto c : cols) {
    Vector v;
    for (const char* s : c) v.push_back(parse_scalar(s));
    vs.push_back(std::move(v));
  }
  return Basis::from_columns(vs);
}

/// Every invertible basis with entries from `grid`, enumerated in odometer
/// order until `limit` have been produced.
template <typename Fn>
std::size_t for_each_grid_basis(std::size_t n, const std::vector<Scalar>& grid, std::size_t limit, Fn fn) {
  std::vector<std::size_t> digits(n * n, 0);
  std::size_t produced = 0;
  while (produced < limit) {
    std::vector<Vector> cols(n, Vector(n));
    for (std::size_t k = 0; k < n * n; ++k) cols[k / n][k % n] = grid[digits[k]];
    if (oracle::invertible(cols)) {
      fn(Basis::from_columns(cols));
      ++produced;
    }
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == grid.size()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return produced;
}

/// `count` invertible bases with entries drawn uniformly from `grid`.
template <typename Fn>
void for_random_grid_bases(std::size_t n, const std::vector<Scalar>& grid, std::size_t count, std::uint64_t seed, Fn fn) {
  std::mt19937_64 rng(seed);
  std::size_t produced = 0;
  while (produced < count) {
    std::vector<Vector> cols(n, Vector(n));
    for (auto& c : cols)
      for (auto& x : c) x = grid[rng() % grid.size()];
    if (!oracle::invertible(cols)) continue;
    fn(Basis::from_columns(cols));
    ++produced;
  }
}

inline std::vector<Scalar> half_grid() {
  return {Scalar(-1), ratio(-1, 2), Scalar(0), ratio(1, 2), Scalar(1)};
}

}  // namespace l1basis::test

#endif  // L1BASIS_TESTS_TEST_SUPPORT_HPP
