#ifndef L1BASIS_BOTTLENECK_HPP
#define L1BASIS_BOTTLENECK_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "l1basis/basis.hpp"
#include "l1basis/matrix.hpp"

namespace l1basis {

/// Maximum bipartite matching by augmenting paths (Kuhn). `allowed[i][j]`
/// marks an admissible edge from left vertex i to right vertex j. Returns
/// match_of_left, with -1 for unmatched vertices.
inline std::vector<int> max_bipartite_matching(const std::vector<std::vector<bool>>& allowed, std::size_t right) {
  const std::size_t left = allowed.size();
  std::vector<int> match_left(left, -1), match_right(right, -1);
  std::vector<char> seen(right);

  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < right; ++j) {
      if (!allowed[i][j] || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || self(self, static_cast<std::size_t>(match_right[j]))) {
        match_left[i] = static_cast<int>(j);
        match_right[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(augment, i);
  }
  return match_left;
}

struct BottleneckAssignment {
  Scalar value;
  /// assignment[i] = column assigned to row i.
  std::vector<std::size_t> assignment;
};

/// Permutation minimizing the largest selected cost: binary search over the
/// sorted distinct cost values, each candidate threshold checked for a
/// perfect matching on the admissible edges.
inline BottleneckAssignment bottleneck_assignment(const Matrix& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {0, {}};
  std::vector<Scalar> values;
  values.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) values.push_back(cost(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto try_threshold = [&](const Scalar& t) -> std::vector<int> {
    std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) allowed[i][j] = cost(i, j) <= t;
    auto match = max_bipartite_matching(allowed, n);
    if (std::find(match.begin(), match.end(), -1) != match.end()) return {};
    return match;
  };

  // The largest value always admits a perfect matching.
  std::size_t lo = 0, hi = values.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (!try_threshold(values[mid]).empty()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  auto match = try_threshold(values[lo]);
  BottleneckAssignment out{values[lo], {}};
  for (int j : match) out.assignment.push_back(static_cast<std::size_t>(j));
  return out;
}

struct BottleneckResult {
  Scalar delta_min;
  /// assignment[i] = index j of the basis vector paired with e_i.
  std::vector<std::size_t> assignment;
  /// distance(i, j) = ||x_j - e_i||_1
  Matrix distance_matrix;
  bool input_normalized = true;
};

/// Smallest radius max_i ||x_sigma(i) - e_i||_1 over all reindexings sigma of
/// the basis, i.e. the least delta for which some reordering of x is within
/// delta of the standard basis (dominated only for strictly larger delta).
inline BottleneckResult min_dominating_delta(const Basis& b) {
  const std::size_t n = b.dimension();
  Matrix d(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = b.matrix().column_view(j);
    Scalar total = l1_norm(col);
    for (std::size_t i = 0; i < n; ++i) {
      // ||x_j - e_i||_1 = ||x_j||_1 - |x_j(i)| + |x_j(i) - 1|
      d(i, j) = total - abs(col[i]) + abs(Scalar(col[i] - 1));
    }
  }
  auto assignment = bottleneck_assignment(d);
  return {std::move(assignment.value), std::move(assignment.assignment), std::move(d), b.is_normalized()};
}

/// As min_dominating_delta, but each vector may also be replaced by its
/// negative: pair cost min(||x_j - e_i||_1, ||x_j + e_i||_1).
inline BottleneckResult min_dominating_delta_up_to_sign(const Basis& b) {
  const std::size_t n = b.dimension();
  Matrix d(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = b.matrix().column_view(j);
    Scalar total = l1_norm(col);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar rest = total - abs(col[i]);
      d(i, j) = rest + std::min(abs(Scalar(col[i] - 1)), abs(Scalar(col[i] + 1)));
    }
  }
  auto assignment = bottleneck_assignment(d);
  return {std::move(assignment.value), std::move(assignment.assignment), std::move(d), b.is_normalized()};
}

}  // namespace l1basis

#endif  // L1BASIS_BOTTLENECK_HPP
