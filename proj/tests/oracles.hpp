#ifndef L1BASIS_TESTS_ORACLES_HPP
#define L1BASIS_TESTS_ORACLES_HPP

// Brute-force reference computations used to check the library. They share
// nothing with it beyond GMP: row-major nested vectors, naive elimination,
// and enumeration straight from the definitions.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
/// cols[j] is the j-th basis vector.
using Cols = std::vector<Vec>;

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Q norm1(const Vec& v) {
  Q s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

inline Vec combine(const Cols& cols, const Vec& a) {
  Vec out(cols.empty() ? 0 : cols[0].size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a[j] * cols[j][i];
  return out;
}

/// Solves sum_j a_j cols[j] = b by elimination with the first nonzero pivot.
inline std::optional<Vec> solve(const Cols& cols, const Vec& b) {
  const std::size_t n = b.size();
  std::vector<Vec> a(n, Vec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

inline bool invertible(const Cols& cols) {
  Vec e(cols.size());
  if (!cols.empty()) e[0] = 1;
  return solve(cols, e).has_value();
}

/// A nonzero vector orthogonal to every row, if the rows have rank n - 1.
inline std::optional<Vec> kernel_direction(std::vector<Vec> rows, std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      Q f = rows[k][c] / rows[r][c];
      for (std::size_t m = 0; m < n; ++m) rows[k][m] -= f * rows[r][m];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != n - 1) return std::nullopt;
  std::size_t free = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) ++free;
  Vec v(n);
  v[free] = 1;
  for (std::size_t k = 0; k < r; ++k) v[pivot_col[k]] = -rows[k][free] / rows[k][pivot_col[k]];
  return v;
}

struct Extremes {
  Q min_ratio;
  Q max_ratio;
};

/// min and max of ||sum a_j x_j||_1 / sum |a_j| over all a != 0.
/// The ratio is linear-fractional on every cell of the arrangement cut by the
/// hyperplanes a_j = 0 and (Ta)_i = 0, so its extremes sit on the extreme
/// rays: intersections of n - 1 independent hyperplanes among those 2n.
inline Extremes l1_ratio_extremes(const Cols& cols) {
  const std::size_t n = cols.size();
  std::vector<Vec> planes;
  for (std::size_t j = 0; j < n; ++j) {
    Vec h(n);
    h[j] = 1;
    planes.push_back(h);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec h(n);
    for (std::size_t j = 0; j < n; ++j) h[j] = cols[j][i];
    planes.push_back(h);
  }
  Extremes e;
  bool first = true;
  auto consider = [&](const Vec& a) {
    Q r = norm1(combine(cols, a)) / norm1(a);
    if (first || r < e.min_ratio) e.min_ratio = r;
    if (first || r > e.max_ratio) e.max_ratio = r;
    first = false;
  };
  if (n == 1) {
    consider(Vec{1});
    return e;
  }
  std::vector<bool> pick(planes.size());
  std::fill(pick.end() - static_cast<long>(n - 1), pick.end(), true);
  do {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < planes.size(); ++k)
      if (pick[k]) rows.push_back(planes[k]);
    if (auto v = kernel_direction(rows, n)) consider(*v);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return e;
}

/// max over all 2n signed unit vectors z of ||M z||_1, M given by columns.
inline Q operator_norm_by_vertices(const Cols& m) {
  Q best = 0;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (int s : {1, -1}) {
      Vec z(m.size());
      z[j] = s;
      best = std::max(best, norm1(combine(m, z)));
    }
  return best;
}

/// Smallest C with ||sum e_j a_j x_j|| <= C ||sum a_j x_j|| for every sign
/// vector e and every a, over all 2^n sign vectors. For fixed e the ratio is
/// maximized where sum a_j x_j is a vertex of the l1 ball, i.e. at a = T^-1 z
/// for a signed unit vector z.
inline Q unconditional_by_definition(const Cols& cols) {
  const std::size_t n = cols.size();
  std::vector<Vec> preimages;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    preimages.push_back(*solve(cols, e));
  }
  Q best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    for (const auto& a : preimages) {
      Vec signed_a = a;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1) signed_a[j] = -signed_a[j];
      // ||sum a_j x_j||_1 = ||e_i||_1 = 1.
      best = std::max(best, norm1(combine(cols, signed_a)));
    }
  return best;
}

/// min over permutations s of max_i ||x_s(i) - e_i||_1.
inline Q bottleneck_by_permutations(const Cols& cols) {
  const std::size_t n = cols.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Q> best;
  do {
    Q worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Vec d = cols[perm[i]];
      d[i] -= 1;
      worst = std::max(worst, norm1(d));
    }
    if (!best || worst < *best) best = worst;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best.value_or(0);
}

}  // namespace oracle

#endif  // L1BASIS_TESTS_ORACLES_HPP
