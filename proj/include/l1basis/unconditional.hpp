#ifndef L1BASIS_UNCONDITIONAL_HPP
#define L1BASIS_UNCONDITIONAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "l1basis/basis.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/matrix.hpp"

namespace l1basis {

/// A choice of signs; +1 or -1 per basis index.
using SignVector = std::vector<int>;

struct UnconditionalConstant {
  Scalar value;
  SignVector witness_signs;
};

struct EnumerationOptions {
  std::size_t cap = 24;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

inline std::string enumeration_cost(std::size_t n) {
  const std::string classes = n == 0  ? "1"
                              : n <= 64 ? std::to_string(std::uint64_t{1} << (n - 1))
                                        : "2^" + std::to_string(n - 1);
  return classes + " sign classes, each a rank-one update of an " + std::to_string(n) + "x" +
         std::to_string(n) + " rational matrix";
}

/// T * diag(signs) * T^-1, computed directly.
inline Matrix sign_operator(const Basis& b, const SignVector& signs) {
  const std::size_t n = b.dimension();
  if (signs.size() != n) throw LengthMismatch(n, signs.size());
  std::vector<Scalar> d(signs.begin(), signs.end());
  return b.matrix() * Matrix::diagonal(d) * b.inverse();
}

namespace detail {

struct SignSearchBest {
  Scalar value = -1;
  std::uint64_t key = 0;  // lexicographic rank of the sign vector, +1 before -1
  bool found = false;

  void offer(const Scalar& v, std::uint64_t k) {
    if (!found || v > value || (v == value && k < key)) {
      value = v;
      key = k;
      found = true;
    }
  }
};

// Gray code g has bit b set when sign position b + 1 is -1 (position 0 is
// fixed at +1). The lexicographic key puts position 1 in the most
// significant bit.
inline std::uint64_t gray_to_key(std::uint64_t g, std::size_t free_bits) {
  std::uint64_t key = 0;
  for (std::size_t b = 0; b < free_bits; ++b)
    if (g >> b & 1) key |= std::uint64_t{1} << (free_bits - 1 - b);
  return key;
}

inline SignSearchBest search_gray_range(const Basis& b, const std::vector<Matrix>& flips, std::uint64_t begin,
                                        std::uint64_t end) {
  const std::size_t n = b.dimension();
  const std::size_t free_bits = n - 1;
  SignSearchBest best;
  if (begin >= end) return best;

  std::uint64_t g = begin ^ (begin >> 1);
  SignVector signs(n, 1);
  for (std::size_t bit = 0; bit < free_bits; ++bit)
    if (g >> bit & 1) signs[bit + 1] = -1;
  Matrix m = sign_operator(b, signs);
  best.offer(operator_norm_l1(m), gray_to_key(g, free_bits));

  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    const std::size_t pos = bit + 1;
    // Flipping sign p changes the operator by -2 * old_sign * t_p s_p^T.
    const Matrix& flip = flips[pos];
    if (signs[pos] > 0) {
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) -= flip(r, c);
    } else {
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) += flip(r, c);
    }
    signs[pos] = -signs[pos];
    g ^= std::uint64_t{1} << bit;
    best.offer(operator_norm_l1(m), gray_to_key(g, free_bits));
  }
  return best;
}

}  // namespace detail

/// Unconditional basis constant: the maximum over sign vectors of the l1
/// operator norm of T D_eps T^-1. Signs and their negatives give the same
/// operator, so only the 2^(n-1) classes with eps_1 = +1 are visited, in
/// Gray-code order. Ties go to the lexicographically smallest sign vector
/// (+1 ordered before -1).
inline UnconditionalConstant unconditional_constant(const Basis& b, EnumerationOptions options = {}) {
  const std::size_t n = b.dimension();
  if (n > options.cap) throw DimensionTooLarge(n, options.cap, enumeration_cost(n));
  if (n > 63) throw DimensionTooLarge(n, 63, enumeration_cost(n));
  if (n == 0) throw InvalidArgument("unconditional_constant of an empty basis");

  // flips[p] = 2 * t_p * s_p^T
  std::vector<Matrix> flips(n);
  for (std::size_t p = 1; p < n; ++p) {
    Matrix f(n);
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar s = 2 * b.inverse()(p, c);
      if (sgn(s) == 0) continue;
      for (std::size_t r = 0; r < n; ++r) f(r, c) = b.matrix()(r, p) * s;
    }
    flips[p] = std::move(f);
  }

  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  // Small searches are not worth the threads.
  if (total < 256) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<detail::SignSearchBest> partial(workers);
  if (workers == 1) {
    partial[0] = detail::search_gray_range(b, flips, 0, total);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] { partial[w] = detail::search_gray_range(b, flips, begin, end); });
    }
  }

  detail::SignSearchBest best;
  for (const auto& p : partial)
    if (p.found) best.offer(p.value, p.key);

  SignVector witness(n, 1);
  for (std::size_t pos = 1; pos < n; ++pos)
    if (best.key >> (n - 1 - pos) & 1) witness[pos] = -1;
  return {best.value, witness};
}

}  // namespace l1basis

#endif  // L1BASIS_UNCONDITIONAL_HPP
