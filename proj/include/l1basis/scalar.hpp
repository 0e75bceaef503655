#ifndef L1BASIS_SCALAR_HPP
#define L1BASIS_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "l1basis/errors.hpp"

namespace l1basis {

// Exact rational. gmpxx keeps every value canonical (lowest terms, positive
// denominator) after each arithmetic operation.
using Scalar = mpq_class;

inline Scalar abs(const Scalar& x) {
  Scalar r = x;
  if (sgn(r) < 0) r = -r;
  return r;
}

inline Scalar pow_uint(const Scalar& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

/// num / den in lowest terms; GMP arithmetic requires canonical operands.
inline Scalar ratio(long num, long den) {
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// Canonical exact text: "a" for integers, "a/b" otherwise.
inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// Parses "p/q", an integer, or a decimal ("-0.125", "1.5e-3") into an exact
/// rational. Surrounding whitespace is ignored.
inline Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  auto fail = [&]() -> ParseError { return ParseError("not a rational number: '" + original + "'"); };
  if (text.empty()) throw fail();

  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto parse_int = [&](std::string_view s) -> mpz_class {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (!is_digits(s)) throw fail();
    mpz_class v(std::string(s), 10);
    return negative ? mpz_class(-v) : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_int(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw fail();
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + original + "'");
    Scalar r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    std::string_view exp_digits = exp_text;
    if (!exp_digits.empty() && (exp_digits.front() == '+' || exp_digits.front() == '-')) exp_digits.remove_prefix(1);
    if (!is_digits(exp_digits) || exp_digits.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_text));
    text = text.substr(0, e);
  }
  std::string_view int_part = text, frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (!int_part.empty() && !is_digits(int_part)) throw fail();
    if (!frac_part.empty() && !is_digits(frac_part)) throw fail();
  } else if (!is_digits(int_part)) {
    throw fail();
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Scalar r(mantissa);
  if (exponent >= 0) {
    r *= Scalar(pow10(static_cast<unsigned long>(exponent)));
  } else {
    r /= Scalar(pow10(static_cast<unsigned long>(-exponent)));
  }
  if (negative) r = -r;
  return r;
}

/// Decimal rendering with `digits` significant digits, rounding half to even.
/// Values with a decimal exponent outside [-6, 21) use scientific notation.
inline std::string to_decimal(const Scalar& x, unsigned digits = 12) {
  if (digits == 0) digits = 1;
  if (sgn(x) == 0) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(digits - 1, '0');
    return s;
  }
  Scalar a = abs(x);
  // Find e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto scaled_by = [](const Scalar& v, long shift) {
    return shift >= 0 ? Scalar(v * Scalar(pow10(static_cast<unsigned long>(shift))))
                      : Scalar(v / Scalar(pow10(static_cast<unsigned long>(-shift))));
  };
  while (scaled_by(a, -e) >= 10) ++e;
  while (scaled_by(a, -e) < 1) --e;

  // Integer with exactly `digits` digits, rounded half to even.
  const long shift = static_cast<long>(digits) - 1 - e;
  Scalar scaled = scaled_by(a, shift);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpz_class twice = 2 * r;
  int cmp_half = cmp(twice, scaled.get_den());
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  if (q == pow10(digits)) {
    q = pow10(digits - 1);
    ++e;
  }
  std::string body = q.get_str();

  std::string out = sgn(x) < 0 ? "-" : "";
  if (e < -6 || e >= 21) {
    out += body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  } else if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + body;
  } else if (static_cast<std::size_t>(e) + 1 >= body.size()) {
    out += body + std::string(static_cast<std::size_t>(e) + 1 - body.size(), '0');
  } else {
    out += body.substr(0, static_cast<std::size_t>(e) + 1) + "." + body.substr(static_cast<std::size_t>(e) + 1);
  }
  return out;
}

}  // namespace l1basis

#endif  // L1BASIS_SCALAR_HPP
