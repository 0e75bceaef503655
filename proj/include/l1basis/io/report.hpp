#ifndef L1BASIS_IO_REPORT_HPP
#define L1BASIS_IO_REPORT_HPP

#include <json.hpp>
#include <openssl/sha.h>

#include <cstdio>
#include <string>
#include <vector>

#include "l1basis/certified.hpp"
#include "l1basis/io/basis_file.hpp"
#include "l1basis/scalar.hpp"
#include "l1basis/unconditional.hpp"

namespace l1basis::io {

using Json = nlohmann::json;

inline constexpr unsigned kDefaultDecimalDigits = 12;

/// SHA-256 of the canonical value text, as lowercase hex.
inline std::string input_digest(const BasisFile& f) {
  const std::string text = canonical_text(f);
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md);
  std::string hex;
  char buf[3];
  for (unsigned char c : md) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    hex += buf;
  }
  return "sha256:" + hex;
}

/// {"exact": "1/5", "decimal": "0.200000000000"}
inline Json exact_value(const Scalar& x, unsigned digits = kDefaultDecimalDigits) {
  return Json{{"exact", to_string(x)}, {"decimal", to_decimal(x, digits)}};
}

inline Json interval_value(const Interval& iv, unsigned digits = kDefaultDecimalDigits) {
  return Json{{"lower", exact_value(iv.lo, digits)}, {"upper", exact_value(iv.hi, digits)}};
}

inline Json scalar_list(const std::vector<Scalar>& xs, unsigned digits = kDefaultDecimalDigits) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(exact_value(x, digits));
  return arr;
}

inline Json vector_strings(std::span<const Scalar> v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline Json signs_json(const SignVector& s) { return Json(s); }

/// Machine-readable report text: sorted keys, two-space indent, trailing
/// newline. Byte-identical for identical inputs.
inline std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace l1basis::io

#endif  // L1BASIS_IO_REPORT_HPP
