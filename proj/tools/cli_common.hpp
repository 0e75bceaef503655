#ifndef L1BASIS_TOOLS_CLI_COMMON_HPP
#define L1BASIS_TOOLS_CLI_COMMON_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "l1basis/io/basis_file.hpp"
#include "l1basis/io/report.hpp"
#include "l1basis/l1basis.hpp"

namespace l1basis::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kSingularInput = 3,
  kResourceCap = 4,
};

inline constexpr const char* kVersion = "1.0.0";

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t cap = 24;
  bool force_cap = false;
  unsigned precision = io::kDefaultDecimalDigits;
  unsigned workers = 0;
};

/// Thrown for bad command-line parameters; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct NRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "3..20" or a single "7".
inline NRange parse_n_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t n = std::stoul(text);
      return {n, n};
    }
    NRange r{std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected a..b");
  }
}

inline std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      if (item.find("..") != std::string::npos) {
        auto r = parse_n_range(item);
        for (std::size_t n = r.lo; n <= r.hi; ++n) out.push_back(n);
      } else {
        out.push_back(std::stoul(item));
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad size list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty size list");
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

/// Per-trial seed derived from the run seed; splitmix64 finalizer.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t j = 1; j <= n; ++j) labels.push_back("x" + std::to_string(j));
  return labels;
}

inline std::vector<int> one_based(const std::vector<std::size_t>& v) {
  std::vector<int> out;
  for (auto x : v) out.push_back(static_cast<int>(x) + 1);
  return out;
}

/// Fixed-width text table.
class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t c = 0; c < rows_[i].size(); ++c) {
        out += rows_[i][c];
        if (c + 1 < rows_[i].size()) out += std::string(width[c] - rows_[i][c].size() + 2, ' ');
      }
      out += "\n";
      if (i == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        out += std::string(total > 2 ? total - 2 : total, '-') + "\n";
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

/// "1/5 (0.200000000000)"
inline std::string show(const Scalar& x, unsigned digits) { return to_string(x) + " (" + to_decimal(x, digits) + ")"; }

int cmd_analyze(const GlobalOptions& g, const std::string& input);

struct ConstructOptions {
  std::string kind;
  std::size_t n = 0;
  std::string sizes;
  std::string mode = "dense";
  std::string radius = "1/4";
  bool normalized = false;
  bool verify = false;
  std::string output;
  std::string format = "csv";
};
int cmd_construct(const GlobalOptions& g, const ConstructOptions& o);

struct VerifyOptions {
  std::string statement;
  std::string n_range;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::string input;
};
int cmd_verify(const GlobalOptions& g, const VerifyOptions& o);

struct SearchOptions {
  std::string n_range = "3..8";
  std::size_t trials = 200;
  std::string family = "dense";
};
int cmd_search_c(const GlobalOptions& g, const SearchOptions& o);

}  // namespace l1basis::cli

#endif  // L1BASIS_TOOLS_CLI_COMMON_HPP
