#ifndef L1BASIS_IO_BASIS_FILE_HPP
#define L1BASIS_IO_BASIS_FILE_HPP

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "l1basis/basis.hpp"
#include "l1basis/errors.hpp"
#include "l1basis/scalar.hpp"

namespace l1basis::io {

inline constexpr std::string_view kBasisFormatTag = "l1basis-basis";
inline constexpr int kBasisFormatVersion = 1;

/// A basis as written on disk. Entries keep their original spelling
/// ("1/3", "2", "0.25") so that serialize(parse(text)) reproduces the text.
/// Column j holds the coordinates of basis vector j.
struct BasisFile {
  int version = kBasisFormatVersion;
  std::size_t dimension = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> columns;

  std::vector<Vector> values() const {
    std::vector<Vector> out;
    out.reserve(columns.size());
    for (const auto& col : columns) {
      Vector v;
      v.reserve(col.size());
      for (const auto& cell : col) v.push_back(parse_scalar(cell));
      out.push_back(std::move(v));
    }
    return out;
  }

  Basis to_basis(InversionOptions options = {}) const {
    auto cols = values();
    return Basis::from_columns(cols, options);
  }

  static BasisFile from_vectors(std::span<const Vector> vectors, std::vector<std::string> labels = {}) {
    BasisFile f;
    f.dimension = vectors.size();
    f.labels = std::move(labels);
    for (const auto& v : vectors) {
      if (v.size() != f.dimension) throw LengthMismatch(f.dimension, v.size());
      std::vector<std::string> col;
      for (const auto& x : v) col.push_back(to_string(x));
      f.columns.push_back(std::move(col));
    }
    return f;
  }

  static BasisFile from_basis(const Basis& b, std::vector<std::string> labels = {}) {
    auto cols = b.vectors();
    return from_vectors(cols, std::move(labels));
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_cells(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

inline void validate(const BasisFile& f) {
  if (f.dimension == 0) throw ParseError("basis file: dimension must be at least 1");
  if (f.columns.size() != f.dimension)
    throw ParseError("basis file: expected " + std::to_string(f.dimension) + " columns, found " +
                     std::to_string(f.columns.size()));
  for (const auto& col : f.columns) {
    if (col.size() != f.dimension)
      throw ParseError("basis file: every column must have " + std::to_string(f.dimension) + " entries");
    for (const auto& cell : col) parse_scalar(cell);
  }
  if (!f.labels.empty() && f.labels.size() != f.dimension)
    throw ParseError("basis file: expected " + std::to_string(f.dimension) + " labels");
}

inline BasisFile parse_csv(std::string_view text) {
  BasisFile f;
  std::vector<std::vector<std::string>> rows;
  bool have_header = false, have_dimension = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cells = split_cells(line);
    if (!have_header) {
      if (cells.size() != 2 || cells[0] != kBasisFormatTag)
        throw ParseError("basis file: line " + std::to_string(line_no) + ": expected header '" +
                         std::string(kBasisFormatTag) + ",<version>'");
      try {
        f.version = std::stoi(cells[1]);
      } catch (const std::exception&) {
        throw ParseError("basis file: bad version '" + cells[1] + "'");
      }
      if (f.version != kBasisFormatVersion) throw ParseError("basis file: unsupported version " + cells[1]);
      have_header = true;
      continue;
    }
    if (!have_dimension) {
      if (cells.size() != 2 || cells[0] != "dimension")
        throw ParseError("basis file: line " + std::to_string(line_no) + ": expected 'dimension,<n>'");
      try {
        std::size_t used = 0;
        long n = std::stol(cells[1], &used);
        if (used != cells[1].size() || n < 1) throw std::invalid_argument("dimension");
        f.dimension = static_cast<std::size_t>(n);
      } catch (const std::exception&) {
        throw ParseError("basis file: bad dimension '" + cells[1] + "'");
      }
      have_dimension = true;
      continue;
    }
    if (cells.front() == "labels" && rows.empty() && f.labels.empty()) {
      f.labels.assign(cells.begin() + 1, cells.end());
      continue;
    }
    if (cells.size() != f.dimension)
      throw ParseError("basis file: line " + std::to_string(line_no) + ": expected " + std::to_string(f.dimension) +
                       " entries, found " + std::to_string(cells.size()));
    for (const auto& c : cells) parse_scalar(c);
    rows.push_back(std::move(cells));
  }
  if (!have_header || !have_dimension) throw ParseError("basis file: missing header");
  if (rows.size() != f.dimension)
    throw ParseError("basis file: expected " + std::to_string(f.dimension) + " coordinate rows, found " +
                     std::to_string(rows.size()));
  f.columns.assign(f.dimension, std::vector<std::string>(f.dimension));
  for (std::size_t i = 0; i < f.dimension; ++i)
    for (std::size_t j = 0; j < f.dimension; ++j) f.columns[j][i] = rows[i][j];
  validate(f);
  return f;
}

inline BasisFile parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("basis file: invalid JSON: ") + e.what());
  }
  BasisFile f;
  try {
    if (doc.at("format").get<std::string>() != kBasisFormatTag) throw ParseError("basis file: wrong format tag");
    f.version = doc.at("version").get<int>();
    if (f.version != kBasisFormatVersion) throw ParseError("basis file: unsupported version");
    f.dimension = doc.at("dimension").get<std::size_t>();
    if (doc.contains("labels")) f.labels = doc.at("labels").get<std::vector<std::string>>();
    for (const auto& col : doc.at("columns")) {
      std::vector<std::string> cells;
      for (const auto& cell : col) {
        if (cell.is_string()) {
          cells.push_back(cell.get<std::string>());
        } else if (cell.is_number_integer()) {
          cells.push_back(cell.dump());
        } else {
          throw ParseError("basis file: entries must be strings or integers");
        }
      }
      f.columns.push_back(std::move(cells));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("basis file: ") + e.what());
  }
  validate(f);
  return f;
}

}  // namespace detail

/// Accepts either the line-oriented form or the JSON document form.
inline BasisFile parse_basis_file(std::string_view text) {
  std::string_view t = detail::trim(text);
  if (!t.empty() && t.front() == '{') return detail::parse_json(t);
  return detail::parse_csv(text);
}

/// Line-oriented form: a header, the dimension, optional labels, then one
/// row per coordinate i holding x_1(i), ..., x_n(i).
inline std::string serialize_csv(const BasisFile& f) {
  std::string out = std::string(kBasisFormatTag) + "," + std::to_string(f.version) + "\n";
  out += "dimension," + std::to_string(f.dimension) + "\n";
  if (!f.labels.empty()) {
    out += "labels";
    for (const auto& l : f.labels) out += "," + l;
    out += "\n";
  }
  for (std::size_t i = 0; i < f.dimension; ++i) {
    for (std::size_t j = 0; j < f.dimension; ++j) {
      if (j) out += ",";
      out += f.columns[j][i];
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json to_json(const BasisFile& f) {
  nlohmann::json doc;
  doc["format"] = kBasisFormatTag;
  doc["version"] = f.version;
  doc["dimension"] = f.dimension;
  if (!f.labels.empty()) doc["labels"] = f.labels;
  doc["columns"] = f.columns;
  return doc;
}

inline std::string serialize_json(const BasisFile& f) { return to_json(f).dump(2) + "\n"; }

/// Canonical text of the values alone: equal for files that spell the same
/// numbers differently.
inline std::string canonical_text(const BasisFile& f) {
  auto cols = f.values();
  BasisFile c = BasisFile::from_vectors(cols);
  return serialize_csv(c);
}

}  // namespace l1basis::io

#endif  // L1BASIS_IO_BASIS_FILE_HPP
