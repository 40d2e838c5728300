#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordrank/core.hpp"

namespace ordrank {

// Numeric table with a real-valued regression target per row. Discretization
// requires at least two distinct target values; see discretize_equal_interval.
struct RawDataset {
  std::size_t dim = 0;
  std::vector<std::vector<double>> features;
  std::vector<double> targets;

  std::size_t size() const { return targets.size(); }
};

// Rows carrying an ordinal label in 1..categories.
struct OrdinalDataset {
  std::size_t dim = 0;
  int categories = 0;
  std::vector<std::vector<double>> features;
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
};

namespace detail {

// Splits a line on commas and/or whitespace. Empty tokens from consecutive
// commas are dropped, which surfaces later as a ragged-row error.
inline std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cell.empty()) cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell.push_back(ch);
    }
  }
  if (!cell.empty()) cells.push_back(std::move(cell));
  return cells;
}

inline bool parse_double(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + token.size() && end != begin;
}

inline bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

}  // namespace detail

// Parses a delimited numeric table. Rows are lines; `#`-prefixed lines and
// blank lines are skipped; cells split on commas or whitespace. The column at
// target_column (0-based) becomes the target, the rest the features, row
// order preserved. Row/column numbers in errors are 1-based.
inline RawDataset parse_table(std::istream& in, std::size_t target_column,
                              const std::string& source_name) {
  RawDataset data;
  std::string line;
  std::size_t line_number = 0;
  std::size_t data_row = 0;
  std::size_t expected_cols = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::is_comment_or_blank(line)) continue;
    ++data_row;
    const auto cells = detail::split_cells(line);
    if (expected_cols == 0) {
      expected_cols = cells.size();
      if (expected_cols < 2) {
        throw DataError(source_name + ": row " + std::to_string(data_row) +
                        " (line " + std::to_string(line_number) +
                        ") has fewer than 2 columns");
      }
      if (target_column >= expected_cols) {
        throw DataError(source_name + ": target column " + std::to_string(target_column) +
                        " out of range; rows have " + std::to_string(expected_cols) +
                        " columns");
      }
      data.dim = expected_cols - 1;
    } else if (cells.size() != expected_cols) {
      throw DataError(source_name + ": ragged row " + std::to_string(data_row) +
                      " (line " + std::to_string(line_number) + "): expected " +
                      std::to_string(expected_cols) + " columns, found " +
                      std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(data.dim);
    double target = 0.0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double value = 0.0;
      if (!detail::parse_double(cells[c], value)) {
        throw DataError(source_name + ": non-numeric cell at row " +
                        std::to_string(data_row) + ", column " + std::to_string(c + 1) +
                        ": '" + cells[c] + "'");
      }
      if (!std::isfinite(value)) {
        throw DataError(source_name + ": non-finite cell at row " +
                        std::to_string(data_row) + ", column " + std::to_string(c + 1));
      }
      if (c == target_column) {
        target = value;
      } else {
        row.push_back(value);
      }
    }
    data.features.push_back(std::move(row));
    data.targets.push_back(target);
  }
  if (data.targets.empty()) throw DataError(source_name + ": no rows");
  return data;
}

inline RawDataset load_csv(const std::string& path, std::size_t target_column) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  return parse_table(in, target_column, path);
}

// Parses rows of features with no target column (for prediction inputs).
// Optionally drops one column, e.g. a target the file happens to carry.
inline std::vector<std::vector<double>> load_feature_rows(
    const std::string& path, std::optional<std::size_t> drop_column = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  std::size_t data_row = 0;
  std::size_t expected_cols = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::is_comment_or_blank(line)) continue;
    ++data_row;
    const auto cells = detail::split_cells(line);
    if (expected_cols == 0) {
      expected_cols = cells.size();
      if (drop_column && *drop_column >= expected_cols) {
        throw DataError(path + ": drop column " + std::to_string(*drop_column) +
                        " out of range; rows have " + std::to_string(expected_cols) + " columns");
      }
    } else if (cells.size() != expected_cols) {
      throw DataError(path + ": ragged row " + std::to_string(data_row) + " (line " +
                      std::to_string(line_number) + "): expected " +
                      std::to_string(expected_cols) + " columns, found " +
                      std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(expected_cols);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (drop_column && c == *drop_column) continue;
      double value = 0.0;
      if (!detail::parse_double(cells[c], value)) {
        throw DataError(path + ": non-numeric cell at row " + std::to_string(data_row) +
                        ", column " + std::to_string(c + 1) + ": '" + cells[c] + "'");
      }
      if (!std::isfinite(value)) {
        throw DataError(path + ": non-finite cell at row " + std::to_string(data_row) +
                        ", column " + std::to_string(c + 1));
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError(path + ": no rows");
  return rows;
}

// Bins real targets into `categories` equal-width intervals over
// [min, max]. Bins are half-open [low, high) except the last, which is
// closed, so the maximum target falls in the top category.
inline OrdinalDataset discretize_equal_interval(const RawDataset& raw, int categories) {
  if (categories < 2) throw DataError("discretize: need at least 2 categories");
  const auto [min_it, max_it] = std::minmax_element(raw.targets.begin(), raw.targets.end());
  const double lo = *min_it;
  const double hi = *max_it;
  if (!(hi > lo)) throw DataError("discretize: all targets equal; zero range");
  const double width = (hi - lo) / categories;
  OrdinalDataset out;
  out.dim = raw.dim;
  out.categories = categories;
  out.features = raw.features;
  out.labels.reserve(raw.size());
  for (double t : raw.targets) {
    int bin = static_cast<int>(std::floor((t - lo) / width)) + 1;
    bin = std::clamp(bin, 1, categories);
    out.labels.push_back(bin);
  }
  return out;
}

// Reinterprets targets that are already integer categories in 1..categories.
inline OrdinalDataset from_labeled(const RawDataset& raw, int categories) {
  if (categories < 2) throw DataError("labeled dataset: need at least 2 categories");
  OrdinalDataset out;
  out.dim = raw.dim;
  out.categories = categories;
  out.features = raw.features;
  out.labels.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double t = raw.targets[i];
    const double rounded = std::nearbyint(t);
    if (t != rounded || rounded < 1 || rounded > categories) {
      throw DataError("labeled dataset: row " + std::to_string(i + 1) + " target " +
                      std::to_string(t) + " is not an integer category in 1.." +
                      std::to_string(categories));
    }
    out.labels.push_back(static_cast<int>(rounded));
  }
  return out;
}

// Per-dataset description, stored as a plain-text key=value file.
// Keys: path (relative to the manifest file), target_column, k, train_count.
struct DatasetManifest {
  std::string name;
  std::string path;
  std::size_t target_column = 0;
  int categories = 5;
  std::size_t train_count = 0;
};

inline DatasetManifest parse_manifest(std::istream& in, const std::string& source_name) {
  DatasetManifest m;
  bool saw_path = false, saw_target = false, saw_k = false, saw_train = false;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (detail::is_comment_or_blank(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DataError(source_name + ": line " + std::to_string(line_number) +
                      " is not key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto parse_nonneg = [&](const std::string& v) {
      double d = 0.0;
      if (!detail::parse_double(v, d) || d < 0 || d != std::nearbyint(d)) {
        throw DataError(source_name + ": key '" + key + "' needs a non-negative integer, got '" + v + "'");
      }
      return static_cast<std::size_t>(d);
    };
    if (key == "path") {
      m.path = value;
      saw_path = true;
    } else if (key == "target_column") {
      m.target_column = parse_nonneg(value);
      saw_target = true;
    } else if (key == "k") {
      m.categories = static_cast<int>(parse_nonneg(value));
      saw_k = true;
    } else if (key == "train_count") {
      m.train_count = parse_nonneg(value);
      saw_train = true;
    } else {
      throw DataError(source_name + ": unknown manifest key '" + key + "'");
    }
  }
  if (!saw_path || !saw_target || !saw_k || !saw_train) {
    throw DataError(source_name + ": manifest needs path, target_column, k, train_count");
  }
  return m;
}

// Loads <path>; the manifest's data path is resolved relative to the
// manifest's directory, and its name is the manifest file stem.
inline DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open manifest");
  DatasetManifest m = parse_manifest(in, path);
  const std::filesystem::path p(path);
  m.name = p.stem().string();
  const std::filesystem::path data_path(m.path);
  if (data_path.is_relative()) m.path = (p.parent_path() / data_path).string();
  return m;
}

}  // namespace ordrank
