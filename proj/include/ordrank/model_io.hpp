#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ordrank/dataset.hpp"
#include "ordrank/network.hpp"

namespace ordrank {

// Line-oriented text model format, version 1:
//
//   ordrank-model v1
//   mode rank|class
//   d <input dim>
//   H <hidden units>
//   K <categories>
//   activation tanh|sigmoid|linear
//   threshold <value>
//   mean <d values>
//   stddev <d values>
//   <H rows of w1, d values each>
//   <1 row of b1, H values>
//   <K rows of w2, H values each>
//   <1 row of b2, K values>
//
// Every float is written with 17 significant digits, which round-trips an
// IEEE double exactly: a saved model reloads to bit-identical predictions.

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_row(std::ostream& out, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ' ';
    out << format_double(row[i]);
  }
  out << '\n';
}

inline std::vector<double> read_row(std::istream& in, std::size_t expected,
                                    const std::string& what) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("model file truncated while reading " + what);
  const auto cells = split_cells(line);
  if (cells.size() != expected) {
    throw DataError("model file: " + what + " expected " + std::to_string(expected) +
                    " values, found " + std::to_string(cells.size()));
  }
  std::vector<double> row(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (!parse_double(cells[i], row[i]) || !std::isfinite(row[i])) {
      throw DataError("model file: bad value in " + what + ": '" + cells[i] + "'");
    }
  }
  return row;
}

inline std::string read_field(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("model file truncated before field '" + key + "'");
  const auto cells = split_cells(line);
  if (cells.size() != 2 || cells[0] != key) {
    throw DataError("model file: expected '" + key + " <value>', got '" + line + "'");
  }
  return cells[1];
}

}  // namespace detail

inline void save_model(const NetworkModel& model, std::ostream& out) {
  out << "ordrank-model v1\n";
  out << "mode " << to_string(model.mode) << '\n';
  out << "d " << model.input_dim << '\n';
  out << "H " << model.hidden_units << '\n';
  out << "K " << model.categories << '\n';
  out << "activation " << to_string(model.hidden_activation) << '\n';
  out << "threshold " << detail::format_double(model.threshold) << '\n';
  out << "mean ";
  detail::write_row(out, model.norm.mean);
  out << "stddev ";
  detail::write_row(out, model.norm.stddev);
  for (std::size_t h = 0; h < model.hidden_units; ++h) {
    std::vector<double> row(model.weights.w1.values.begin() + h * model.input_dim,
                            model.weights.w1.values.begin() + (h + 1) * model.input_dim);
    detail::write_row(out, row);
  }
  detail::write_row(out, model.weights.b1);
  const std::size_t k = static_cast<std::size_t>(model.categories);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> row(model.weights.w2.values.begin() + i * model.hidden_units,
                            model.weights.w2.values.begin() + (i + 1) * model.hidden_units);
    detail::write_row(out, row);
  }
  detail::write_row(out, model.weights.b2);
}

inline void save_model(const NetworkModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot open for writing");
  save_model(model, out);
  if (!out) throw DataError(path + ": write failed");
}

inline NetworkModel load_model(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || detail::split_cells(header) != std::vector<std::string>{"ordrank-model", "v1"}) {
    throw DataError("model file: bad header (expected 'ordrank-model v1')");
  }
  NetworkModel model;
  model.mode = parse_mode(detail::read_field(in, "mode"));
  auto read_size = [&](const std::string& key) {
    const std::string v = detail::read_field(in, key);
    double d = 0.0;
    if (!detail::parse_double(v, d) || d < 1 || d != std::nearbyint(d)) {
      throw DataError("model file: field '" + key + "' needs a positive integer, got '" + v + "'");
    }
    return static_cast<std::size_t>(d);
  };
  model.input_dim = read_size("d");
  model.hidden_units = read_size("H");
  model.categories = static_cast<int>(read_size("K"));
  model.hidden_activation = parse_activation(detail::read_field(in, "activation"));
  {
    const std::string v = detail::read_field(in, "threshold");
    if (!detail::parse_double(v, model.threshold) || !(model.threshold > 0.0) ||
        !(model.threshold < 1.0)) {
      throw DataError("model file: threshold must be in (0, 1), got '" + v + "'");
    }
  }
  {
    std::string line;
    if (!std::getline(in, line)) throw DataError("model file truncated before mean");
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag != "mean") throw DataError("model file: expected mean row");
    std::string rest;
    std::getline(row, rest);
    std::istringstream values(rest);
    model.norm.mean = detail::read_row(values, model.input_dim, "mean");
  }
  {
    std::string line;
    if (!std::getline(in, line)) throw DataError("model file truncated before stddev");
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag != "stddev") throw DataError("model file: expected stddev row");
    std::string rest;
    std::getline(row, rest);
    std::istringstream values(rest);
    model.norm.stddev = detail::read_row(values, model.input_dim, "stddev");
  }
  model.weights = Weights::zeros(model.input_dim, model.hidden_units,
                                 static_cast<std::size_t>(model.categories));
  for (std::size_t h = 0; h < model.hidden_units; ++h) {
    const auto row = detail::read_row(in, model.input_dim, "w1 row");
    std::copy(row.begin(), row.end(), model.weights.w1.values.begin() + h * model.input_dim);
  }
  model.weights.b1 = detail::read_row(in, model.hidden_units, "b1");
  const std::size_t k = static_cast<std::size_t>(model.categories);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = detail::read_row(in, model.hidden_units, "w2 row");
    std::copy(row.begin(), row.end(), model.weights.w2.values.begin() + i * model.hidden_units);
  }
  model.weights.b2 = detail::read_row(in, k, "b2");
  return model;
}

inline NetworkModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open model file");
  return load_model(in);
}

}  // namespace ordrank
