#pragma once

#include <cmath>
#include <vector>

#include "ordrank/core.hpp"

namespace ordrank {

// Per-feature standardization statistics, always computed from the training
// partition only. A zero-variance feature keeps stddev = 1 exactly, which
// leaves the (constant) column at zero after centering.
struct NormStats {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::size_t dim() const { return mean.size(); }

  static NormStats identity(std::size_t d) {
    NormStats s;
    s.mean.assign(d, 0.0);
    s.stddev.assign(d, 1.0);
    return s;
  }
};

inline NormStats compute_norm_stats(const std::vector<std::vector<double>>& train) {
  if (train.empty()) throw DataError("normalize: empty training set");
  const std::size_t d = train.front().size();
  NormStats stats;
  stats.mean.assign(d, 0.0);
  stats.stddev.assign(d, 0.0);
  for (const auto& row : train) {
    for (std::size_t j = 0; j < d; ++j) stats.mean[j] += row[j];
  }
  for (std::size_t j = 0; j < d; ++j) stats.mean[j] /= static_cast<double>(train.size());
  for (const auto& row : train) {
    for (std::size_t j = 0; j < d; ++j) {
      const double delta = row[j] - stats.mean[j];
      stats.stddev[j] += delta * delta;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double variance = stats.stddev[j] / static_cast<double>(train.size());
    stats.stddev[j] = variance == 0.0 ? 1.0 : std::sqrt(variance);
  }
  return stats;
}

inline std::vector<double> apply_norm(const NormStats& stats, const std::vector<double>& row) {
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = (row[j] - stats.mean[j]) / stats.stddev[j];
  }
  return out;
}

inline void normalize_in_place(const NormStats& stats, std::vector<std::vector<double>>& rows) {
  for (auto& row : rows) row = apply_norm(stats, row);
}

struct NormalizeResult {
  std::vector<std::vector<double>> train;
  std::vector<std::vector<double>> test;
  NormStats stats;
};

// Standardizes both sets with statistics taken from the training set.
inline NormalizeResult normalize(const std::vector<std::vector<double>>& train,
                                 const std::vector<std::vector<double>>& test) {
  NormalizeResult result;
  result.stats = compute_norm_stats(train);
  result.train = train;
  result.test = test;
  normalize_in_place(result.stats, result.train);
  normalize_in_place(result.stats, result.test);
  return result;
}

}  // namespace ordrank
