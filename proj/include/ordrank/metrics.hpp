#pragma once

#include <cmath>
#include <vector>

#include "ordrank/core.hpp"

namespace ordrank {

namespace detail {
inline void check_pair(const std::vector<int>& pred, const std::vector<int>& truth,
                       const char* what) {
  if (pred.empty()) throw DataError(std::string(what) + ": empty prediction list");
  if (pred.size() != truth.size()) {
    throw DataError(std::string(what) + ": length mismatch (" + std::to_string(pred.size()) +
                    " vs " + std::to_string(truth.size()) + ")");
  }
}
}  // namespace detail

// Fraction of predictions that miss the true category.
inline double zero_one_error(const std::vector<int>& pred, const std::vector<int>& truth) {
  detail::check_pair(pred, truth, "zero_one_error");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] != truth[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(pred.size());
}

// Mean of |predicted - true| in category steps.
inline double mean_abs_error(const std::vector<int>& pred, const std::vector<int>& truth) {
  detail::check_pair(pred, truth, "mean_abs_error");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    sum += std::abs(pred[i] - truth[i]);
  }
  return sum / static_cast<double>(pred.size());
}

// Root mean square category difference, kept alongside the mean absolute
// error for side-by-side comparison. Not a selection or acceptance metric.
inline double rms_error(const std::vector<int>& pred, const std::vector<int>& truth) {
  detail::check_pair(pred, truth, "rms_error");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double diff = pred[i] - truth[i];
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(pred.size()));
}

struct TrialMetrics {
  double zero_one = 0.0;
  double mean_abs = 0.0;
  double rms = 0.0;
};

inline TrialMetrics compute_metrics(const std::vector<int>& pred, const std::vector<int>& truth) {
  return {zero_one_error(pred, truth), mean_abs_error(pred, truth), rms_error(pred, truth)};
}

// Mean and sample (n-1) standard deviation across trials; a single trial
// reports zero deviation.
struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;
};

inline Aggregate aggregate(const std::vector<double>& values) {
  if (values.empty()) throw DataError("aggregate: no values");
  Aggregate a;
  for (double v : values) a.mean += v;
  a.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - a.mean;
      ss += d * d;
    }
    a.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return a;
}

}  // namespace ordrank
