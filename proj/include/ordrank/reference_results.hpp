#pragma once

#include <optional>
#include <string>

namespace ordrank {

// Published results on the eight-dataset ordinal regression benchmark
// (five equal-interval categories, 20 random splits): rank and class
// networks plus the support-vector and two Gaussian-process ordinal
// regression baselines. Kept as reference constants for report output and
// band checks; the baselines themselves are out of scope.
struct ReferenceEntry {
  const char* dataset;
  // mean zero-one error (fractions) and mean absolute error (category steps)
  double rank_zero_one, class_zero_one, svm_zero_one, gp_map_zero_one, gp_ep_zero_one;
  double rank_mae, class_mae, svm_mae, gp_map_mae, gp_ep_mae;
};

inline const ReferenceEntry kReferenceResults[] = {
    // dataset        r01     c01     svm01   map01   ep01    rmae   cmae   svm    map    ep
    {"stocks",      0.1268, 0.1697, 0.1081, 0.1199, 0.1200, 0.127, 0.173, 0.108, 0.120, 0.120},
    {"pyrimidines", 0.3771, 0.4187, 0.4146, 0.3979, 0.3646, 0.450, 0.508, 0.450, 0.427, 0.392},
    {"autompg",     0.2713, 0.2882, 0.2573, 0.2378, 0.2375, 0.281, 0.307, 0.260, 0.241, 0.241},
    {"machine",     0.1703, 0.1780, 0.1737, 0.1653, 0.1678, 0.186, 0.192, 0.192, 0.185, 0.186},
    {"abalone",     0.2139, 0.2174, 0.2158, 0.2150, 0.2156, 0.226, 0.232, 0.229, 0.232, 0.234},
    {"triazines",   0.5255, 0.5284, 0.5419, 0.5291, 0.5262, 0.730, 0.790, 0.698, 0.687, 0.688},
    {"boston",      0.2638, 0.2662, 0.2556, 0.2488, 0.2449, 0.295, 0.297, 0.267, 0.260, 0.259},
    {"diabetes",    0.4490, 0.4384, 0.5731, 0.5423, 0.5423, 0.546, 0.592, 0.746, 0.662, 0.665},
};

inline const ReferenceEntry* find_reference(const std::string& dataset) {
  for (const auto& entry : kReferenceResults) {
    if (dataset == entry.dataset) return &entry;
  }
  return nullptr;
}

}  // namespace ordrank
