#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ordrank/core.hpp"
#include "ordrank/dataset.hpp"
#include "ordrank/rng.hpp"

namespace ordrank {

struct SplitPlan {
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  std::size_t train_count = 0;
};

struct IndexSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Seeded random train/test partitions. Trial t draws from Rng substream t of
// plan.seed, so a plan regenerates identical index sets on every run and any
// subset of trials can be reproduced independently. Indices come back sorted.
inline std::vector<IndexSplit> make_splits(std::size_t n, const SplitPlan& plan) {
  if (plan.train_count == 0 || plan.train_count >= n) {
    throw DataError("make_splits: train_count must be in (0, dataset size); got " +
                    std::to_string(plan.train_count) + " of " + std::to_string(n));
  }
  if (plan.trials == 0) throw DataError("make_splits: trials must be positive");
  std::vector<IndexSplit> splits;
  splits.reserve(plan.trials);
  for (std::size_t t = 0; t < plan.trials; ++t) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng = Rng::substream(plan.seed, t);
    rng.shuffle(order);
    IndexSplit split;
    split.train.assign(order.begin(), order.begin() + plan.train_count);
    split.test.assign(order.begin() + plan.train_count, order.end());
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    splits.push_back(std::move(split));
  }
  return splits;
}

// Row subset of an ordinal dataset.
inline OrdinalDataset take_rows(const OrdinalDataset& data, const std::vector<std::size_t>& idx) {
  OrdinalDataset out;
  out.dim = data.dim;
  out.categories = data.categories;
  out.features.reserve(idx.size());
  out.labels.reserve(idx.size());
  for (std::size_t i : idx) {
    out.features.push_back(data.features[i]);
    out.labels.push_back(data.labels[i]);
  }
  return out;
}

}  // namespace ordrank
