#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <tuple>
#include <vector>

#include "ordrank/ensemble.hpp"
#include "ordrank/metrics.hpp"
#include "ordrank/parallel.hpp"
#include "ordrank/rng.hpp"
#include "ordrank/split.hpp"
#include "ordrank/train.hpp"

namespace ordrank {

// Hyperparameter search space: the grid is the cartesian product of the four
// choice lists, scored by k-fold cross-validation within the training data.
struct GridSpec {
  std::vector<int> hidden;
  std::vector<int> epochs;
  std::vector<double> lr;
  std::vector<int> patience;
  int folds = 5;

  std::size_t size() const {
    return hidden.size() * epochs.size() * lr.size() * patience.size();
  }

  // Default benchmark grid: a documented subset of the full search space
  // sized so a complete eight-dataset benchmark stays within a desktop
  // compute budget. Override any axis from the CLI for a finer search.
  static GridSpec benchmark_default() {
    return {{3, 8, 15}, {50, 200, 500}, {0.05, 0.1, 0.25}, {60, 100}, 5};
  }

  // The full published search space.
  static GridSpec full() {
    std::vector<int> hidden(15);
    std::iota(hidden.begin(), hidden.end(), 1);
    return {hidden, {50, 200, 500, 1000}, {0.01, 0.05, 0.1, 0.25, 0.5}, {40, 60, 80, 100}, 5};
  }
};

struct GridEntry {
  TrainingConfig config;
  double cv_mae = 0.0;
};

struct GridResult {
  TrainingConfig best;
  std::vector<GridEntry> ranked;  // best first
};

namespace detail {

// Tie order: lower score, then fewer hidden units, fewer epochs, larger
// learning rate, smaller patience.
inline bool grid_better(const GridEntry& a, const GridEntry& b) {
  return std::make_tuple(a.cv_mae, a.config.hidden_units, a.config.epochs, -a.config.initial_lr,
                         a.config.patience) <
         std::make_tuple(b.cv_mae, b.config.hidden_units, b.config.epochs, -b.config.initial_lr,
                         b.config.patience);
}

}  // namespace detail

// Picks the grid point with the lowest mean cross-validated MAE of decoded
// predictions. Fold membership comes from one seeded shuffle (substream 0 of
// `seed`); the training run for grid point g, fold f is seeded with
// mix_seed(seed, 1 + g*folds + f), so results do not depend on `jobs`.
// A single-point grid is returned as-is without running CV.
inline GridResult grid_search(const OrdinalDataset& train_data, const ModelSpec& spec,
                              const GridSpec& grid, const TrainingConfig& base,
                              std::uint64_t seed, int jobs = 1) {
  if (grid.hidden.empty() || grid.epochs.empty() || grid.lr.empty() || grid.patience.empty()) {
    throw DataError("grid_search: empty grid axis");
  }
  std::vector<TrainingConfig> points;
  points.reserve(grid.size());
  for (int h : grid.hidden) {
    for (int e : grid.epochs) {
      for (double r : grid.lr) {
        for (int p : grid.patience) {
          TrainingConfig cfg = base;
          cfg.hidden_units = h;
          cfg.epochs = e;
          cfg.initial_lr = r;
          cfg.patience = p;
          cfg.seed = seed;
          points.push_back(cfg);
        }
      }
    }
  }

  GridResult result;
  if (points.size() == 1) {
    // Nothing to select between; no CV score exists.
    result.best = points.front();
    result.ranked.push_back({points.front(), std::numeric_limits<double>::quiet_NaN()});
    return result;
  }

  if (grid.folds < 2) throw DataError("grid_search: folds must be >= 2");
  const std::size_t n = train_data.size();
  if (n < static_cast<std::size_t>(grid.folds)) {
    throw DataError("grid_search: need at least as many rows as folds");
  }

  // One fold assignment shared by every grid point.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = Rng::substream(seed, 0);
  rng.shuffle(order);
  const std::size_t folds = static_cast<std::size_t>(grid.folds);
  std::vector<OrdinalDataset> fold_train(folds), fold_val(folds);
  for (std::size_t f = 0; f < folds; ++f) {
    const std::size_t begin = f * n / folds;
    const std::size_t end = (f + 1) * n / folds;
    std::vector<std::size_t> val_idx(order.begin() + begin, order.begin() + end);
    std::vector<std::size_t> train_idx;
    train_idx.reserve(n - val_idx.size());
    train_idx.insert(train_idx.end(), order.begin(), order.begin() + begin);
    train_idx.insert(train_idx.end(), order.begin() + end, order.end());
    std::sort(val_idx.begin(), val_idx.end());
    std::sort(train_idx.begin(), train_idx.end());
    fold_val[f] = take_rows(train_data, val_idx);
    fold_train[f] = take_rows(train_data, train_idx);
  }

  std::vector<double> scores(points.size() * folds, 0.0);
  parallel_for(points.size() * folds, jobs, [&](std::size_t job) {
    const std::size_t g = job / folds;
    const std::size_t f = job % folds;
    TrainingConfig cfg = points[g];
    cfg.seed = mix_seed(seed, 1 + g * folds + f);
    const TrainResult trained = train(fold_train[f], spec, cfg);
    const TrialMetrics m =
        evaluate_model(trained.model, fold_val[f].features, fold_val[f].labels);
    scores[job] = m.mean_abs;
  });

  result.ranked.reserve(points.size());
  for (std::size_t g = 0; g < points.size(); ++g) {
    double total = 0.0;
    for (std::size_t f = 0; f < folds; ++f) total += scores[g * folds + f];
    result.ranked.push_back({points[g], total / static_cast<double>(folds)});
  }
  std::stable_sort(result.ranked.begin(), result.ranked.end(), detail::grid_better);
  result.best = result.ranked.front().config;
  return result;
}

}  // namespace ordrank
