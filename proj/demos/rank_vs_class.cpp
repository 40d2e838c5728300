// Minimal end-to-end use of the library: build a synthetic ordinal dataset,
// train a rank-mode network and a class-mode baseline on the same split, and
// print both error metrics.

#include <iostream>

#include "ordrank/ordrank.hpp"

using namespace ordrank;

int main() {
  // Synthetic regression data: y = x0 - x1 + tanh(x0 + x1) + noise.
  RawDataset raw;
  raw.dim = 2;
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const double x0 = rng.uniform(-2.0, 2.0);
    const double x1 = rng.uniform(-2.0, 2.0);
    raw.features.push_back({x0, x1});
    raw.targets.push_back(x0 - x1 + std::tanh(x0 + x1) + 0.1 * rng.uniform(-1.0, 1.0));
  }
  const OrdinalDataset data = discretize_equal_interval(raw, 5);

  SplitPlan plan{/*seed=*/11, /*trials=*/1, /*train_count=*/200};
  const IndexSplit split = make_splits(data.size(), plan).front();
  OrdinalDataset train_part = take_rows(data, split.train);
  OrdinalDataset test_part = take_rows(data, split.test);
  const NormalizeResult norm = normalize(train_part.features, test_part.features);
  train_part.features = norm.train;
  test_part.features = norm.test;

  TrainingConfig cfg;
  cfg.hidden_units = 8;
  cfg.epochs = 200;
  cfg.initial_lr = 0.1;
  cfg.seed = 3;

  for (Mode mode : {Mode::Rank, Mode::Class}) {
    const ModelSpec spec{mode, Activation::Tanh, 0.5};
    const Ensemble ensemble = train_ensemble(train_part, spec, cfg, 5, /*base_seed=*/100);
    const TrialMetrics m = evaluate_model(ensemble, test_part.features, test_part.labels);
    std::cout << to_string(mode) << ": zero_one=" << m.zero_one << " mae=" << m.mean_abs
              << '\n';
  }
  return 0;
}
