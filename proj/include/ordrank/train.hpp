#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ordrank/dataset.hpp"
#include "ordrank/network.hpp"
#include "ordrank/rng.hpp"

namespace ordrank {

// Architecture-side choices shared by every model trained in one experiment.
struct ModelSpec {
  Mode mode = Mode::Rank;
  Activation activation = Activation::Tanh;
  double threshold = 0.5;
};

struct TrainingConfig {
  int hidden_units = 5;
  int epochs = 200;
  double initial_lr = 0.1;
  int patience = 60;
  UpdateMode update = UpdateMode::Online;
  LossKind loss = LossKind::SquareError;
  std::uint64_t seed = 0;
  double init_scale = 1.0;
};

// Hard validation: values a training run cannot proceed with.
inline void validate_config(const TrainingConfig& cfg) {
  if (cfg.hidden_units < 1) throw DataError("config: hidden_units must be >= 1");
  if (cfg.epochs < 1) throw DataError("config: epochs must be >= 1");
  if (!(cfg.initial_lr > 0.0)) throw DataError("config: initial_lr must be > 0");
  if (cfg.patience < 1) throw DataError("config: patience must be >= 1");
  if (!(cfg.init_scale > 0.0)) throw DataError("config: init_scale must be > 0");
}

// Soft validation: values outside the benchmark search ranges train fine but
// are flagged so deliberate departures stay visible.
inline std::vector<std::string> config_warnings(const TrainingConfig& cfg) {
  std::vector<std::string> warnings;
  if (cfg.hidden_units > 15) warnings.push_back("hidden_units outside benchmark range [1,15]");
  if (cfg.epochs != 50 && cfg.epochs != 200 && cfg.epochs != 500 && cfg.epochs != 1000) {
    warnings.push_back("epochs outside benchmark set {50,200,500,1000}");
  }
  if (cfg.initial_lr < 0.01 || cfg.initial_lr > 0.5) {
    warnings.push_back("initial_lr outside benchmark range [0.01,0.5]");
  }
  if (cfg.patience != 40 && cfg.patience != 60 && cfg.patience != 80 && cfg.patience != 100) {
    warnings.push_back("patience outside benchmark set {40,60,80,100}");
  }
  return warnings;
}

struct TrainLogEntry {
  int epoch = 0;  // 1-based
  double mean_loss = 0.0;
  double lr = 0.0;  // rate in effect after this epoch's schedule step
  bool halved = false;
};

struct TrainLog {
  std::vector<TrainLogEntry> epochs;
  int halvings = 0;
};

// Learning-rate halving schedule: a counter tracks consecutive epochs whose
// mean training loss strictly rose; reaching `patience` halves the rate and
// resets the counter, and any non-increasing epoch also resets it.
struct LrSchedule {
  double lr = 0.0;
  int patience = 0;
  int rising_epochs = 0;
  int halvings = 0;
  bool has_previous = false;
  double previous_loss = 0.0;

  LrSchedule(double initial_lr, int patience_epochs)
      : lr(initial_lr), patience(patience_epochs) {}

  // Feed one completed epoch's mean loss; returns true if the rate halved.
  bool step(double mean_loss) {
    bool halved = false;
    if (has_previous && mean_loss > previous_loss) {
      if (++rising_epochs >= patience) {
        lr /= 2.0;
        ++halvings;
        rising_epochs = 0;
        halved = true;
      }
    } else {
      rising_epochs = 0;
    }
    previous_loss = mean_loss;
    has_previous = true;
    return halved;
  }
};

// Weights drawn uniformly from [-s, s] with s = init_scale / sqrt(fan_in)
// per layer; biases start at zero. Draw order is fixed (w1 row-major, then
// w2 row-major) so a seed pins the model exactly.
inline NetworkModel init_weights(std::size_t input_dim, std::size_t hidden_units,
                                 int categories, std::uint64_t seed,
                                 double init_scale = 1.0) {
  if (input_dim == 0 || hidden_units == 0 || categories < 2) {
    throw DataError("init_weights: need input_dim >= 1, hidden_units >= 1, categories >= 2");
  }
  NetworkModel model;
  model.input_dim = input_dim;
  model.hidden_units = hidden_units;
  model.categories = categories;
  model.weights = Weights::zeros(input_dim, hidden_units, static_cast<std::size_t>(categories));
  model.norm = NormStats::identity(input_dim);
  Rng rng(seed);
  const double s1 = init_scale / std::sqrt(static_cast<double>(input_dim));
  for (double& w : model.weights.w1.values) w = rng.uniform(-s1, s1);
  const double s2 = init_scale / std::sqrt(static_cast<double>(hidden_units));
  for (double& w : model.weights.w2.values) w = rng.uniform(-s2, s2);
  return model;
}

struct TrainResult {
  NetworkModel model;
  TrainLog log;
};

// Gradient-descent training for exactly cfg.epochs epochs; the final-epoch
// model is returned (epoch count is a tuned parameter, not a stopping rule).
//
// Online mode reshuffles the example order each epoch (substream `epoch+1`
// of cfg.seed) and updates weights after every example; the logged epoch
// loss is the mean of the per-example losses as they were visited. Batch
// mode sums the gradient over all examples in row order and applies one
// update of -lr * (sum / n) per epoch. Both modes then feed the epoch's
// mean loss to the halving schedule.
//
// Features are expected to be normalized already; the returned model carries
// identity normalization stats unless the caller stamps real ones.
inline TrainResult train(const OrdinalDataset& data, const ModelSpec& spec,
                         const TrainingConfig& cfg) {
  validate_config(cfg);
  if (data.size() == 0) throw DataError("train: empty dataset");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.labels[i] < 1 || data.labels[i] > data.categories) {
      throw DataError("train: row " + std::to_string(i + 1) + " label outside 1.." +
                      std::to_string(data.categories));
    }
  }

  TrainResult result;
  result.model = init_weights(data.dim, static_cast<std::size_t>(cfg.hidden_units),
                              data.categories, cfg.seed, cfg.init_scale);
  result.model.mode = spec.mode;
  result.model.hidden_activation = spec.activation;
  result.model.threshold = spec.threshold;
  NetworkModel& model = result.model;

  const std::size_t n = data.size();
  std::vector<std::vector<double>> targets;
  targets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    targets.push_back(encode_target(data.labels[i], data.categories, spec.mode));
  }

  LrSchedule schedule(cfg.initial_lr, cfg.patience);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    double loss_sum = 0.0;
    if (cfg.update == UpdateMode::Online) {
      Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(epoch));
      rng.shuffle(order);
      for (std::size_t i : order) {
        const ForwardResult fwd = forward(model, data.features[i]);
        loss_sum += loss(fwd.outputs, targets[i], cfg.loss, spec.mode);
        const Weights grad = backward(model, data.features[i], fwd, targets[i], cfg.loss);
        model.weights.add_scaled(grad, -schedule.lr);
      }
    } else {
      Weights grad_sum = Weights::zeros(data.dim, model.hidden_units,
                                        static_cast<std::size_t>(data.categories));
      for (std::size_t i = 0; i < n; ++i) {
        const ForwardResult fwd = forward(model, data.features[i]);
        loss_sum += loss(fwd.outputs, targets[i], cfg.loss, spec.mode);
        const Weights grad = backward(model, data.features[i], fwd, targets[i], cfg.loss);
        grad_sum.add_scaled(grad, 1.0);
      }
      grad_sum.scale(1.0 / static_cast<double>(n));
      model.weights.add_scaled(grad_sum, -schedule.lr);
    }
    const double mean_loss = loss_sum / static_cast<double>(n);
    if (!std::isfinite(mean_loss)) {
      throw NumericError("train: non-finite mean loss at epoch " + std::to_string(epoch) +
                         " (lr " + std::to_string(schedule.lr) + "); try a smaller learning rate");
    }
    const bool halved = schedule.step(mean_loss);
    result.log.epochs.push_back({epoch, mean_loss, schedule.lr, halved});
  }
  result.log.halvings = schedule.halvings;
  return result;
}

}  // namespace ordrank
