#pragma once

#include <cstdint>
#include <vector>

#include "ordrank/metrics.hpp"
#include "ordrank/network.hpp"
#include "ordrank/parallel.hpp"
#include "ordrank/train.hpp"

namespace ordrank {

// A committee of identically configured networks differing only in their
// initial weights. Predictions average the member output vectors first and
// decode the averaged vector.
struct Ensemble {
  std::vector<NetworkModel> members;

  std::size_t size() const { return members.size(); }
  const NetworkModel& front() const { return members.front(); }
};

inline Ensemble make_ensemble(std::vector<NetworkModel> members) {
  if (members.empty()) throw DataError("ensemble: needs at least one member");
  for (const auto& m : members) {
    if (!m.same_architecture(members.front())) {
      throw DataError("ensemble: members must share architecture, mode and threshold");
    }
    if (m.norm.mean != members.front().norm.mean ||
        m.norm.stddev != members.front().norm.stddev) {
      throw DataError("ensemble: members must share normalization statistics");
    }
  }
  Ensemble e;
  e.members = std::move(members);
  return e;
}

// Trains member i with seed base_seed + i. Members are independent jobs; the
// result is identical for any `jobs` value.
inline Ensemble train_ensemble(const OrdinalDataset& data, const ModelSpec& spec,
                               const TrainingConfig& cfg, std::size_t members,
                               std::uint64_t base_seed, int jobs = 1) {
  if (members == 0) throw DataError("train_ensemble: members must be >= 1");
  std::vector<NetworkModel> trained(members);
  parallel_for(members, jobs, [&](std::size_t i) {
    TrainingConfig member_cfg = cfg;
    member_cfg.seed = base_seed + i;
    trained[i] = train(data, spec, member_cfg).model;
  });
  return make_ensemble(std::move(trained));
}

// Arithmetic mean of the member output vectors on one (normalized) input.
inline std::vector<double> ensemble_outputs(const Ensemble& ensemble,
                                            const std::vector<double>& x) {
  std::vector<double> mean(static_cast<std::size_t>(ensemble.front().categories), 0.0);
  for (const auto& member : ensemble.members) {
    const ForwardResult fwd = forward(member, x);
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += fwd.outputs[i];
  }
  const double inv = 1.0 / static_cast<double>(ensemble.size());
  for (double& v : mean) v *= inv;
  return mean;
}

inline int ensemble_predict(const Ensemble& ensemble, const std::vector<double>& x) {
  return decode(ensemble.front(), ensemble_outputs(ensemble, x));
}

// Decodes every row of an already-normalized test set and reports both
// benchmark metrics (plus RMS). Pure in all arguments.
inline TrialMetrics evaluate_model(const Ensemble& ensemble,
                                   const std::vector<std::vector<double>>& features,
                                   const std::vector<int>& labels) {
  if (features.empty()) throw DataError("evaluate_model: empty test set");
  std::vector<int> pred;
  pred.reserve(features.size());
  for (const auto& row : features) pred.push_back(ensemble_predict(ensemble, row));
  return compute_metrics(pred, labels);
}

inline TrialMetrics evaluate_model(const NetworkModel& model,
                                   const std::vector<std::vector<double>>& features,
                                   const std::vector<int>& labels) {
  return evaluate_model(make_ensemble({model}), features, labels);
}

}  // namespace ordrank
