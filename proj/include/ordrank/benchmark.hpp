#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ordrank/dataset.hpp"
#include "ordrank/ensemble.hpp"
#include "ordrank/grid.hpp"
#include "ordrank/metrics.hpp"
#include "ordrank/model_io.hpp"
#include "ordrank/normalize.hpp"
#include "ordrank/parallel.hpp"
#include "ordrank/reference_results.hpp"
#include "ordrank/split.hpp"

namespace ordrank {

struct BenchmarkOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  GridSpec grid = GridSpec::benchmark_default();
  std::size_t ensemble_size = 5;
  double threshold = 0.5;
  Activation activation = Activation::Tanh;
  UpdateMode update = UpdateMode::Online;
  LossKind loss = LossKind::SquareError;
  double init_scale = 1.0;
  int jobs = 1;
};

// Per-trial and aggregated metrics for one dataset under one mode.
struct EvalReport {
  std::string dataset;
  Mode mode = Mode::Rank;
  std::vector<TrialMetrics> per_trial;
  Aggregate zero_one;
  Aggregate mean_abs;
  Aggregate rms;
  TrainingConfig last_best;  // grid winner of the final trial, for the record

  void aggregate_trials() {
    std::vector<double> z, m, r;
    for (const auto& t : per_trial) {
      z.push_back(t.zero_one);
      m.push_back(t.mean_abs);
      r.push_back(t.rms);
    }
    zero_one = aggregate(z);
    mean_abs = aggregate(m);
    rms = aggregate(r);
  }
};

// Full protocol for one dataset and one output mode: for each of
// opts.trials seeded splits, select hyperparameters by cross-validated grid
// search on the training partition only, train the ensemble with the
// winning configuration, and evaluate on the held-out test partition.
//
// Trials are independent jobs parallelized over opts.jobs; every random
// draw is derived from opts.seed and the trial index, so reports are
// identical for any jobs value.
inline EvalReport benchmark_dataset(const std::string& name, const OrdinalDataset& data,
                                    std::size_t train_count, Mode mode,
                                    const BenchmarkOptions& opts) {
  if (opts.trials == 0) throw DataError("benchmark: trials must be >= 1");
  if (opts.ensemble_size == 0) throw DataError("benchmark: ensemble size must be >= 1");

  SplitPlan plan;
  plan.seed = opts.seed;
  plan.trials = opts.trials;
  plan.train_count = train_count;
  const std::vector<IndexSplit> splits = make_splits(data.size(), plan);

  const ModelSpec spec{mode, opts.activation, opts.threshold};
  TrainingConfig base;
  base.update = opts.update;
  base.loss = opts.loss;
  base.init_scale = opts.init_scale;

  EvalReport report;
  report.dataset = name;
  report.mode = mode;
  report.per_trial.resize(opts.trials);
  std::vector<TrainingConfig> best_configs(opts.trials);

  parallel_for(opts.trials, opts.jobs, [&](std::size_t t) {
    OrdinalDataset train_part = take_rows(data, splits[t].train);
    OrdinalDataset test_part = take_rows(data, splits[t].test);
    const NormalizeResult norm = normalize(train_part.features, test_part.features);
    train_part.features = norm.train;
    test_part.features = norm.test;

    const std::uint64_t grid_seed = mix_seed(mix_seed(opts.seed, 1), t);
    const GridResult grid =
        grid_search(train_part, spec, opts.grid, base, grid_seed, /*jobs=*/1);

    const std::uint64_t ensemble_seed = mix_seed(mix_seed(opts.seed, 2), t);
    const Ensemble ensemble = train_ensemble(train_part, spec, grid.best, opts.ensemble_size,
                                             ensemble_seed, /*jobs=*/1);
    report.per_trial[t] = evaluate_model(ensemble, test_part.features, test_part.labels);
    best_configs[t] = grid.best;
  });

  report.last_best = best_configs.back();
  report.aggregate_trials();
  return report;
}

inline EvalReport benchmark_manifest(const DatasetManifest& manifest, Mode mode,
                                     const BenchmarkOptions& opts) {
  const RawDataset raw = load_csv(manifest.path, manifest.target_column);
  const OrdinalDataset data = discretize_equal_interval(raw, manifest.categories);
  return benchmark_dataset(manifest.name, data, manifest.train_count, mode, opts);
}

struct BenchmarkRun {
  std::vector<EvalReport> reports;
  std::vector<std::string> failures;  // "<dataset>: <reason>"
};

// Runs every (dataset, mode) pair; a dataset that fails is reported and
// skipped so the remaining datasets still complete.
inline BenchmarkRun run_benchmark(const std::vector<DatasetManifest>& manifests,
                                  const std::vector<Mode>& modes, const BenchmarkOptions& opts,
                                  std::ostream* progress = nullptr) {
  BenchmarkRun run;
  for (const auto& manifest : manifests) {
    try {
      for (Mode mode : modes) {
        if (progress) {
          *progress << "benchmark: " << manifest.name << " (" << to_string(mode) << ", "
                    << opts.trials << " trials)...\n";
        }
        run.reports.push_back(benchmark_manifest(manifest, mode, opts));
      }
    } catch (const std::exception& e) {
      run.failures.push_back(manifest.name + ": " + e.what());
      if (progress) *progress << "error: dataset " << manifest.name << " failed: " << e.what() << '\n';
    }
  }
  return run;
}

// ---- report emission ----------------------------------------------------

namespace detail {
inline std::string fixed(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}
}  // namespace detail

// Flat tab-separated results: one row per (dataset, mode).
inline void write_results_tsv(const std::vector<EvalReport>& reports, std::ostream& out) {
  out << "dataset\tmode\tzero_one_mean\tzero_one_std\tmae_mean\tmae_std\n";
  for (const auto& r : reports) {
    out << r.dataset << '\t' << to_string(r.mode) << '\t'
        << detail::format_double(r.zero_one.mean) << '\t'
        << detail::format_double(r.zero_one.stddev) << '\t'
        << detail::format_double(r.mean_abs.mean) << '\t'
        << detail::format_double(r.mean_abs.stddev) << '\n';
  }
}

// Side-by-side comparison table, one block per metric, modes as columns.
inline void write_comparison(const std::vector<EvalReport>& reports, std::ostream& out) {
  auto find = [&](const std::string& dataset, Mode mode) -> const EvalReport* {
    for (const auto& r : reports) {
      if (r.dataset == dataset && r.mode == mode) return &r;
    }
    return nullptr;
  };
  std::vector<std::string> datasets;
  for (const auto& r : reports) {
    bool seen = false;
    for (const auto& d : datasets) seen = seen || d == r.dataset;
    if (!seen) datasets.push_back(r.dataset);
  }
  out << "dataset\tmetric\trank\tclass\tpublished_rank\tpublished_class\n";
  for (const auto& d : datasets) {
    const EvalReport* rank = find(d, Mode::Rank);
    const EvalReport* cls = find(d, Mode::Class);
    const ReferenceEntry* ref = find_reference(d);
    auto cell_pct = [](const EvalReport* r) {
      return r ? detail::fixed(100.0 * r->zero_one.mean, 2) + "+-" +
                     detail::fixed(100.0 * r->zero_one.stddev, 2) + "%"
               : std::string("-");
    };
    auto cell_mae = [](const EvalReport* r) {
      return r ? detail::fixed(r->mean_abs.mean, 3) + "+-" + detail::fixed(r->mean_abs.stddev, 3)
               : std::string("-");
    };
    auto ref_pct = [&](double v) { return ref ? detail::fixed(100.0 * v, 2) + "%" : std::string("-"); };
    auto ref_mae = [&](double v) { return ref ? detail::fixed(v, 3) : std::string("-"); };
    out << d << "\tzero_one\t" << cell_pct(rank) << '\t' << cell_pct(cls) << '\t'
        << ref_pct(ref ? ref->rank_zero_one : 0) << '\t' << ref_pct(ref ? ref->class_zero_one : 0)
        << '\n';
    out << d << "\tmae\t" << cell_mae(rank) << '\t' << cell_mae(cls) << '\t'
        << ref_mae(ref ? ref->rank_mae : 0) << '\t' << ref_mae(ref ? ref->class_mae : 0) << '\n';
  }
}

// Machine-readable key=value summary. Contains no run environment details
// (jobs, paths, timestamps), so identical seeds and flags reproduce the file
// byte for byte.
inline void write_summary(const std::vector<EvalReport>& reports, const BenchmarkOptions& opts,
                          std::ostream& out) {
  auto list_int = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  auto list_double = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + detail::format_double(v[i]);
    return s;
  };
  out << "format=ordrank-summary v1\n";
  out << "trials=" << opts.trials << '\n';
  out << "seed=" << opts.seed << '\n';
  out << "folds=" << opts.grid.folds << '\n';
  out << "ensemble=" << opts.ensemble_size << '\n';
  out << "threshold=" << detail::format_double(opts.threshold) << '\n';
  out << "activation=" << to_string(opts.activation) << '\n';
  out << "update=" << to_string(opts.update) << '\n';
  out << "loss=" << to_string(opts.loss) << '\n';
  out << "grid.hidden=" << list_int(opts.grid.hidden) << '\n';
  out << "grid.epochs=" << list_int(opts.grid.epochs) << '\n';
  out << "grid.lr=" << list_double(opts.grid.lr) << '\n';
  out << "grid.patience=" << list_int(opts.grid.patience) << '\n';
  for (const auto& r : reports) {
    const std::string prefix = r.dataset + "." + to_string(r.mode);
    out << prefix << ".zero_one.mean=" << detail::format_double(r.zero_one.mean) << '\n';
    out << prefix << ".zero_one.std=" << detail::format_double(r.zero_one.stddev) << '\n';
    out << prefix << ".mae.mean=" << detail::format_double(r.mean_abs.mean) << '\n';
    out << prefix << ".mae.std=" << detail::format_double(r.mean_abs.stddev) << '\n';
    out << prefix << ".rms.mean=" << detail::format_double(r.rms.mean) << '\n';
    out << prefix << ".rms.std=" << detail::format_double(r.rms.stddev) << '\n';
    for (std::size_t t = 0; t < r.per_trial.size(); ++t) {
      out << prefix << ".trial." << t << ".zero_one="
          << detail::format_double(r.per_trial[t].zero_one) << '\n';
      out << prefix << ".trial." << t << ".mae="
          << detail::format_double(r.per_trial[t].mean_abs) << '\n';
    }
  }
}

}  // namespace ordrank
