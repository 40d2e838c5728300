// ordrank command-line tool: dataset preparation, training, prediction,
// evaluation, grid search and full benchmark runs.
//
// Exit codes: 0 success, 2 usage error, 3 data/configuration error,
// 4 numerical failure during training, 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordrank/ordrank.hpp"

namespace fs = std::filesystem;
using namespace ordrank;

namespace {

std::string runs_root() {
  const char* env = std::getenv("ORDRANK_RUNS_DIR");
  return env && *env ? env : "runs";
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError(path.string() + ": cannot open for writing");
  return out;
}

// Every command records its resolved configuration next to its outputs.
void write_config(const fs::path& dir, const std::vector<std::pair<std::string, std::string>>& kv) {
  auto out = open_output(dir / "config.txt");
  for (const auto& [key, value] : kv) out << key << '=' << value << '\n';
}

fs::path prepare_out_dir(const std::string& out_dir) {
  fs::path dir(out_dir);
  fs::create_directories(dir);
  return dir;
}

std::string format_g(double v, int digits = 17) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> list_int(const std::vector<int>& v) {
  std::vector<std::string> out;
  for (int x : v) out.push_back(std::to_string(x));
  return out;
}

std::vector<std::string> list_double(const std::vector<double>& v) {
  std::vector<std::string> out;
  for (double x : v) out.push_back(format_g(x));
  return out;
}

// Flags shared by data-consuming commands.
struct DataArgs {
  std::string path;
  std::size_t target_column = 0;
  int categories = 5;
  bool ordinal = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--data", path, "input data file (comma or whitespace delimited)")
        ->required();
    cmd->add_option("--target-col", target_column, "0-based index of the target column")
        ->required();
    cmd->add_option("--k", categories, "number of ordinal categories")
        ->check(CLI::Range(2, 1000));
    cmd->add_flag("--ordinal", ordinal,
                  "targets are already integer categories in 1..k (skip binning)");
  }

  OrdinalDataset load() const {
    const RawDataset raw = load_csv(path, target_column);
    return ordinal ? from_labeled(raw, categories) : discretize_equal_interval(raw, categories);
  }
};

struct NetArgs {
  std::string mode = "rank";
  std::string activation = "tanh";
  double threshold = 0.5;

  void add_to(CLI::App* cmd, bool with_mode = true) {
    if (with_mode) {
      cmd->add_option("--mode", mode, "output layer: rank (ordinal) or class (softmax)")
          ->check(CLI::IsMember({"rank", "class"}));
    }
    cmd->add_option("--activation", activation, "hidden activation")
        ->check(CLI::IsMember({"tanh", "sigmoid", "linear"}));
    cmd->add_option("--threshold", threshold, "decoding threshold T for rank mode")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
  }

  ModelSpec spec() const { return {parse_mode(mode), parse_activation(activation), threshold}; }
};

// Optimizer-side flags shared by train, gridsearch and benchmark.
struct SgdArgs {
  std::string update = "online";
  std::string loss = "square";
  double init_scale = 1.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--update", update, "weight update mode")
        ->check(CLI::IsMember({"online", "batch"}));
    cmd->add_option("--loss", loss, "cost function")
        ->check(CLI::IsMember({"square", "entropy"}));
    cmd->add_option("--init-scale", init_scale, "weight init scale s/sqrt(fan_in)");
  }

  TrainingConfig base_config() const {
    TrainingConfig cfg;
    cfg.update = parse_update(update);
    cfg.loss = parse_loss(loss);
    cfg.init_scale = init_scale;
    return cfg;
  }
};

struct GridArgs {
  std::vector<int> hidden;
  std::vector<int> epochs;
  std::vector<double> lr;
  std::vector<int> patience;
  int folds = 5;
  bool full = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--grid-hidden", hidden, "hidden unit choices")->delimiter(',');
    cmd->add_option("--grid-epochs", epochs, "epoch choices")->delimiter(',');
    cmd->add_option("--grid-lr", lr, "learning rate choices")->delimiter(',');
    cmd->add_option("--grid-patience", patience, "patience choices")->delimiter(',');
    cmd->add_option("--folds", folds, "cross-validation folds")->check(CLI::Range(2, 100));
    cmd->add_flag("--full-grid", full, "search the full published grid (slow)");
  }

  GridSpec spec() const {
    GridSpec g = full ? GridSpec::full() : GridSpec::benchmark_default();
    if (!hidden.empty()) g.hidden = hidden;
    if (!epochs.empty()) g.epochs = epochs;
    if (!lr.empty()) g.lr = lr;
    if (!patience.empty()) g.patience = patience;
    g.folds = folds;
    return g;
  }
};

void print_warnings(const TrainingConfig& cfg) {
  for (const auto& w : config_warnings(cfg)) std::cerr << "warning: " << w << '\n';
}

void write_train_log(const TrainLog& log, const fs::path& path) {
  auto out = open_output(path);
  out << "epoch\tmean_loss\tlr\thalved\n";
  for (const auto& e : log.epochs) {
    out << e.epoch << '\t' << format_g(e.mean_loss) << '\t' << format_g(e.lr) << '\t'
        << (e.halved ? 1 : 0) << '\n';
  }
}

Ensemble load_ensemble(const std::vector<std::string>& model_paths,
                       const std::optional<double>& threshold_override) {
  std::vector<NetworkModel> members;
  for (const auto& p : model_paths) members.push_back(load_model(p));
  if (threshold_override) {
    for (auto& m : members) m.threshold = *threshold_override;
  }
  return make_ensemble(std::move(members));
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_discretize(const DataArgs& data, const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  const RawDataset raw = load_csv(data.path, data.target_column);
  const OrdinalDataset ord = discretize_equal_interval(raw, data.categories);
  auto out = open_output(dir / "discretized.csv");
  for (std::size_t i = 0; i < ord.size(); ++i) {
    for (double f : ord.features[i]) out << format_g(f) << ',';
    out << ord.labels[i] << '\n';
  }
  write_config(dir, {{"command", "discretize"},
                     {"data", data.path},
                     {"target_column", std::to_string(data.target_column)},
                     {"k", std::to_string(data.categories)},
                     {"out_dir", out_dir}});
  std::cout << "wrote " << (dir / "discretized.csv").string() << " (" << ord.size()
            << " rows, k=" << ord.categories << ")\n";
}

void cmd_split(const std::string& data_path, std::size_t target_column, std::size_t train_count,
               std::size_t trials, std::uint64_t seed, const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  const RawDataset raw = load_csv(data_path, target_column);
  SplitPlan plan{seed, trials, train_count};
  const auto splits = make_splits(raw.size(), plan);
  auto out = open_output(dir / "splits.tsv");
  for (std::size_t t = 0; t < splits.size(); ++t) {
    out << t << "\ttrain";
    for (std::size_t i : splits[t].train) out << '\t' << i;
    out << '\n' << t << "\ttest";
    for (std::size_t i : splits[t].test) out << '\t' << i;
    out << '\n';
  }
  write_config(dir, {{"command", "split"},
                     {"data", data_path},
                     {"train_count", std::to_string(train_count)},
                     {"trials", std::to_string(trials)},
                     {"seed", std::to_string(seed)},
                     {"out_dir", out_dir}});
  std::cout << "wrote " << (dir / "splits.tsv").string() << " (" << trials << " trials)\n";
}

void cmd_train(const DataArgs& data, const NetArgs& net, const SgdArgs& sgd, int hidden,
               int epochs, double lr, int patience, std::uint64_t seed,
               std::size_t ensemble_size, const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  OrdinalDataset dataset = data.load();
  const NormStats stats = compute_norm_stats(dataset.features);
  normalize_in_place(stats, dataset.features);
  TrainingConfig cfg = sgd.base_config();
  cfg.hidden_units = hidden;
  cfg.epochs = epochs;
  cfg.initial_lr = lr;
  cfg.patience = patience;
  cfg.seed = seed;
  print_warnings(cfg);
  const ModelSpec spec = net.spec();

  std::vector<std::string> model_files;
  if (ensemble_size <= 1) {
    TrainResult result = train(dataset, spec, cfg);
    result.model.norm = stats;
    save_model(result.model, (dir / "model.txt").string());
    write_train_log(result.log, dir / "train_log.txt");
    model_files.push_back("model.txt");
  } else {
    for (std::size_t i = 0; i < ensemble_size; ++i) {
      TrainingConfig member_cfg = cfg;
      member_cfg.seed = cfg.seed + i;
      TrainResult result = train(dataset, spec, member_cfg);
      result.model.norm = stats;
      const std::string name = "model_" + std::to_string(i + 1) + ".txt";
      save_model(result.model, (dir / name).string());
      write_train_log(result.log, dir / ("train_log_" + std::to_string(i + 1) + ".txt"));
      model_files.push_back(name);
    }
  }
  write_config(dir, {{"command", "train"},
                     {"data", data.path},
                     {"target_column", std::to_string(data.target_column)},
                     {"k", std::to_string(data.categories)},
                     {"ordinal", data.ordinal ? "1" : "0"},
                     {"mode", net.mode},
                     {"activation", net.activation},
                     {"threshold", format_g(net.threshold)},
                     {"hidden", std::to_string(hidden)},
                     {"epochs", std::to_string(epochs)},
                     {"lr", format_g(lr)},
                     {"patience", std::to_string(patience)},
                     {"update", sgd.update},
                     {"loss", sgd.loss},
                     {"seed", std::to_string(seed)},
                     {"init_scale", format_g(sgd.init_scale)},
                     {"ensemble", std::to_string(ensemble_size)},
                     {"out_dir", out_dir}});
  std::cout << "wrote " << join(model_files, ", ") << " in " << dir.string() << '\n';
}

void cmd_gridsearch(const DataArgs& data, const NetArgs& net, const SgdArgs& sgd,
                    const GridArgs& gargs, std::uint64_t seed, int jobs,
                    const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  OrdinalDataset dataset = data.load();
  const NormStats stats = compute_norm_stats(dataset.features);
  normalize_in_place(stats, dataset.features);
  const GridSpec grid = gargs.spec();
  const GridResult result = grid_search(dataset, net.spec(), grid, sgd.base_config(), seed, jobs);

  {
    auto out = open_output(dir / "grid_results.tsv");
    out << "rank\tcv_mae\thidden\tepochs\tlr\tpatience\n";
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
      const auto& e = result.ranked[i];
      out << (i + 1) << '\t' << format_g(e.cv_mae) << '\t' << e.config.hidden_units << '\t'
          << e.config.epochs << '\t' << format_g(e.config.initial_lr) << '\t'
          << e.config.patience << '\n';
    }
  }
  {
    auto best = open_output(dir / "best_config.txt");
    best << "hidden=" << result.best.hidden_units << '\n'
         << "epochs=" << result.best.epochs << '\n'
         << "lr=" << format_g(result.best.initial_lr) << '\n'
         << "patience=" << result.best.patience << '\n';
  }
  write_config(dir, {{"command", "gridsearch"},
                     {"data", data.path},
                     {"target_column", std::to_string(data.target_column)},
                     {"k", std::to_string(data.categories)},
                     {"ordinal", data.ordinal ? "1" : "0"},
                     {"mode", net.mode},
                     {"grid.hidden", join(list_int(grid.hidden), ",")},
                     {"grid.epochs", join(list_int(grid.epochs), ",")},
                     {"grid.lr", join(list_double(grid.lr), ",")},
                     {"grid.patience", join(list_int(grid.patience), ",")},
                     {"folds", std::to_string(grid.folds)},
                     {"update", sgd.update},
                     {"loss", sgd.loss},
                     {"seed", std::to_string(seed)},
                     {"jobs", std::to_string(jobs)},
                     {"out_dir", out_dir}});
  std::cout << "best: hidden=" << result.best.hidden_units << " epochs=" << result.best.epochs
            << " lr=" << format_g(result.best.initial_lr)
            << " patience=" << result.best.patience << '\n';
}

void cmd_predict(const std::vector<std::string>& model_paths, const std::string& data_path,
                 const std::optional<std::size_t>& drop_column, bool emit_probs,
                 const std::optional<double>& threshold_override, const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  const Ensemble ensemble = load_ensemble(model_paths, threshold_override);
  const NetworkModel& head = ensemble.front();
  const auto rows = load_feature_rows(data_path, drop_column);
  auto out = open_output(dir / "predictions.txt");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != head.input_dim) {
      throw DataError(data_path + ": row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows[r].size()) + " features, model expects d=" +
                      std::to_string(head.input_dim));
    }
    const std::vector<double> x = apply_norm(head.norm, rows[r]);
    const std::vector<double> outputs = ensemble_outputs(ensemble, x);
    std::string line = std::to_string(decode(head, outputs));
    if (emit_probs) {
      for (double o : outputs) line += " " + format_g(o, 10);
      line += " " + format_g(cumulative_output(outputs), 10);
    }
    out << line << '\n';
    std::cout << line << '\n';
  }
  write_config(dir, {{"command", "predict"},
                     {"data", data_path},
                     {"models", join(model_paths, ",")},
                     {"emit_probs", emit_probs ? "1" : "0"},
                     {"out_dir", out_dir}});
}

void cmd_evaluate(const std::vector<std::string>& model_paths, const DataArgs& data,
                  const std::optional<double>& threshold_override, const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  const Ensemble ensemble = load_ensemble(model_paths, threshold_override);
  const NetworkModel& head = ensemble.front();
  OrdinalDataset dataset = data.load();
  if (dataset.dim != head.input_dim) {
    throw DataError(data.path + ": feature dimension " + std::to_string(dataset.dim) +
                    ", model expects d=" + std::to_string(head.input_dim));
  }
  normalize_in_place(head.norm, dataset.features);
  const TrialMetrics m = evaluate_model(ensemble, dataset.features, dataset.labels);
  const std::string text = "zero_one=" + format_g(m.zero_one) + "\nmae=" + format_g(m.mean_abs) +
                           "\nrms=" + format_g(m.rms) + "\nn=" + std::to_string(dataset.size()) +
                           "\n";
  std::cout << text;
  auto out = open_output(dir / "metrics.txt");
  out << text;
  write_config(dir, {{"command", "evaluate"},
                     {"data", data.path},
                     {"models", join(model_paths, ",")},
                     {"out_dir", out_dir}});
}

void cmd_benchmark(const std::string& manifest_dir, std::vector<std::string> datasets,
                   const std::vector<std::string>& modes, const BenchmarkOptions& opts,
                   const std::string& out_dir) {
  const fs::path dir = prepare_out_dir(out_dir);
  if (datasets.empty()) {
    for (const auto& entry : fs::directory_iterator(manifest_dir)) {
      if (entry.path().extension() == ".manifest") {
        datasets.push_back(entry.path().stem().string());
      }
    }
    std::sort(datasets.begin(), datasets.end());
    if (datasets.empty()) throw DataError(manifest_dir + ": no .manifest files found");
  }

  std::vector<DatasetManifest> manifests;
  std::vector<std::string> failures;
  for (const auto& name : datasets) {
    const std::string manifest_path = (fs::path(manifest_dir) / (name + ".manifest")).string();
    try {
      manifests.push_back(load_manifest(manifest_path));
    } catch (const std::exception& e) {
      failures.push_back(name + ": " + e.what());
      std::cerr << "error: dataset " << name << " failed: " << e.what() << '\n';
    }
  }
  std::vector<Mode> mode_list;
  for (const auto& m : modes) mode_list.push_back(parse_mode(m));
  BenchmarkRun run = run_benchmark(manifests, mode_list, opts, &std::cerr);
  failures.insert(failures.end(), run.failures.begin(), run.failures.end());

  {
    auto out = open_output(dir / "results.tsv");
    write_results_tsv(run.reports, out);
  }
  {
    auto out = open_output(dir / "report.txt");
    write_comparison(run.reports, out);
  }
  {
    auto out = open_output(dir / "summary.txt");
    write_summary(run.reports, opts, out);
  }
  std::vector<std::pair<std::string, std::string>> kv = {
      {"command", "benchmark"},
      {"manifest_dir", manifest_dir},
      {"datasets", join(datasets, ",")},
      {"modes", join(modes, ",")},
      {"trials", std::to_string(opts.trials)},
      {"seed", std::to_string(opts.seed)},
      {"folds", std::to_string(opts.grid.folds)},
      {"ensemble", std::to_string(opts.ensemble_size)},
      {"jobs", std::to_string(opts.jobs)},
      {"out_dir", out_dir}};
  for (const auto& f : failures) kv.push_back({"failed", f});
  write_config(dir, kv);

  std::ifstream report(dir / "report.txt");
  std::cout << report.rdbuf();
  std::cout << "wrote results.tsv, report.txt, summary.txt in " << dir.string() << '\n';
  if (!failures.empty()) {
    throw DataError(std::to_string(failures.size()) + " dataset(s) failed; see config.txt");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal regression neural networks: rank nets, class baseline, benchmark harness"};
  app.require_subcommand(1);

  // discretize
  DataArgs d_data;
  std::string d_out = runs_root() + "/discretize";
  auto* discretize = app.add_subcommand("discretize", "bin real targets into ordinal categories");
  d_data.add_to(discretize);
  discretize->add_option("--out-dir", d_out, "output directory");
  discretize->callback([&] { cmd_discretize(d_data, d_out); });

  // split
  std::string s_path;
  std::size_t s_target_col = 0;
  std::size_t s_train_count = 0, s_trials = 20;
  std::uint64_t s_seed = 0;
  std::string s_out = runs_root() + "/split";
  auto* split = app.add_subcommand("split", "generate seeded train/test index splits");
  split->add_option("--data", s_path, "input data file")->required();
  split->add_option("--target-col", s_target_col, "0-based target column (for parsing only)");
  split->add_option("--train-count", s_train_count, "training rows per trial")->required();
  split->add_option("--trials", s_trials, "number of independent splits");
  split->add_option("--seed", s_seed, "random seed");
  split->add_option("--out-dir", s_out, "output directory");
  split->callback([&] { cmd_split(s_path, s_target_col, s_train_count, s_trials, s_seed, s_out); });

  // train
  DataArgs t_data;
  NetArgs t_net;
  SgdArgs t_sgd;
  int t_hidden = 5, t_epochs = 200, t_patience = 60;
  double t_lr = 0.1;
  std::uint64_t t_seed = 0;
  std::size_t t_ensemble = 1;
  std::string t_out = runs_root() + "/train";
  auto* train_cmd = app.add_subcommand("train", "train a model (or ensemble) on a dataset");
  t_data.add_to(train_cmd);
  t_net.add_to(train_cmd);
  t_sgd.add_to(train_cmd);
  train_cmd->add_option("--hidden", t_hidden, "hidden units");
  train_cmd->add_option("--epochs", t_epochs, "training epochs");
  train_cmd->add_option("--lr", t_lr, "initial learning rate");
  train_cmd->add_option("--patience", t_patience, "epochs of rising loss before halving");
  train_cmd->add_option("--seed", t_seed, "random seed");
  train_cmd->add_option("--ensemble", t_ensemble, "train this many members (seeds seed+0..m-1)");
  train_cmd->add_option("--out-dir", t_out, "output directory");
  train_cmd->callback([&] {
    cmd_train(t_data, t_net, t_sgd, t_hidden, t_epochs, t_lr, t_patience, t_seed, t_ensemble,
              t_out);
  });

  // gridsearch
  DataArgs g_data;
  NetArgs g_net;
  SgdArgs g_sgd;
  GridArgs g_grid;
  std::uint64_t g_seed = 0;
  int g_jobs = default_jobs();
  std::string g_out = runs_root() + "/gridsearch";
  auto* grid_cmd =
      app.add_subcommand("gridsearch", "cross-validated hyperparameter search on training data");
  g_data.add_to(grid_cmd);
  g_net.add_to(grid_cmd);
  g_sgd.add_to(grid_cmd);
  g_grid.add_to(grid_cmd);
  grid_cmd->add_option("--seed", g_seed, "random seed");
  grid_cmd->add_option("--jobs", g_jobs, "parallel jobs");
  grid_cmd->add_option("--out-dir", g_out, "output directory");
  grid_cmd->callback([&] { cmd_gridsearch(g_data, g_net, g_sgd, g_grid, g_seed, g_jobs, g_out); });

  // predict
  std::vector<std::string> p_models;
  std::string p_data;
  std::optional<std::size_t> p_drop;
  std::optional<double> p_threshold;
  bool p_probs = false;
  std::string p_out = runs_root() + "/predict";
  auto* predict = app.add_subcommand("predict", "predict categories for feature rows");
  predict->add_option("--model", p_models, "model file (repeat for an ensemble)")->required();
  predict->add_option("--data", p_data, "feature file, one row per line")->required();
  predict->add_option("--drop-col", p_drop, "ignore this 0-based column (e.g. a target)");
  predict->add_option("--threshold", p_threshold, "override the model's decoding threshold");
  predict->add_flag("--emit-probs", p_probs, "also print the K outputs and their sum");
  predict->add_option("--out-dir", p_out, "output directory");
  predict->callback([&] { cmd_predict(p_models, p_data, p_drop, p_probs, p_threshold, p_out); });

  // evaluate
  std::vector<std::string> e_models;
  DataArgs e_data;
  std::optional<double> e_threshold;
  std::string e_out = runs_root() + "/evaluate";
  auto* evaluate = app.add_subcommand("evaluate", "score a model on a labeled dataset");
  evaluate->add_option("--model", e_models, "model file (repeat for an ensemble)")->required();
  e_data.add_to(evaluate);
  evaluate->add_option("--threshold", e_threshold, "override the model's decoding threshold");
  evaluate->add_option("--out-dir", e_out, "output directory");
  evaluate->callback([&] { cmd_evaluate(e_models, e_data, e_threshold, e_out); });

  // benchmark
  std::string b_manifest_dir = "data/benchmark";
  std::vector<std::string> b_datasets;
  std::vector<std::string> b_modes = {"rank", "class"};
  NetArgs b_net;
  SgdArgs b_sgd;
  GridArgs b_grid;
  std::size_t b_trials = 20, b_ensemble = 5;
  std::uint64_t b_seed = 0;
  int b_jobs = default_jobs();
  std::string b_out = runs_root() + "/benchmark";
  auto* bench = app.add_subcommand("benchmark", "full multi-split benchmark over datasets");
  bench->add_option("--manifest-dir", b_manifest_dir, "directory of <name>.manifest files");
  bench->add_option("--datasets", b_datasets, "dataset names (default: all manifests)")
      ->delimiter(',');
  bench->add_option("--modes", b_modes, "modes to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"rank", "class"}));
  bench->add_option("--trials", b_trials, "independent splits per dataset");
  bench->add_option("--seed", b_seed, "random seed");
  bench->add_option("--ensemble", b_ensemble, "models per ensemble");
  bench->add_option("--jobs", b_jobs, "parallel trials");
  b_net.add_to(bench, /*with_mode=*/false);
  b_sgd.add_to(bench);
  b_grid.add_to(bench);
  bench->add_option("--out-dir", b_out, "output directory");
  bench->callback([&] {
    BenchmarkOptions opts;
    opts.trials = b_trials;
    opts.seed = b_seed;
    opts.grid = b_grid.spec();
    opts.ensemble_size = b_ensemble;
    opts.threshold = b_net.threshold;
    opts.activation = parse_activation(b_net.activation);
    opts.update = parse_update(b_sgd.update);
    opts.loss = parse_loss(b_sgd.loss);
    opts.init_scale = b_sgd.init_scale;
    opts.jobs = b_jobs;
    cmd_benchmark(b_manifest_dir, b_datasets, b_modes, opts, b_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const NumericError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 4;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
