// Acceptance checklist for the ordinal regression package. Each criterion
// prints one PASS/FAIL line; the exit code is the number of failures.
//
//   1  analytic gradients vs central finite differences (property)
//   2  encode/decode round trip under +-0.05 perturbations (enumeration)
//   3  threshold-scan decoder vs an independent literal interpreter
//   4  zero_one <= MAE <= (K-1) * zero_one on random pairs
//   5  rank nets vs class nets across the eight benchmark datasets
//   6  absolute error bands on machine, stocks and abalone
//   7  byte-identical benchmark summaries across reruns and job counts
//   8  model save/load/predict round trip, bit exact
//
// Criteria 5 and 6 need the prepared benchmark datasets (see
// scripts/fetch_datasets.py); they fail with a diagnostic when the data
// files are absent. Everything else is self-contained.

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ordrank/ordrank.hpp"

namespace fs = std::filesystem;
using namespace ordrank;

namespace {

struct Options {
  int criterion = 0;  // 0 = all
  std::string data_dir = "data/benchmark";
  std::string synthetic_dir = "data/synthetic";
  int jobs = default_jobs();
};

// ---- criterion 1: gradient check -----------------------------------------

double loss_at(NetworkModel& model, const std::vector<double>& x,
               const std::vector<double>& target, LossKind kind) {
  return loss(forward(model, x).outputs, target, kind, model.mode);
}

double max_gradient_error(NetworkModel model, const std::vector<double>& x,
                          const std::vector<double>& target, LossKind kind) {
  const ForwardResult fwd = forward(model, x);
  const Weights analytic = backward(model, x, fwd, target, kind);
  const double step = 1e-5;
  double worst = 0.0;
  auto probe = [&](double* param, double expected) {
    const double saved = *param;
    *param = saved + step;
    const double up = loss_at(model, x, target, kind);
    *param = saved - step;
    const double down = loss_at(model, x, target, kind);
    *param = saved;
    const double numeric = (up - down) / (2.0 * step);
    const double scale = std::max({std::abs(expected), std::abs(numeric), 1e-6});
    worst = std::max(worst, std::abs(expected - numeric) / scale);
  };
  for (std::size_t i = 0; i < analytic.w1.values.size(); ++i) {
    probe(&model.weights.w1.values[i], analytic.w1.values[i]);
  }
  for (std::size_t i = 0; i < analytic.b1.size(); ++i) {
    probe(&model.weights.b1[i], analytic.b1[i]);
  }
  for (std::size_t i = 0; i < analytic.w2.values.size(); ++i) {
    probe(&model.weights.w2.values[i], analytic.w2.values[i]);
  }
  for (std::size_t i = 0; i < analytic.b2.size(); ++i) {
    probe(&model.weights.b2[i], analytic.b2[i]);
  }
  return worst;
}

bool criterion_gradients(const Options&, std::string& detail) {
  Rng rng(20070401);
  double worst = 0.0;
  int networks = 0;
  const Activation activations[] = {Activation::Tanh, Activation::Sigmoid};
  const Mode modes[] = {Mode::Rank, Mode::Class};
  const LossKind losses[] = {LossKind::SquareError, LossKind::RelativeEntropy};
  for (int rep = 0; rep < 13; ++rep) {
    for (Mode mode : modes) {
      for (LossKind kind : losses) {
        for (Activation act : activations) {
          const std::size_t d = 1 + rng.below(6);
          const std::size_t h = 1 + rng.below(6);
          const int k = 2 + static_cast<int>(rng.below(5));
          NetworkModel model = init_weights(d, h, k, rng.next(), 1.5);
          model.mode = mode;
          model.hidden_activation = act;
          for (double& b : model.weights.b1) b = rng.uniform(-0.5, 0.5);
          for (double& b : model.weights.b2) b = rng.uniform(-0.5, 0.5);
          std::vector<double> x(d);
          for (double& v : x) v = rng.uniform(-1.5, 1.5);
          const auto target = encode_target(1 + static_cast<int>(rng.below(k)), k, mode);
          worst = std::max(worst, max_gradient_error(model, x, target, kind));
          ++networks;
        }
      }
    }
  }
  std::ostringstream msg;
  msg << networks << " random networks, max relative error " << worst << " (limit 1e-5)";
  detail = msg.str();
  return worst <= 1e-5;
}

// ---- criterion 2: encode/decode enumeration -------------------------------

bool criterion_encode_decode(const Options&, std::string& detail) {
  long checked = 0;
  for (int total = 2; total <= 10; ++total) {
    for (int k = 1; k <= total; ++k) {
      const auto target = encode_target(k, total, Mode::Rank);
      for (unsigned mask = 0; mask < (1u << total); ++mask) {
        std::vector<double> noisy(target);
        for (int i = 0; i < total; ++i) {
          noisy[static_cast<std::size_t>(i)] += (mask >> i) & 1u ? 0.05 : -0.05;
        }
        if (predict_category(noisy, 0.5) != k) {
          std::ostringstream msg;
          msg << "decode failed for K=" << total << " k=" << k << " mask=" << mask;
          detail = msg.str();
          return false;
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " perturbed vectors decode back exactly";
  return true;
}

// ---- criterion 3: scan-rule fidelity --------------------------------------

// Independent literal interpreter of the decoding prose: walk nodes in
// order collecting them until one is not bigger than T (ties count as
// below) or none are left; answer with the last collected node whose output
// is bigger than T, falling back to category 1.
int scan_oracle(const std::vector<double>& outputs, double threshold) {
  std::vector<std::size_t> scanned;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    scanned.push_back(i);
    if (!(outputs[i] > threshold)) break;
  }
  int answer = 0;
  for (std::size_t i : scanned) {
    if (outputs[i] > threshold) answer = static_cast<int>(i) + 1;
  }
  return answer == 0 ? 1 : answer;
}

bool criterion_scan_rule(const Options&, std::string& detail) {
  Rng rng(333);
  const int iterations = 100000;
  for (int it = 0; it < iterations; ++it) {
    const std::size_t k = 2 + rng.below(7);
    std::vector<double> outputs(k);
    for (double& o : outputs) o = rng.uniform01();
    if (rng.below(5) == 0) outputs[rng.below(k)] = 0.5;  // exact tie with T
    if (rng.below(7) == 0) {
      for (double& o : outputs) o = o < 0.5 ? o + 0.4 : o;  // denser around T
    }
    const int expected = scan_oracle(outputs, 0.5);
    const int actual = predict_category(outputs, 0.5);
    if (expected != actual) {
      std::ostringstream msg;
      msg << "mismatch at iteration " << it << ": oracle " << expected << ", implementation "
          << actual;
      detail = msg.str();
      return false;
    }
  }
  detail = std::to_string(iterations) + " random output vectors agree with the interpreter";
  return true;
}

// ---- criterion 4: metric bounds -------------------------------------------

bool criterion_metric_bounds(const Options&, std::string& detail) {
  Rng rng(444);
  const int iterations = 10000;
  for (int it = 0; it < iterations; ++it) {
    const int k = 2 + static_cast<int>(rng.below(9));
    const std::size_t n = 1 + rng.below(60);
    std::vector<int> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = 1 + static_cast<int>(rng.below(k));
      truth[i] = 1 + static_cast<int>(rng.below(k));
    }
    const double z = zero_one_error(pred, truth);
    const double m = mean_abs_error(pred, truth);
    if (!(z <= m + 1e-12) || !(m <= (k - 1) * z + 1e-12)) {
      std::ostringstream msg;
      msg << "bound violated at iteration " << it << ": zero_one " << z << ", mae " << m
          << ", K " << k;
      detail = msg.str();
      return false;
    }
  }
  detail = std::to_string(iterations) + " random prediction/truth pairs respect the bounds";
  return true;
}

// ---- criteria 5 and 6: the real benchmark ----------------------------------

const std::vector<std::string> kBenchmarkDatasets = {
    "diabetes", "pyrimidines", "triazines", "machine",
    "autompg",  "boston",      "stocks",    "abalone"};

BenchmarkOptions benchmark_options(const Options& opts) {
  BenchmarkOptions b;
  b.trials = 20;
  b.seed = 2007;
  b.grid = GridSpec::benchmark_default();
  b.ensemble_size = 5;
  b.jobs = opts.jobs;
  return b;
}

// Runs one dataset in one mode, or explains why it cannot run.
bool run_dataset(const Options& opts, const std::string& name, Mode mode, EvalReport& out,
                 std::string& problem) {
  const fs::path manifest_path = fs::path(opts.data_dir) / (name + ".manifest");
  if (!fs::exists(manifest_path)) {
    problem = name + ": manifest missing (" + manifest_path.string() + ")";
    return false;
  }
  try {
    const DatasetManifest manifest = load_manifest(manifest_path.string());
    if (!fs::exists(manifest.path)) {
      problem = name + ": data file not prepared (" + manifest.path +
                "); run scripts/fetch_datasets.py";
      return false;
    }
    std::cerr << "  running " << name << " (" << to_string(mode) << ", 20 trials)...\n";
    out = benchmark_manifest(manifest, mode, benchmark_options(opts));
    return true;
  } catch (const std::exception& e) {
    problem = name + ": " + e.what();
    return false;
  }
}

bool criterion_rank_vs_class(const Options& opts, std::string& detail) {
  std::ostringstream msg;
  std::vector<std::string> problems;
  int mae_wins = 0, zero_one_wins = 0, ran = 0;
  for (const auto& name : kBenchmarkDatasets) {
    EvalReport rank, cls;
    std::string problem;
    if (!run_dataset(opts, name, Mode::Rank, rank, problem) ||
        !run_dataset(opts, name, Mode::Class, cls, problem)) {
      problems.push_back(problem);
      continue;
    }
    ++ran;
    if (rank.mean_abs.mean <= cls.mean_abs.mean) ++mae_wins;
    if (rank.zero_one.mean < cls.zero_one.mean) ++zero_one_wins;
    msg << "\n    " << name << ": rank zero_one " << rank.zero_one.mean << " vs class "
        << cls.zero_one.mean << "; rank mae " << rank.mean_abs.mean << " vs class "
        << cls.mean_abs.mean;
  }
  if (!problems.empty()) {
    detail = "cannot run on all eight datasets:";
    for (const auto& p : problems) detail += "\n    " + p;
    return false;
  }
  msg << "\n    rank wins: mae " << mae_wins << "/8 (need >= 6), zero_one " << zero_one_wins
      << "/8 (need >= 5)";
  detail = msg.str();
  return mae_wins >= 6 && zero_one_wins >= 5;
}

bool criterion_absolute_bands(const Options& opts, std::string& detail) {
  struct Band {
    const char* dataset;
    const char* metric;
    double center;
    double radius;
  };
  const Band bands[] = {
      {"machine", "zero_one", 0.1703, 0.06},
      {"stocks", "zero_one", 0.1268, 0.05},
      {"abalone", "mae", 0.226, 0.05},
  };
  std::ostringstream msg;
  bool ok = true;
  std::vector<std::string> problems;
  for (const Band& band : bands) {
    EvalReport report;
    std::string problem;
    if (!run_dataset(opts, band.dataset, Mode::Rank, report, problem)) {
      problems.push_back(problem);
      continue;
    }
    const double value = std::strcmp(band.metric, "zero_one") == 0 ? report.zero_one.mean
                                                                   : report.mean_abs.mean;
    const bool in_band = std::abs(value - band.center) <= band.radius;
    ok = ok && in_band;
    msg << "\n    " << band.dataset << " " << band.metric << " " << value << " vs " << band.center
        << " +- " << band.radius << (in_band ? " (in band)" : " (OUT OF BAND)");
  }
  if (!problems.empty()) {
    detail = "cannot run on the banded datasets:";
    for (const auto& p : problems) detail += "\n    " + p;
    return false;
  }
  detail = msg.str();
  return ok;
}

// ---- criterion 7: benchmark determinism ------------------------------------

bool criterion_determinism(const Options& opts, std::string& detail) {
  std::vector<std::string> names;
  if (fs::exists(opts.synthetic_dir)) {
    for (const auto& entry : fs::directory_iterator(opts.synthetic_dir)) {
      if (entry.path().extension() == ".manifest") names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  if (names.empty()) {
    detail = "no manifests under " + opts.synthetic_dir;
    return false;
  }

  BenchmarkOptions base;
  base.trials = 3;
  base.seed = 99;
  base.grid = GridSpec{{3}, {25}, {0.1, 0.3}, {40}, 3};
  base.ensemble_size = 2;

  std::vector<DatasetManifest> manifests;
  for (const auto& name : names) {
    manifests.push_back(
        load_manifest((fs::path(opts.synthetic_dir) / (name + ".manifest")).string()));
  }

  auto run_all = [&](int jobs) {
    BenchmarkOptions o = base;
    o.jobs = jobs;
    const BenchmarkRun run = run_benchmark(manifests, {Mode::Rank, Mode::Class}, o);
    if (!run.failures.empty()) throw DataError("synthetic benchmark failed: " + run.failures[0]);
    const fs::path file =
        fs::temp_directory_path() / ("ordrank_summary_j" + std::to_string(jobs) + ".txt");
    std::ofstream out(file);
    write_summary(run.reports, o, out);
    out.close();
    std::ifstream in(file, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    return bytes.str();
  };

  const std::string first = run_all(1);
  const std::string parallel = run_all(2);
  const std::string again = run_all(1);
  if (first != parallel) {
    detail = "summary differs between --jobs 1 and --jobs 2";
    return false;
  }
  if (first != again) {
    detail = "summary differs between identical reruns";
    return false;
  }
  std::ostringstream msg;
  msg << names.size() << " synthetic dataset(s), two modes: summaries byte-identical across "
      << "reruns and job counts (" << first.size() << " bytes)";
  detail = msg.str();
  return true;
}

// ---- criterion 8: persistence round trip ------------------------------------

bool criterion_persistence(const Options&, std::string& detail) {
  Rng rng(888);
  const fs::path file = fs::temp_directory_path() / "ordrank_acceptance_model.txt";
  long checked = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t d = 1 + rng.below(10);
    const std::size_t h = 1 + rng.below(12);
    const int k = 2 + static_cast<int>(rng.below(8));
    NetworkModel model = init_weights(d, h, k, rng.next(), 1.2);
    model.mode = rng.below(2) ? Mode::Rank : Mode::Class;
    model.hidden_activation = static_cast<Activation>(rng.below(3));
    model.threshold = rng.uniform(0.1, 0.9);
    for (double& b : model.weights.b1) b = rng.uniform(-2.0, 2.0);
    for (double& b : model.weights.b2) b = rng.uniform(-2.0, 2.0);
    for (double& v : model.norm.mean) v = rng.uniform(-100.0, 100.0);
    for (double& v : model.norm.stddev) v = rng.uniform(0.01, 50.0);

    save_model(model, file.string());
    const NetworkModel loaded = load_model(file.string());
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> raw(d);
      for (double& v : raw) v = rng.uniform(-200.0, 200.0);
      const auto a = forward(model, apply_norm(model.norm, raw));
      const auto b = forward(loaded, apply_norm(loaded.norm, raw));
      if (a.outputs != b.outputs || decode(model, a.outputs) != decode(loaded, b.outputs)) {
        std::ostringstream msg;
        msg << "round trip diverged for model " << rep << " input " << i;
        detail = msg.str();
        return false;
      }
      ++checked;
    }
  }
  detail = "20 models x 1000 inputs: loaded predictions bit-identical (" +
           std::to_string(checked) + " checks)";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto value = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) {
        std::cerr << flag << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") {
      opts.criterion = std::stoi(value("--criterion"));
    } else if (arg == "--data-dir") {
      opts.data_dir = value("--data-dir");
    } else if (arg == "--synthetic-dir") {
      opts.synthetic_dir = value("--synthetic-dir");
    } else if (arg == "--jobs") {
      opts.jobs = std::stoi(value("--jobs"));
    } else if (arg == "--help" || arg == "-h") {
      std::cout << "usage: ordrank_acceptance [--criterion N] [--data-dir DIR]\n"
                   "                          [--synthetic-dir DIR] [--jobs N]\n";
      return 0;
    } else {
      std::cerr << "unknown argument: " << arg << "\n";
      return 2;
    }
  }

  struct Entry {
    int id;
    const char* title;
    std::function<bool(const Options&, std::string&)> run;
  };
  const std::vector<Entry> criteria = {
      {1, "gradient correctness", criterion_gradients},
      {2, "encode/decode round trip", criterion_encode_decode},
      {3, "scan-rule fidelity", criterion_scan_rule},
      {4, "metric bounds", criterion_metric_bounds},
      {5, "rank vs class on the benchmark", criterion_rank_vs_class},
      {6, "absolute error bands", criterion_absolute_bands},
      {7, "benchmark determinism", criterion_determinism},
      {8, "persistence round trip", criterion_persistence},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    if (opts.criterion != 0 && opts.criterion != entry.id) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = entry.run(opts, detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << entry.id << " " << (ok ? "PASS" : "FAIL") << " — "
              << entry.title << ": " << detail << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
