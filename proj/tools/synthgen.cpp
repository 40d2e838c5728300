// Generates a synthetic regression table for smoke tests and demos: features
// uniform in [-2, 2], target a seeded random linear + tanh mix of the
// features plus uniform noise. Targets are left continuous so the normal
// discretize step applies.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordrank/rng.hpp"

int main(int argc, char** argv) {
  CLI::App app{"synthetic ordinal-regression dataset generator"};
  std::size_t n = 400;
  std::size_t d = 4;
  std::uint64_t seed = 1;
  double noise = 0.1;
  std::string out;
  app.add_option("--n", n, "rows")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  app.add_option("--d", d, "feature dimension")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--noise", noise, "uniform noise amplitude on the target");
  app.add_option("--out", out, "output file (default stdout)");
  CLI11_PARSE(app, argc, argv);

  ordrank::Rng rng(seed);
  std::vector<double> linear(d), mix(d);
  for (auto& w : linear) w = rng.uniform(-1.0, 1.0);
  for (auto& w : mix) w = rng.uniform(-1.0, 1.0);

  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) {
      std::cerr << "error: cannot open " << out << '\n';
      return 1;
    }
  }
  std::ostream& os = out.empty() ? std::cout : file;

  os << "# synthetic data: seed=" << seed << " n=" << n << " d=" << d << " noise=" << noise
     << "\n";
  char buf[40];
  for (std::size_t i = 0; i < n; ++i) {
    double target = 0.0;
    double blend = 0.0;
    std::vector<double> row(d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = rng.uniform(-2.0, 2.0);
      target += linear[j] * row[j];
      blend += mix[j] * row[j];
    }
    target += 1.5 * std::tanh(blend) + noise * rng.uniform(-1.0, 1.0);
    for (std::size_t j = 0; j < d; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
      os << buf << ',';
    }
    std::snprintf(buf, sizeof(buf), "%.17g", target);
    os << buf << '\n';
  }
  return 0;
}
