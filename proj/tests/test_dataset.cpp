#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordrank/dataset.hpp"
#include "ordrank/rng.hpp"

using namespace ordrank;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

// Independent binning oracle: walk the bin intervals [lo + (j-1)w, lo + jw)
// (last bin closed) and return the first one containing t.
int oracle_bin(double t, double lo, double hi, int k) {
  const double w = (hi - lo) / k;
  for (int j = 1; j <= k; ++j) {
    const double low = lo + (j - 1) * w;
    const double high = lo + j * w;
    if (t >= low && (t < high || j == k)) return j;
  }
  return k;
}

}  // namespace

TEST_CASE("load_csv parses rows and extracts the target column") {
  const auto path = write_temp("ordrank_basic.csv", "1,2,9.0\n3,4,1.0\n5,6,5.0\n");
  const RawDataset data = load_csv(path, 2);
  REQUIRE(data.dim == 2);
  REQUIRE(data.targets == std::vector<double>{9.0, 1.0, 5.0});
  REQUIRE(data.features[1] == std::vector<double>{3.0, 4.0});
}

TEST_CASE("load_csv accepts whitespace delimiters and comment lines") {
  const auto path = write_temp("ordrank_ws.csv", "# header comment\n1 2\t3\n\n4 5 6\n");
  const RawDataset data = load_csv(path, 0);
  REQUIRE(data.size() == 2);
  REQUIRE(data.targets == std::vector<double>{1.0, 4.0});
  REQUIRE(data.features[1] == std::vector<double>{5.0, 6.0});
}

TEST_CASE("load_csv error paths name the offending cell") {
  const auto empty = write_temp("ordrank_empty.csv", "");
  REQUIRE_THROWS_WITH(load_csv(empty, 0), Catch::Matchers::ContainsSubstring("no rows"));

  const auto bad = write_temp("ordrank_bad.csv", "1,x,3\n");
  REQUIRE_THROWS_WITH(load_csv(bad, 0),
                      Catch::Matchers::ContainsSubstring("row 1, column 2"));

  const auto ragged = write_temp("ordrank_ragged.csv", "1,2,3\n1,2\n");
  REQUIRE_THROWS_WITH(load_csv(ragged, 0), Catch::Matchers::ContainsSubstring("ragged row 2"));

  const auto inf = write_temp("ordrank_inf.csv", "1,2\ninf,3\n");
  REQUIRE_THROWS_WITH(load_csv(inf, 0),
                      Catch::Matchers::ContainsSubstring("non-finite cell at row 2, column 1"));

  REQUIRE_THROWS_AS(load_csv("/definitely/not/there.csv", 0), DataError);

  const auto narrow = write_temp("ordrank_one_col.csv", "1\n2\n");
  REQUIRE_THROWS_AS(load_csv(narrow, 0), DataError);
}

TEST_CASE("equal-interval discretization matches the hand-derived example") {
  RawDataset raw;
  raw.dim = 1;
  for (double t : {0.0, 2.5, 4.2, 9.9, 10.0}) {
    raw.features.push_back({0.0});
    raw.targets.push_back(t);
  }
  const OrdinalDataset data = discretize_equal_interval(raw, 5);
  REQUIRE(data.labels == std::vector<int>{1, 2, 3, 5, 5});
  for (std::size_t i = 0; i < raw.size(); ++i) {
    REQUIRE(data.labels[i] == oracle_bin(raw.targets[i], 0.0, 10.0, 5));
  }
}

TEST_CASE("discretization boundary rules: min to 1, max clamped to K") {
  RawDataset raw;
  raw.dim = 1;
  for (double t : {-3.0, 7.0}) {
    raw.features.push_back({0.0});
    raw.targets.push_back(t);
  }
  const OrdinalDataset data = discretize_equal_interval(raw, 4);
  REQUIRE(data.labels.front() == 1);
  REQUIRE(data.labels.back() == 4);
}

TEST_CASE("discretization rejects degenerate inputs") {
  RawDataset raw;
  raw.dim = 1;
  raw.features = {{0.0}, {0.0}};
  raw.targets = {5.0, 5.0};
  REQUIRE_THROWS_WITH(discretize_equal_interval(raw, 5),
                      Catch::Matchers::ContainsSubstring("zero range"));
  raw.targets = {5.0, 6.0};
  REQUIRE_THROWS_AS(discretize_equal_interval(raw, 1), DataError);
}

TEST_CASE("discretization is monotone, exhaustive and agrees with the oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(8));
    RawDataset raw;
    raw.dim = 1;
    const int n = 50;
    for (int i = 0; i < n; ++i) {
      raw.features.push_back({0.0});
      raw.targets.push_back(rng.uniform(-5.0, 5.0));
    }
    const OrdinalDataset data = discretize_equal_interval(raw, k);
    const double lo = *std::min_element(raw.targets.begin(), raw.targets.end());
    const double hi = *std::max_element(raw.targets.begin(), raw.targets.end());
    std::vector<std::pair<double, int>> pairs;
    for (int i = 0; i < n; ++i) {
      REQUIRE(data.labels[i] >= 1);
      REQUIRE(data.labels[i] <= k);
      REQUIRE(data.labels[i] == oracle_bin(raw.targets[i], lo, hi, k));
      pairs.emplace_back(raw.targets[i], data.labels[i]);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      REQUIRE(pairs[i - 1].second <= pairs[i].second);
    }
  }
}

TEST_CASE("uniformly spaced targets fill bins evenly") {
  // Integer targets 0..n-1 with (n-1) divisible by K keep the boundary
  // arithmetic exact, so the count spread must be at most 1.
  for (int k : {2, 4, 5, 8}) {
    const int n = 8 * k + 1;
    RawDataset raw;
    raw.dim = 1;
    for (int i = 0; i < n; ++i) {
      raw.features.push_back({0.0});
      raw.targets.push_back(static_cast<double>(i));
    }
    const OrdinalDataset data = discretize_equal_interval(raw, k);
    std::vector<int> counts(k, 0);
    for (int label : data.labels) ++counts[label - 1];
    const auto [mn, mx] = std::minmax_element(counts.begin(), counts.end());
    REQUIRE(*mx - *mn <= 1);
  }
}

TEST_CASE("labeled datasets validate category range") {
  RawDataset raw;
  raw.dim = 1;
  raw.features = {{0.0}, {0.0}, {0.0}};
  raw.targets = {1.0, 3.0, 2.0};
  const OrdinalDataset data = from_labeled(raw, 3);
  REQUIRE(data.labels == std::vector<int>{1, 3, 2});

  raw.targets = {1.0, 3.5, 2.0};
  REQUIRE_THROWS_AS(from_labeled(raw, 3), DataError);
  raw.targets = {1.0, 4.0, 2.0};
  REQUIRE_THROWS_AS(from_labeled(raw, 3), DataError);
}

TEST_CASE("manifest files parse and resolve relative paths") {
  std::istringstream in(
      "# comment\n"
      "path = machine.csv\n"
      "target_column = 6\n"
      "k = 5\n"
      "train_count = 150\n");
  const DatasetManifest m = parse_manifest(in, "machine.manifest");
  REQUIRE(m.path == "machine.csv");
  REQUIRE(m.target_column == 6);
  REQUIRE(m.categories == 5);
  REQUIRE(m.train_count == 150);

  std::istringstream missing("path = a.csv\nk = 5\n");
  REQUIRE_THROWS_AS(parse_manifest(missing, "x"), DataError);
  std::istringstream unknown("path=a\ntarget_column=0\nk=5\ntrain_count=1\nfoo=1\n");
  REQUIRE_THROWS_WITH(parse_manifest(unknown, "x"),
                      Catch::Matchers::ContainsSubstring("unknown manifest key"));
}
