#include "rwpnn/dataset.hpp"
#include "rwpnn/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

using namespace rwpnn;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name)
      : path(fs::temp_directory_path() / name) {}
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

//! Dataset of 1x1 windows whose single value identifies the window.
TimeSeriesDataset tagged_dataset(int normals, int anomalies) {
  TimeSeriesDataset data;
  for (int i = 0; i < normals + anomalies; ++i) {
    data.windows.push_back(Eigen::MatrixXd::Constant(1, 1, i));
    data.labels.push_back(i < normals ? 0 : 1);
  }
  return data;
}

std::multiset<double> tags(const std::vector<Eigen::MatrixXd>& windows) {
  std::multiset<double> out;
  for (const auto& w : windows) out.insert(w(0, 0));
  return out;
}

}  // namespace

TEST_CASE("split sizes follow the per-class floor rule") {
  SplitSpec spec;
  spec.holdout = 0.2;

  SUBCASE("6402 normals / 762 anomalies") {
    const Splits s = split_dataset(tagged_dataset(6402, 762), spec);
    CHECK(s.train.size() == 5121);
    CHECK(s.val_normal.size() == 1024);
    CHECK(s.val_anomal.size() == 609);
    CHECK(s.test.size() == 410);
  }
  SUBCASE("295 normals / 114 anomalies") {
    const Splits s = split_dataset(tagged_dataset(295, 114), spec);
    CHECK(s.train.size() == 236);
    CHECK(s.val_normal.size() == 47);
    CHECK(s.val_anomal.size() == 91);
    CHECK(s.test.size() == 35);
  }
  SUBCASE("holdout 0.5 on 100 normals / 20 anomalies") {
    spec.holdout = 0.5;
    const Splits s = split_dataset(tagged_dataset(100, 20), spec);
    CHECK(s.train.size() == 50);
    CHECK(s.val_normal.size() == 25);
    CHECK(s.val_anomal.size() == 10);
    CHECK(s.test.size() == 35);  // 25 normals + 10 anomalies
  }
  SUBCASE("holdout 0.8 on 200 normals / 40 anomalies") {
    spec.holdout = 0.8;
    const Splits s = split_dataset(tagged_dataset(200, 40), spec);
    CHECK(s.train.size() == 40);
    CHECK(s.val_normal.size() == 32);
    CHECK(s.val_anomal.size() == 8);
    CHECK(s.test.size() == 160);
  }
}

TEST_CASE("the split partitions the dataset") {
  const TimeSeriesDataset data = tagged_dataset(83, 17);
  const Splits s = split_dataset(data, SplitSpec{0.3, 11});

  std::multiset<double> seen = tags(s.train);
  for (double v : tags(s.val_normal)) seen.insert(v);
  for (double v : tags(s.val_anomal)) seen.insert(v);
  for (double v : tags(s.test.windows)) seen.insert(v);
  CHECK(seen == tags(data.windows));  // nothing lost, nothing duplicated

  // Class purity: train/val_normal tags < 83, val_anomal tags >= 83, and
  // the test labels match each window's original class.
  for (const auto& w : s.train) CHECK(w(0, 0) < 83);
  for (const auto& w : s.val_normal) CHECK(w(0, 0) < 83);
  for (const auto& w : s.val_anomal) CHECK(w(0, 0) >= 83);
  REQUIRE(s.test.labels.size() == s.test.windows.size());
  for (std::size_t i = 0; i < s.test.size(); ++i) {
    CHECK(s.test.labels[i] == (s.test.windows[i](0, 0) >= 83 ? 1 : 0));
  }
  // Both classes reach the test set.
  CHECK(std::count(s.test.labels.begin(), s.test.labels.end(), 1) > 0);
  CHECK(std::count(s.test.labels.begin(), s.test.labels.end(), 0) > 0);
}

TEST_CASE("splitting is deterministic in the seed") {
  const TimeSeriesDataset data = tagged_dataset(60, 15);
  const Splits a = split_dataset(data, SplitSpec{0.2, 5});
  const Splits b = split_dataset(data, SplitSpec{0.2, 5});
  const Splits c = split_dataset(data, SplitSpec{0.2, 6});
  REQUIRE(a.train.size() == b.train.size());
  bool all_equal_ab = true, all_equal_ac = true;
  for (std::size_t i = 0; i < a.train.size(); ++i) {
    all_equal_ab &= a.train[i](0, 0) == b.train[i](0, 0);
    all_equal_ac &= a.train[i](0, 0) == c.train[i](0, 0);
  }
  CHECK(all_equal_ab);
  CHECK(!all_equal_ac);
}

TEST_CASE("split input validation") {
  CHECK_THROWS_AS(split_dataset(tagged_dataset(10, 0), SplitSpec{}),
                  ContractViolation);
  CHECK_THROWS_AS(split_dataset(tagged_dataset(0, 10), SplitSpec{}),
                  ContractViolation);
  CHECK_THROWS_AS(split_dataset(tagged_dataset(5, 5), SplitSpec{0.0, 1}),
                  ContractViolation);
  CHECK_THROWS_AS(split_dataset(tagged_dataset(5, 5), SplitSpec{1.0, 1}),
                  ContractViolation);
}

TEST_CASE("csv loading: layout, labels, and errors") {
  TempFile file("rwpnn_dataset_test.csv");

  SUBCASE("single channel") {
    write_text(file.path, "0,0.1,0.2,0.3\r\n1,0.4,0.5,0.6\n\n");
    const TimeSeriesDataset data =
        load_csv(file.path.string(), CsvSchema{3, 1});
    REQUIRE(data.size() == 2);
    CHECK(data.labels == std::vector<int>{0, 1});
    CHECK(data.windows[0](0, 0) == 0.1);
    CHECK(data.windows[0](1, 0) == 0.2);
    CHECK(data.windows[0](2, 0) == 0.3);
    CHECK(data.windows[1](2, 0) == 0.6);
  }
  SUBCASE("two channels are timestep-major") {
    write_text(file.path, "0,1,2,3,4\n");
    const TimeSeriesDataset data =
        load_csv(file.path.string(), CsvSchema{2, 2});
    REQUIRE(data.size() == 1);
    CHECK(data.windows[0](0, 0) == 1.0);
    CHECK(data.windows[0](0, 1) == 2.0);
    CHECK(data.windows[0](1, 0) == 3.0);
    CHECK(data.windows[0](1, 1) == 4.0);
  }
  SUBCASE("ragged row names the row") {
    write_text(file.path, "0,0.1,0.2,0.3\n0,0.1,0.2\n");
    CHECK_THROWS_WITH_AS(load_csv(file.path.string(), CsvSchema{3, 1}),
                         doctest::Contains("row 2"), FormatError);
  }
  SUBCASE("non-numeric field names row and column") {
    write_text(file.path, "0,0.1,oops,0.3\n");
    try {
      load_csv(file.path.string(), CsvSchema{3, 1});
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      const std::string what = e.what();
      CHECK(what.find("row 1") != std::string::npos);
      CHECK(what.find("column 3") != std::string::npos);
    }
  }
  SUBCASE("labels other than 0/1 are rejected") {
    write_text(file.path, "2,0.1,0.2,0.3\n");
    CHECK_THROWS_AS(load_csv(file.path.string(), CsvSchema{3, 1}),
                    FormatError);
  }
  SUBCASE("missing file raises FileError naming the path") {
    const std::string missing = "/nonexistent/rwpnn_nope.csv";
    CHECK_THROWS_WITH_AS(load_csv(missing, CsvSchema{3, 1}),
                         doctest::Contains("rwpnn_nope.csv"), FileError);
  }
  SUBCASE("schema validation") {
    write_text(file.path, "0,0.1\n");
    CHECK_THROWS_AS(load_csv(file.path.string(), CsvSchema{0, 1}),
                    ContractViolation);
    CHECK_THROWS_AS(load_csv(file.path.string(), CsvSchema{1, 0}),
                    ContractViolation);
  }
}

TEST_CASE("csv round trip reproduces every double exactly") {
  TimeSeriesDataset data;
  Eigen::MatrixXd w(2, 2);
  w << 1.0 / 3.0, 1e-300, -0.1, 12345.678901234567;
  data.windows.push_back(w);
  data.labels.push_back(1);
  w << 0.0, -0.0, 2.5e300, 5e-324;
  data.windows.push_back(w);
  data.labels.push_back(0);

  TempFile file("rwpnn_dataset_roundtrip.csv");
  save_csv(file.path.string(), data);
  const TimeSeriesDataset loaded =
      load_csv(file.path.string(), CsvSchema{2, 2});
  REQUIRE(loaded.size() == 2);
  CHECK(loaded.labels == data.labels);
  for (std::size_t i = 0; i < 2; ++i) {
    for (Eigen::Index k = 0; k < 4; ++k) {
      CHECK(loaded.windows[i].data()[k] == data.windows[i].data()[k]);
    }
  }
}

TEST_CASE("normalization maps observed extrema to the unit interval") {
  std::vector<Eigen::MatrixXd> train;
  Eigen::MatrixXd a(2, 3), b(2, 3);
  // channel 0 spans [1,5], channel 1 is constant, channel 2 spans [-2,0].
  a << 1.0, 7.0, -2.0, 3.0, 7.0, -1.0;
  b << 5.0, 7.0, 0.0, 2.0, 7.0, -0.5;
  train = {a, b};
  const Normalization norm = fit_normalization(train);
  REQUIRE(norm.fitted());
  CHECK(norm.min[0] == 1.0);
  CHECK(norm.max[0] == 5.0);

  const Eigen::MatrixXd na = apply_normalization(norm, a);
  CHECK(na(0, 0) == 0.0);        // the channel minimum
  CHECK(na(0, 1) == 0.5);        // constant channel
  CHECK(na(0, 2) == 0.0);
  CHECK(na(1, 0) == 0.5);        // 3 inside [1,5]
  const Eigen::MatrixXd nb = apply_normalization(norm, b);
  CHECK(nb(0, 0) == 1.0);        // the channel maximum
  CHECK(nb(0, 2) == 1.0);

  // Values outside the training range clamp to the borders.
  Eigen::MatrixXd out(1, 3);
  out << -10.0, 7.0, 99.0;
  const Eigen::MatrixXd no = apply_normalization(norm, out);
  CHECK(no(0, 0) == 0.0);
  CHECK(no(0, 2) == 1.0);

  CHECK_THROWS_AS(apply_normalization(Normalization{}, a), ContractViolation);
  CHECK_THROWS_AS(apply_normalization(norm, Eigen::MatrixXd::Zero(1, 2)),
                  ContractViolation);
  CHECK_THROWS_AS(fit_normalization({}), ContractViolation);
}

TEST_CASE("drift disturbs exactly floor(fraction * N) windows") {
  std::vector<Eigen::MatrixXd> windows(410, Eigen::MatrixXd::Zero(4, 1));
  std::vector<Eigen::MatrixXd> original = windows;
  DriftSpec spec;
  spec.fraction = 0.3;
  spec.seed = 99;
  const std::vector<std::size_t> ids = inject_drift(windows, spec);
  CHECK(ids.size() == 123);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  std::set<std::size_t> affected(ids.begin(), ids.end());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (affected.count(i)) {
      CHECK((windows[i] - original[i]).cwiseAbs().maxCoeff() > 0.0);
    } else {
      CHECK((windows[i] - original[i]).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("drift corner cases") {
  std::vector<Eigen::MatrixXd> windows(10, Eigen::MatrixXd::Constant(2, 2, 1.0));

  SUBCASE("fraction 0 changes nothing") {
    DriftSpec spec;
    spec.fraction = 0.0;
    CHECK(inject_drift(windows, spec).empty());
    for (const auto& w : windows) CHECK(w(0, 0) == 1.0);
  }
  SUBCASE("zero variance is an exact mean shift everywhere") {
    DriftSpec spec;
    spec.fraction = 1.0;
    spec.mean = 0.25;
    spec.variance = 0.0;
    const auto ids = inject_drift(windows, spec);
    CHECK(ids.size() == 10);
    for (const auto& w : windows) {
      for (Eigen::Index k = 0; k < w.size(); ++k) {
        CHECK(w.data()[k] == 1.25);
      }
    }
  }
  SUBCASE("same seed, same subset and noise") {
    std::vector<Eigen::MatrixXd> twin = windows;
    DriftSpec spec;
    spec.seed = 1234;
    const auto a = inject_drift(windows, spec);
    const auto b = inject_drift(twin, spec);
    CHECK(a == b);
    for (std::size_t i = 0; i < windows.size(); ++i) {
      for (Eigen::Index k = 0; k < windows[i].size(); ++k) {
        CHECK(windows[i].data()[k] == twin[i].data()[k]);
      }
    }
  }
  SUBCASE("invalid parameters") {
    DriftSpec spec;
    spec.fraction = -0.1;
    CHECK_THROWS_AS(inject_drift(windows, spec), ContractViolation);
    spec.fraction = 1.1;
    CHECK_THROWS_AS(inject_drift(windows, spec), ContractViolation);
    spec.fraction = 0.5;
    spec.variance = -1.0;
    CHECK_THROWS_AS(inject_drift(windows, spec), ContractViolation);
  }
}

TEST_CASE("metrics treat anomalies as the positive class") {
  SUBCASE("perfect prediction") {
    const Metrics m = compute_metrics({1, 0, 1, 0}, {1, 0, 1, 0});
    CHECK(m.tp == 2);
    CHECK(m.fp == 0);
    CHECK(m.tn == 2);
    CHECK(m.fn == 0);
    CHECK(m.precision == 1.0);
    CHECK(m.recall == 1.0);
    CHECK(m.f1 == 1.0);
  }
  SUBCASE("nothing predicted positive") {
    const Metrics m = compute_metrics({0, 0, 0}, {1, 0, 1});
    CHECK(m.precision == 0.0);
    CHECK(m.recall == 0.0);
    CHECK(m.f1 == 0.0);
    CHECK(m.fn == 2);
    CHECK(m.tn == 1);
  }
  SUBCASE("no actual positives") {
    const Metrics m = compute_metrics({1, 0}, {0, 0});
    CHECK(m.precision == 0.0);
    CHECK(m.recall == 0.0);
    CHECK(m.f1 == 0.0);
  }
  SUBCASE("half precision, full recall") {
    const Metrics m = compute_metrics({1, 1, 1, 1}, {1, 1, 0, 0});
    CHECK(m.precision == 0.5);
    CHECK(m.recall == 1.0);
    CHECK(m.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(compute_metrics({1, 0}, {1}), ContractViolation);
  }
  SUBCASE("empty inputs give all-zero scores") {
    const Metrics m = compute_metrics({}, {});
    CHECK(m.tp + m.fp + m.tn + m.fn == 0);
    CHECK(m.f1 == 0.0);
  }
}
