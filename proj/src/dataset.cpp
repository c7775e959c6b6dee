#include "rwpnn/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace rwpnn {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& field, std::size_t row,
                    std::size_t column) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  // Trailing whitespace is tolerated; anything else is a parse error.
  while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end)))
    ++end;
  if (field.empty() || end == begin || *end != '\0') {
    throw FormatError("row " + std::to_string(row) + ", column " +
                      std::to_string(column) + ": non-numeric field '" +
                      field + "'");
  }
  return value;
}

}  // namespace

TimeSeriesDataset load_csv(const std::string& path, const CsvSchema& schema) {
  if (schema.window_length < 1 || schema.channels < 1) {
    throw ContractViolation("csv schema sizes must be positive");
  }
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open dataset file: " + path);
  }
  const std::size_t expected =
      1 + static_cast<std::size_t>(schema.window_length) *
              static_cast<std::size_t>(schema.channels);
  TimeSeriesDataset data;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != expected) {
      throw FormatError("row " + std::to_string(row) + ": expected " +
                        std::to_string(expected) + " fields, found " +
                        std::to_string(fields.size()));
    }
    const std::string& label_field = fields[0];
    int label = 0;
    if (label_field == "0") {
      label = 0;
    } else if (label_field == "1") {
      label = 1;
    } else {
      throw FormatError("row " + std::to_string(row) + ": unknown label '" +
                        label_field + "' (expected 0 or 1)");
    }
    Eigen::MatrixXd window(schema.window_length, schema.channels);
    std::size_t f = 1;
    for (int t = 0; t < schema.window_length; ++t) {
      for (int c = 0; c < schema.channels; ++c, ++f) {
        window(t, c) = parse_number(fields[f], row, f + 1);
      }
    }
    data.windows.push_back(std::move(window));
    data.labels.push_back(label);
  }
  return data;
}

void save_csv(const std::string& path, const TimeSeriesDataset& dataset) {
  if (dataset.windows.size() != dataset.labels.size()) {
    throw ContractViolation("windows and labels must have equal length");
  }
  std::ofstream out(path);
  if (!out) {
    throw FileError("cannot open file for writing: " + path);
  }
  char buf[64];
  for (std::size_t i = 0; i < dataset.windows.size(); ++i) {
    const Eigen::MatrixXd& w = dataset.windows[i];
    out << dataset.labels[i];
    for (Eigen::Index t = 0; t < w.rows(); ++t) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        std::snprintf(buf, sizeof buf, "%.17g", w(t, c));
        out << ',' << buf;
      }
    }
    out << '\n';
  }
  if (!out) {
    throw FileError("failed while writing: " + path);
  }
}

Normalization fit_normalization(const std::vector<Eigen::MatrixXd>& windows) {
  if (windows.empty()) {
    throw ContractViolation("normalisation needs at least one window");
  }
  const Eigen::Index channels = windows.front().cols();
  Normalization norm;
  norm.min = windows.front().colwise().minCoeff();
  norm.max = windows.front().colwise().maxCoeff();
  for (const Eigen::MatrixXd& w : windows) {
    if (w.cols() != channels) {
      throw ContractViolation("windows must share one channel count");
    }
    norm.min = norm.min.cwiseMin(w.colwise().minCoeff().transpose());
    norm.max = norm.max.cwiseMax(w.colwise().maxCoeff().transpose());
  }
  return norm;
}

Eigen::MatrixXd apply_normalization(const Normalization& norm,
                                    const Eigen::MatrixXd& window) {
  if (!norm.fitted()) {
    throw ContractViolation("normalisation was never fitted");
  }
  if (window.cols() != norm.min.size()) {
    throw ContractViolation("window has " + std::to_string(window.cols()) +
                            " channels, normalisation expects " +
                            std::to_string(norm.min.size()));
  }
  Eigen::MatrixXd out(window.rows(), window.cols());
  for (Eigen::Index c = 0; c < window.cols(); ++c) {
    const double range = norm.max[c] - norm.min[c];
    if (range < 1e-9) {
      out.col(c).setConstant(0.5);
    } else {
      for (Eigen::Index t = 0; t < window.rows(); ++t) {
        out(t, c) = std::clamp((window(t, c) - norm.min[c]) / range, 0.0, 1.0);
      }
    }
  }
  return out;
}

Splits split_dataset(const TimeSeriesDataset& dataset, const SplitSpec& spec) {
  if (!(spec.holdout > 0.0 && spec.holdout < 1.0)) {
    throw ContractViolation("holdout fraction must lie in (0,1)");
  }
  if (dataset.windows.size() != dataset.labels.size()) {
    throw ContractViolation("windows and labels must have equal length");
  }
  std::vector<std::size_t> normals, anomalies;
  for (std::size_t i = 0; i < dataset.labels.size(); ++i) {
    (dataset.labels[i] == 0 ? normals : anomalies).push_back(i);
  }
  if (normals.empty() || anomalies.empty()) {
    throw ContractViolation("split needs both classes present");
  }

  std::mt19937_64 rng(spec.seed);
  std::shuffle(normals.begin(), normals.end(), rng);
  std::shuffle(anomalies.begin(), anomalies.end(), rng);

  const double keep = 1.0 - spec.holdout;
  // The nudge absorbs representation error in `keep` (e.g. 1 - 0.8 is
  // slightly below 0.2, which would otherwise turn 0.2 * 200 into 39).
  const auto kept_count = [keep](std::size_t count) {
    return static_cast<std::size_t>(
        std::floor(keep * static_cast<double>(count) + 1e-9));
  };
  const std::size_t n_train = kept_count(normals.size());
  const std::size_t remainder = normals.size() - n_train;
  const std::size_t n_v1 = kept_count(remainder);
  const std::size_t n_v2 = kept_count(anomalies.size());

  Splits out;
  for (std::size_t i = 0; i < n_train; ++i) {
    out.train.push_back(dataset.windows[normals[i]]);
  }
  for (std::size_t i = n_train; i < n_train + n_v1; ++i) {
    out.val_normal.push_back(dataset.windows[normals[i]]);
  }
  for (std::size_t i = 0; i < n_v2; ++i) {
    out.val_anomal.push_back(dataset.windows[anomalies[i]]);
  }
  std::vector<std::size_t> test_ids(normals.begin() + n_train + n_v1,
                                    normals.end());
  test_ids.insert(test_ids.end(), anomalies.begin() + n_v2, anomalies.end());
  std::shuffle(test_ids.begin(), test_ids.end(), rng);
  for (std::size_t id : test_ids) {
    out.test.windows.push_back(dataset.windows[id]);
    out.test.labels.push_back(dataset.labels[id]);
  }
  return out;
}

std::vector<std::size_t> inject_drift(std::vector<Eigen::MatrixXd>& windows,
                                      const DriftSpec& spec) {
  if (!(spec.fraction >= 0.0 && spec.fraction <= 1.0)) {
    throw ContractViolation("drift fraction must lie in [0,1]");
  }
  if (spec.variance < 0.0) {
    throw ContractViolation("drift variance must be non-negative");
  }
  const std::size_t count = static_cast<std::size_t>(
      std::floor(spec.fraction * static_cast<double>(windows.size())));
  std::vector<std::size_t> ids(windows.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::mt19937_64 rng(spec.seed);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(count);
  std::sort(ids.begin(), ids.end());

  const bool degenerate = spec.variance < 1e-12;
  std::normal_distribution<double> noise(spec.mean, std::sqrt(spec.variance));
  for (std::size_t id : ids) {
    Eigen::MatrixXd& w = windows[id];
    for (Eigen::Index t = 0; t < w.rows(); ++t) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        w(t, c) += degenerate ? spec.mean : noise(rng);
      }
    }
  }
  return ids;
}

Metrics compute_metrics(const std::vector<int>& predicted,
                        const std::vector<int>& actual) {
  if (predicted.size() != actual.size()) {
    throw ContractViolation("prediction and label vectors differ in length");
  }
  Metrics m;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool pred = predicted[i] != 0;
    const bool truth = actual[i] != 0;
    if (pred && truth) ++m.tp;
    else if (pred && !truth) ++m.fp;
    else if (!pred && truth) ++m.fn;
    else ++m.tn;
  }
  m.precision = (m.tp + m.fp) > 0
                    ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp)
                    : 0.0;
  m.recall = (m.tp + m.fn) > 0
                 ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn)
                 : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

}  // namespace rwpnn
