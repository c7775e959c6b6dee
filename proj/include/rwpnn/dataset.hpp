#pragma once

#include "rwpnn/errors.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace rwpnn {

//! A labelled collection of fixed-shape windows. Each window is
//! window_length x channels; label 0 marks normal, 1 marks anomalous.
struct TimeSeriesDataset {
  std::vector<Eigen::MatrixXd> windows;
  std::vector<int> labels;

  std::size_t size() const { return windows.size(); }
};

//! Expected window shape of a CSV file.
struct CsvSchema {
  int window_length = 0;
  int channels = 0;
};

//! Reads one window per row: the label (0 or 1) followed by
//! window_length x channels values in timestep-major order.
//! Throws FileError when the file cannot be opened and FormatError
//! (naming the 1-based row) on ragged rows, non-numeric fields, or
//! labels other than 0/1.
TimeSeriesDataset load_csv(const std::string& path, const CsvSchema& schema);

//! Inverse of load_csv; values are written with %.17g so a round trip
//! reproduces every double exactly.
void save_csv(const std::string& path, const TimeSeriesDataset& dataset);

//! Per-channel min/max statistics for rescaling into [0,1].
struct Normalization {
  Eigen::VectorXd min;
  Eigen::VectorXd max;

  bool fitted() const { return min.size() > 0; }
};

//! Computes per-channel extrema over every timestep of every window.
Normalization fit_normalization(const std::vector<Eigen::MatrixXd>& windows);

//! (x - min) / (max - min) clamped into [0,1]; channels whose observed
//! range collapses below 1e-9 map to 0.5.
Eigen::MatrixXd apply_normalization(const Normalization& norm,
                                    const Eigen::MatrixXd& window);

//! Splitting parameters: `holdout` is the fraction P kept out of
//! training (split between validation and test), in (0,1).
struct SplitSpec {
  double holdout = 0.2;
  std::uint64_t seed = 42;
};

//! Output of split_dataset. Training and the first validation part hold
//! normal windows only; the second validation part holds anomalies; the
//! test set mixes the remaining windows of both classes.
struct Splits {
  std::vector<Eigen::MatrixXd> train;      // normals
  std::vector<Eigen::MatrixXd> val_normal; // normals
  std::vector<Eigen::MatrixXd> val_anomal; // anomalies
  TimeSeriesDataset test;                  // mixed, labelled
};

//! Seeded, per-class split. With N normals and A anomalies:
//!   train       = floor((1-P) * N) shuffled normals,
//!   val_normal  = floor((1-P) * r) of the remaining r normals,
//!   val_anomal  = floor((1-P) * A) shuffled anomalies,
//!   test        = everything left, shuffled across classes.
//! Requires both classes to be present.
Splits split_dataset(const TimeSeriesDataset& dataset, const SplitSpec& spec);

//! Additive Gaussian disturbance applied to a random subset of windows.
struct DriftSpec {
  double fraction = 0.3;  //!< share of windows to disturb, in [0,1]
  double mean = 0.3;
  double variance = 0.2;
  std::uint64_t seed = 7;
};

//! Adds i.i.d. N(mean, variance) noise to every element of
//! floor(fraction * windows.size()) windows chosen by a seeded shuffle.
//! A variance below 1e-12 degenerates to an exact mean shift. Returns
//! the affected window indices in ascending order.
std::vector<std::size_t> inject_drift(std::vector<Eigen::MatrixXd>& windows,
                                      const DriftSpec& spec);

//! Confusion counts and derived scores; anomalies are the positive class.
struct Metrics {
  long tp = 0, fp = 0, tn = 0, fn = 0;
  double precision = 0.0;  //!< 0 when nothing was predicted positive
  double recall = 0.0;     //!< 0 when nothing is actually positive
  double f1 = 0.0;         //!< 0 when precision + recall == 0
};

Metrics compute_metrics(const std::vector<int>& predicted,
                        const std::vector<int>& actual);

}  // namespace rwpnn
