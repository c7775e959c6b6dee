#pragma once

#include "rwpnn/dataset.hpp"
#include "rwpnn/detector.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace rwpnn {

//! One repeated train/evaluate run over a labelled dataset.
struct ExperimentConfig {
  SplitSpec split;                  //!< holdout P and the base seed
  PipelineConfig pipeline;
  int repeats = 10;
  std::optional<DriftSpec> drift;   //!< applied to the test split if set
};

//! Outcome of a single repeat.
struct RepeatResult {
  int repeat = 0;  //!< 0-based
  std::uint64_t seed = 0;
  int view = -1;
  double threshold = 0.0;
  double validation_f1 = 0.0;
  Metrics test;
};

//! All repeats plus their aggregate.
struct ExperimentReport {
  std::vector<RepeatResult> repeats;
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  double mean_f1 = 0.0;
  double std_f1 = 0.0;

  //! One JSON object per repeat, then one {"aggregate":...} line.
  void write_ndjson(std::ostream& out) const;
  //! Human-readable fixed-width table.
  void write_summary(std::ostream& out) const;
};

//! For each repeat r: split with seed base+r, min-max normalise every
//! split with the training statistics, optionally drift the normalised
//! test windows, fit the pipeline (training seed also offset by r), and
//! score the test split. Aggregates mean precision/recall/F1 and the
//! F1 standard deviation across repeats.
ExperimentReport run_experiment(const TimeSeriesDataset& dataset,
                                const ExperimentConfig& config);

}  // namespace rwpnn
