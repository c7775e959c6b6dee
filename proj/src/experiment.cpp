#include "rwpnn/experiment.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace rwpnn {

void ExperimentReport::write_ndjson(std::ostream& out) const {
  for (const RepeatResult& r : repeats) {
    out << "{\"repeat\":" << r.repeat << ",\"seed\":" << r.seed
        << ",\"view\":" << r.view << ",\"threshold\":" << r.threshold
        << ",\"validation_f1\":" << r.validation_f1
        << ",\"precision\":" << r.test.precision
        << ",\"recall\":" << r.test.recall << ",\"f1\":" << r.test.f1
        << "}\n";
  }
  out << "{\"aggregate\":{\"repeats\":" << repeats.size()
      << ",\"mean_precision\":" << mean_precision
      << ",\"mean_recall\":" << mean_recall << ",\"mean_f1\":" << mean_f1
      << ",\"std_f1\":" << std_f1 << "}}\n";
}

void ExperimentReport::write_summary(std::ostream& out) const {
  out << std::fixed << std::setprecision(4);
  out << "repeat  view  threshold      val_f1  precision  recall  f1\n";
  for (const RepeatResult& r : repeats) {
    out << std::setw(6) << r.repeat << "  " << std::setw(4) << r.view << "  "
        << std::setw(9) << std::scientific << std::setprecision(2)
        << r.threshold << std::fixed << std::setprecision(4) << "  "
        << std::setw(6) << r.validation_f1 << "  " << std::setw(9)
        << r.test.precision << "  " << std::setw(6) << r.test.recall << "  "
        << r.test.f1 << "\n";
  }
  out << "mean precision " << mean_precision << ", mean recall " << mean_recall
      << ", mean f1 " << mean_f1 << " (std " << std_f1 << ")\n";
  out.unsetf(std::ios::floatfield);
}

ExperimentReport run_experiment(const TimeSeriesDataset& dataset,
                                const ExperimentConfig& config) {
  if (config.repeats < 1) {
    throw ContractViolation("experiment needs at least one repeat");
  }
  ExperimentReport report;
  for (int r = 0; r < config.repeats; ++r) {
    SplitSpec split_spec = config.split;
    split_spec.seed = config.split.seed + static_cast<std::uint64_t>(r);
    Splits splits = split_dataset(dataset, split_spec);

    const Normalization norm = fit_normalization(splits.train);
    const auto normalise = [&](std::vector<Eigen::MatrixXd>& windows) {
      for (Eigen::MatrixXd& w : windows) w = apply_normalization(norm, w);
    };
    normalise(splits.train);
    normalise(splits.val_normal);
    normalise(splits.val_anomal);
    normalise(splits.test.windows);

    if (config.drift.has_value()) {
      DriftSpec drift = *config.drift;
      drift.seed += static_cast<std::uint64_t>(r);
      inject_drift(splits.test.windows, drift);
    }

    PipelineConfig pipeline = config.pipeline;
    pipeline.train.seed += static_cast<std::uint64_t>(r);
    const DetectionModel model = fit_pipeline(
        splits.train, splits.val_normal, splits.val_anomal, pipeline);

    std::vector<int> predicted;
    predicted.reserve(splits.test.size());
    for (const Eigen::MatrixXd& w : splits.test.windows) {
      predicted.push_back(classify_window(model, w).label);
    }

    RepeatResult result;
    result.repeat = r;
    result.seed = split_spec.seed;
    result.view = model.view;
    result.threshold = model.threshold;
    result.validation_f1 = model.validation_f1;
    result.test = compute_metrics(predicted, splits.test.labels);
    report.repeats.push_back(result);
  }

  const double n = static_cast<double>(report.repeats.size());
  for (const RepeatResult& r : report.repeats) {
    report.mean_precision += r.test.precision / n;
    report.mean_recall += r.test.recall / n;
    report.mean_f1 += r.test.f1 / n;
  }
  double var = 0.0;
  for (const RepeatResult& r : report.repeats) {
    const double d = r.test.f1 - report.mean_f1;
    var += d * d / n;
  }
  report.std_f1 = std::sqrt(var);
  return report;
}

}  // namespace rwpnn
