#include "rwpnn/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rwpnn {
namespace {

double percentile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double rank = q * static_cast<double>(values.size());
  std::size_t idx = static_cast<std::size_t>(std::ceil(rank));
  idx = idx > 0 ? idx - 1 : 0;
  idx = std::min(idx, values.size() - 1);
  return values[idx];
}

double f1_from_counts(long tp, long fp, long actual_pos) {
  const long predicted_pos = tp + fp;
  const double precision =
      predicted_pos > 0
          ? static_cast<double>(tp) / static_cast<double>(predicted_pos)
          : 0.0;
  const double recall =
      actual_pos > 0 ? static_cast<double>(tp) / static_cast<double>(actual_pos)
                     : 0.0;
  return (precision + recall) > 0.0
             ? 2.0 * precision * recall / (precision + recall)
             : 0.0;
}

}  // namespace

ViewThreshold select_view_and_threshold(const Eigen::MatrixXd& densities,
                                        const std::vector<int>& labels) {
  const Eigen::Index n = densities.rows();
  const Eigen::Index views = densities.cols();
  if (static_cast<Eigen::Index>(labels.size()) != n) {
    throw ContractViolation("density rows and labels differ in length");
  }
  if (n < 1 || views < 1) {
    throw ContractViolation("threshold search needs at least one row and view");
  }
  long actual_pos = 0;
  for (int l : labels) actual_pos += (l != 0) ? 1 : 0;
  if (actual_pos == 0 || actual_pos == n) {
    throw ContractViolation(
        "threshold search needs both classes in the validation set");
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  ViewThreshold best;
  best.f1 = -1.0;
  std::vector<Eigen::Index> order(n);
  for (Eigen::Index v = 0; v < views; ++v) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return densities(a, v) < densities(b, v);
    });
    // Sweep "the j smallest densities are predicted anomalous";
    // j = 0 is the -inf sentinel, j = n the +inf sentinel.
    long tp = 0;
    for (Eigen::Index j = 0; j <= n; ++j) {
      double beta;
      if (j == 0) {
        beta = -kInf;
      } else if (j == n) {
        beta = kInf;
      } else {
        const double lo = densities(order[j - 1], v);
        const double hi = densities(order[j], v);
        if (!(lo < hi)) {
          tp += (labels[order[j - 1]] != 0) ? 1 : 0;
          continue;  // equal neighbours: this cut is not realisable
        }
        beta = lo + 0.5 * (hi - lo);
      }
      if (j > 0) tp += (labels[order[j - 1]] != 0) ? 1 : 0;
      const long fp = j - tp;
      const double f1 = f1_from_counts(tp, fp, actual_pos);
      if (f1 > best.f1) {
        best.view = static_cast<int>(v);
        best.threshold = beta;
        best.f1 = f1;
      }
    }
  }
  return best;
}

Classification classify_window(const DetectionModel& model,
                               const Eigen::MatrixXd& window) {
  if (model.view < 0 || model.view >= model.density.gammas().size() ||
      std::isnan(model.threshold)) {
    throw ContractViolation("detection model has no selected view/threshold");
  }
  const Eigen::VectorXd latent = model.autoencoder.latent_normalize(window);
  const DensityEstimate est = model.density.estimate_density(latent);
  Classification out;
  out.score = est.per_view[model.view];
  out.label = out.score < model.threshold ? 1 : 0;
  return out;
}

std::vector<EarlyWarningPoint> rolling_delta_alerts(
    const std::vector<double>& series, int s, double threshold) {
  if (s < 1) throw ContractViolation("rolling window must be >= 1");
  const int length = static_cast<int>(series.size());
  if (length < 2 * s) {
    throw ContractViolation("series of length " + std::to_string(length) +
                            " is shorter than two rolling windows (2*" +
                            std::to_string(s) + ")");
  }
  // smoothed[t] = mean(series[t-s+1 .. t]), defined for t >= s-1.
  std::vector<double> smoothed(length, 0.0);
  double acc = 0.0;
  for (int t = 0; t < length; ++t) {
    acc += series[t];
    if (t >= s) acc -= series[t - s];
    if (t >= s - 1) smoothed[t] = acc / static_cast<double>(s);
  }
  std::vector<EarlyWarningPoint> out;
  out.reserve(length - 2 * s + 1);
  for (int t = 2 * s - 1; t < length; ++t) {
    EarlyWarningPoint p;
    p.t = t;
    p.delta = std::abs(smoothed[t] - smoothed[t - s]);
    p.alert = p.delta > threshold;
    out.push_back(p);
  }
  return out;
}

EarlyWarningScan early_warning_scan(const DetectionModel& model,
                                    const Eigen::MatrixXd& window,
                                    const EarlyWarningConfig& cfg) {
  if (!model.early_warning.has_value()) {
    throw ContractViolation("model carries no early-warning state");
  }
  if (cfg.window < 1) throw ContractViolation("rolling window must be >= 1");
  if (!(cfg.log_floor > 0.0)) {
    throw ContractViolation("log floor must be positive");
  }
  double delta = cfg.alert_threshold;
  if (std::isnan(delta)) {
    delta = model.early_warning->default_alert_threshold;
  } else if (!(delta > 0.0)) {
    throw ContractViolation("alert threshold must be positive");
  }
  if (window.rows() < 2 * static_cast<Eigen::Index>(cfg.window)) {
    throw ContractViolation("window of " + std::to_string(window.rows()) +
                            " timesteps is shorter than two rolling windows");
  }

  const EarlyWarningModel& ew = *model.early_warning;
  const Eigen::MatrixXd seq = model.autoencoder.encode(window).sequence;
  EarlyWarningScan scan;
  scan.log_density.reserve(seq.rows());
  for (Eigen::Index t = 0; t < seq.rows(); ++t) {
    const Eigen::VectorXd y = ew.norm.apply(seq.row(t).transpose());
    const double p = ew.density.estimate_density(y).per_view[model.view];
    scan.log_density.push_back(std::log(std::max(p, cfg.log_floor)));
  }
  scan.points = rolling_delta_alerts(scan.log_density, cfg.window, delta);
  for (const EarlyWarningPoint& p : scan.points) {
    scan.any_alert = scan.any_alert || p.alert;
  }
  return scan;
}

DetectionModel fit_pipeline(const std::vector<Eigen::MatrixXd>& train,
                            const std::vector<Eigen::MatrixXd>& val_normal,
                            const std::vector<Eigen::MatrixXd>& val_anomal,
                            const PipelineConfig& config,
                            TrainReport* report) {
  if (train.empty()) {
    throw ContractViolation("pipeline needs training windows");
  }
  if (val_normal.empty() || val_anomal.empty()) {
    throw ContractViolation(
        "pipeline needs normal and anomalous validation windows");
  }
  const int input_dim = static_cast<int>(train.front().cols());
  const int window_length = static_cast<int>(train.front().rows());

  RecurrentAutoencoder autoencoder(input_dim, window_length,
                                   config.encoder_sizes, config.decoder_sizes,
                                   config.train.seed);
  TrainReport local_report =
      autoencoder.train(train, val_normal, config.train);
  if (report != nullptr) *report = local_report;

  FrameGrid grid =
      build_grid(config.resolution, config.order, autoencoder.latent_dim());
  MrwpnModel density(grid, ReceptiveFieldSet(config.gammas));
  for (const Eigen::MatrixXd& w : train) {
    density.update_online(autoencoder.latent_normalize(w));
  }

  const Eigen::Index n_val =
      static_cast<Eigen::Index>(val_normal.size() + val_anomal.size());
  Eigen::MatrixXd densities(n_val, density.gammas().size());
  std::vector<int> labels;
  labels.reserve(n_val);
  Eigen::Index row = 0;
  for (const Eigen::MatrixXd& w : val_normal) {
    densities.row(row++) =
        density.estimate_density(autoencoder.latent_normalize(w)).per_view;
    labels.push_back(0);
  }
  for (const Eigen::MatrixXd& w : val_anomal) {
    densities.row(row++) =
        density.estimate_density(autoencoder.latent_normalize(w)).per_view;
    labels.push_back(1);
  }
  const ViewThreshold sel = select_view_and_threshold(densities, labels);

  DetectionModel model{std::move(autoencoder), std::move(density), sel.view,
                       sel.threshold,          sel.f1,              {}};

  const int s = config.early_warning_window;
  if (config.fit_early_warning && window_length >= 2 * s) {
    // Normalisation over every per-timestep encoder output of the
    // training windows, then one density model fed the same stream.
    std::vector<Eigen::VectorXd> rows;
    rows.reserve(train.size() * static_cast<std::size_t>(window_length));
    for (const Eigen::MatrixXd& w : train) {
      const Eigen::MatrixXd seq = model.autoencoder.encode(w).sequence;
      for (Eigen::Index t = 0; t < seq.rows(); ++t) {
        rows.push_back(seq.row(t).transpose());
      }
    }
    EarlyWarningModel ew{
        MrwpnModel(grid, ReceptiveFieldSet(config.gammas)),
        LatentNorm::fit(rows),
        0.0,
    };
    for (const Eigen::VectorXd& r : rows) {
      ew.density.update_online(ew.norm.apply(r));
    }
    // Data-driven default alert threshold: 99th percentile of the deltas
    // the monitor produces on the training windows themselves.
    std::vector<double> deltas;
    model.early_warning = std::move(ew);
    EarlyWarningConfig scan_cfg;
    scan_cfg.window = s;
    scan_cfg.alert_threshold = std::numeric_limits<double>::infinity();
    for (const Eigen::MatrixXd& w : train) {
      const EarlyWarningScan scan = early_warning_scan(model, w, scan_cfg);
      for (const EarlyWarningPoint& p : scan.points) deltas.push_back(p.delta);
    }
    model.early_warning->default_alert_threshold = percentile(deltas, 0.99);
  }
  return model;
}

}  // namespace rwpnn
