#pragma once

#include "rwpnn/autoencoder.hpp"
#include "rwpnn/dataset.hpp"
#include "rwpnn/mrwpn.hpp"

#include <Eigen/Core>
#include <limits>
#include <optional>
#include <vector>

namespace rwpnn {

//! Outcome of the joint view/threshold search.
struct ViewThreshold {
  int view = -1;
  double threshold = std::numeric_limits<double>::quiet_NaN();
  double f1 = 0.0;
};

//! Exhaustive search over every ensemble view. Candidate thresholds per
//! view are the midpoints between consecutive sorted distinct density
//! values plus -inf / +inf sentinels; a window is predicted anomalous iff
//! its density falls below the threshold. Maximises F1; ties go to the
//! lowest view index, then the smallest threshold. `densities` is
//! N_val x |views|; labels must contain both classes.
ViewThreshold select_view_and_threshold(const Eigen::MatrixXd& densities,
                                        const std::vector<int>& labels);

//! Auxiliary early-warning state: a density model over the per-timestep
//! encoder outputs y^E plus their normalisation, and the data-driven
//! default alert threshold (99th percentile of training deltas).
struct EarlyWarningModel {
  MrwpnModel density;
  LatentNorm norm;
  double default_alert_threshold = 0.0;
};

//! Fully fitted window-level detector.
struct DetectionModel {
  RecurrentAutoencoder autoencoder;
  MrwpnModel density;
  int view = -1;
  double threshold = std::numeric_limits<double>::quiet_NaN();
  double validation_f1 = 0.0;
  std::optional<EarlyWarningModel> early_warning;
};

//! Label plus the density score it was derived from.
struct Classification {
  int label = 0;  //!< 1 = anomaly
  double score = 0.0;
};

//! encode -> latent-normalise -> density at the selected view -> compare
//! against the threshold (anomaly iff score < threshold). The window must
//! already be input-normalised the same way the training data was.
Classification classify_window(const DetectionModel& model,
                               const Eigen::MatrixXd& window);

//! Rolling-mean monitor settings. A NaN alert_threshold means "use the
//! model's data-driven default"; otherwise it must be positive (+inf
//! disables alerts).
struct EarlyWarningConfig {
  int window = 5;
  double alert_threshold = std::numeric_limits<double>::quiet_NaN();
  double log_floor = 1e-12;
};

//! One monitored timestep.
struct EarlyWarningPoint {
  int t = 0;
  double delta = 0.0;
  bool alert = false;
};

//! Pure rolling-delta stage: smooths the series with a rolling mean of
//! size s and emits delta_t = |mean_t - mean_{t-s}| for t in [2s-1, L-1],
//! flagged when delta exceeds `threshold`. Requires L >= 2s.
std::vector<EarlyWarningPoint> rolling_delta_alerts(
    const std::vector<double>& series, int s, double threshold);

//! Full scan of one window.
struct EarlyWarningScan {
  std::vector<double> log_density;  //!< per-timestep log(max(p, floor))
  std::vector<EarlyWarningPoint> points;
  bool any_alert = false;
};

//! Per-timestep log-density of the window's encoder outputs under the
//! auxiliary model (at the detector's selected view), smoothed and
//! differenced as above. Requires a fitted early-warning model and a
//! window of at least 2s timesteps.
EarlyWarningScan early_warning_scan(const DetectionModel& model,
                                    const Eigen::MatrixXd& window,
                                    const EarlyWarningConfig& cfg);

//! Everything fit_pipeline needs beyond the data.
struct PipelineConfig {
  int resolution = 3;                            //!< lattice refinement j0
  SplineOrder order = SplineOrder::quadratic();  //!< spline order m
  std::vector<double> gammas = ReceptiveFieldSet::defaults().values();
  std::vector<int> encoder_sizes = {32, 4};
  std::vector<int> decoder_sizes = {4, 32};
  TrainConfig train;
  bool fit_early_warning = true;
  int early_warning_window = 5;
};

//! Trains the autoencoder on all-normal windows (early stop on
//! `val_normal`), streams the training latents through the density
//! model, scores val_normal (label 0) and val_anomal (label 1), and
//! selects the view/threshold. When requested and the windows are long
//! enough (L >= 2s), also fits the per-timestep early-warning model.
//! Pass `report` to receive the training trace.
DetectionModel fit_pipeline(const std::vector<Eigen::MatrixXd>& train,
                            const std::vector<Eigen::MatrixXd>& val_normal,
                            const std::vector<Eigen::MatrixXd>& val_anomal,
                            const PipelineConfig& config,
                            TrainReport* report = nullptr);

}  // namespace rwpnn
