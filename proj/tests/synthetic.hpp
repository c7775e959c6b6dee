#pragma once

// Shared synthetic corpus for the detector tests and the acceptance gate:
// smooth single-cycle sine windows as the normal class, and sines whose
// waveform drops out into a noise-floor burst as the anomalous class.

#include "rwpnn/dataset.hpp"

#include <Eigen/Core>
#include <cmath>
#include <random>
#include <vector>

namespace rwpnn::synthetic {

inline Eigen::MatrixXd sine_window(int length, std::mt19937_64& rng,
                                   double noise_sd = 0.01) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::normal_distribution<double> jitter(0.0, noise_sd);
  Eigen::MatrixXd w(length, 1);
  const double p = phase(rng);
  for (int t = 0; t < length; ++t) {
    w(t, 0) =
        0.5 + 0.35 * std::sin(2.0 * M_PI * t / length + p) + jitter(rng);
  }
  return w;
}

inline Eigen::MatrixXd burst_window(int length, std::mt19937_64& rng,
                                    double burst_sd = 0.02) {
  Eigen::MatrixXd w = sine_window(length, rng);
  // The waveform drops out into a quiet noise floor for the whole window.
  std::normal_distribution<double> burst(0.0, burst_sd);
  for (int t = 0; t < length; ++t) w(t, 0) = 0.5 + burst(rng);
  return w;
}

//! Labelled corpus: `n_normal` sine windows (label 0) followed by
//! `n_anomal` burst windows (label 1).
inline TimeSeriesDataset corpus(int n_normal, int n_anomal, int length,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TimeSeriesDataset data;
  for (int i = 0; i < n_normal; ++i) {
    data.windows.push_back(sine_window(length, rng));
    data.labels.push_back(0);
  }
  for (int i = 0; i < n_anomal; ++i) {
    data.windows.push_back(burst_window(length, rng));
    data.labels.push_back(1);
  }
  return data;
}

}  // namespace rwpnn::synthetic
