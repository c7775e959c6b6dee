// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// gating criterion fails. Each check is self-contained and uses independent
// oracles (convolution quadrature, brute-force scans, finite differences)
// rather than the library's own formulas.

#include "rwpnn/autoencoder.hpp"
#include "rwpnn/bspline.hpp"
#include "rwpnn/dataset.hpp"
#include "rwpnn/detector.hpp"
#include "rwpnn/experiment.hpp"
#include "rwpnn/frame_grid.hpp"
#include "rwpnn/lstm.hpp"
#include "rwpnn/mrwpn.hpp"
#include "synthetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rwpnn;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

// ---------------------------------------------------------------- oracle 1
// N_m(x) via the convolution recursion, integrated piecewise with 8-point
// Gauss-Legendre (exact to machine precision for these low orders).
constexpr double kGaussNode[4] = {0.1834346424956498, 0.5255324099163290,
                                  0.7966664774136267, 0.9602898564975363};
constexpr double kGaussWeight[4] = {0.3626837833783620, 0.3137066458778873,
                                    0.2223810344533745, 0.1012285362903763};

double conv_oracle(int m, double x) {
  if (m == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
  std::vector<double> cuts{0.0, 1.0};
  for (int j = -m - 1; j <= m + 1; ++j) {
    const double c = x - static_cast<double>(j);
    if (c > 0.0 && c < 1.0) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double half = 0.5 * (cuts[i + 1] - cuts[i]);
    const double mid = 0.5 * (cuts[i + 1] + cuts[i]);
    for (int g = 0; g < 4; ++g) {
      total += half * kGaussWeight[g] *
               (conv_oracle(m - 1, x - (mid - half * kGaussNode[g])) +
                conv_oracle(m - 1, x - (mid + half * kGaussNode[g])));
    }
  }
  return total;
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst_conv = 0.0;
  for (int m : {2, 3, 4}) {
    const SplineOrder order = SplineOrder::of(m);
    for (int i = 0; i < 1000; ++i) {
      const double x = -1.0 + (m + 2.0) * i / 999.0;
      worst_conv =
          std::max(worst_conv, std::abs(bspline_eval(order, x) -
                                        conv_oracle(m, x)));
    }
  }
  double worst_unity = 0.0;
  std::mt19937_64 rng(20260814);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int m : {2, 3, 4}) {
    const SplineOrder order = SplineOrder::of(m);
    for (int i = 0; i < 1000; ++i) {
      const double x = dist(rng);
      double sum = 0.0;
      for (int k = static_cast<int>(std::floor(x)) - m - 1;
           k <= static_cast<int>(std::ceil(x)) + 1; ++k) {
        sum += bspline_eval(order, x - k);
      }
      worst_unity = std::max(worst_unity, std::abs(sum - 1.0));
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass =
      worst_conv <= 1e-6 && worst_unity <= 1e-12 && elapsed < 1.0;
  return {pass, "max |closed - conv oracle| = " + fmt(worst_conv) +
                    " (tol 1e-6), max |unity - 1| = " + fmt(worst_unity) +
                    " (tol 1e-12), " + fmt(elapsed) + " s (< 1 s)"};
}

// ---------------------------------------------------------------- oracle 2
std::vector<std::int64_t> brute_force_relevant(const FrameGrid& grid,
                                               const Eigen::VectorXd& x) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 0; b < grid.total_count(); ++b) {
    const std::vector<int> k = grid.translation(b);
    bool inside = true;
    for (int d = 0; d < grid.dim(); ++d) {
      if (!(grid.support_lo(k[d]) <= x[d] && x[d] <= grid.support_hi(k[d]))) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(b);
  }
  return out;
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> n_dist(1, 3);
  std::uniform_int_distribution<int> j_dist(1, 4);
  std::uniform_int_distribution<int> m_dist(2, 4);
  std::uniform_real_distribution<double> x_dist(-0.5, 1.5);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = n_dist(rng);
    const FrameGrid grid = build_grid(j_dist(rng), SplineOrder::of(m_dist(rng)), n);
    Eigen::VectorXd x(n);
    for (int d = 0; d < n; ++d) x[d] = x_dist(rng);
    if (grid.find_relevant_frames(x) != brute_force_relevant(grid, x)) {
      ++mismatches;
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass = mismatches == 0 && elapsed < 10.0;
  return {pass, std::to_string(mismatches) +
                    " mismatches in 1000 random configurations, " +
                    fmt(elapsed) + " s (< 10 s)"};
}

Outcome criterion3() {
  const FrameGrid grid = build_grid(2, SplineOrder::quadratic(), 1);
  const ReceptiveFieldSet gammas = ReceptiveFieldSet::defaults();
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<Eigen::VectorXd> stream;
  for (int i = 0; i < 500; ++i) {
    Eigen::VectorXd x(1);
    x[0] = dist(rng);
    stream.push_back(x);
  }
  MrwpnModel ensemble(grid, gammas);
  std::vector<MrwpnModel> singles;
  for (int i = 0; i < gammas.size(); ++i) {
    singles.emplace_back(grid, ReceptiveFieldSet({gammas[i]}));
  }
  for (const auto& x : stream) {
    ensemble.update_online(x);
    for (auto& s : singles) s.update_online(x);
  }
  const Eigen::MatrixXd w = ensemble.coefficients();
  long diffs = 0;
  for (int i = 0; i < gammas.size(); ++i) {
    const Eigen::MatrixXd wi = singles[static_cast<std::size_t>(i)].coefficients();
    for (Eigen::Index f = 0; f < w.rows(); ++f) {
      if (w(f, i) != wi(f, 0)) ++diffs;
    }
  }
  const bool helper = ensemble_equivalence_check(grid, gammas, stream);
  const bool pass = diffs == 0 && helper;
  return {pass, std::to_string(diffs) +
                    " coefficient(s) differ bitwise across 5 views x " +
                    std::to_string(w.rows()) + " frames"};
}

Outcome criterion4() {
  const FrameGrid grid = build_grid(2, SplineOrder::linear(), 1);
  double worst = 0.0;
  for (const double alpha : {1.0, 0.5, 0.01, 0.001}) {
    MrwpnModel model(grid, ReceptiveFieldSet({alpha}));
    std::mt19937_64 rng(7 + static_cast<std::uint64_t>(alpha * 1000));
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<Eigen::VectorXd> stream;
    Eigen::VectorXd direct = Eigen::VectorXd::Zero(grid.total_count());
    for (int t = 1; t <= 200; ++t) {
      Eigen::VectorXd x(1);
      x[0] = dist(rng);
      stream.push_back(x);
      model.update_online(x);
      direct.setZero();
      for (int s = 1; s <= t; ++s) {
        const double w = alpha * std::pow(1.0 - alpha, t - s);
        if (w == 0.0) continue;
        for (const std::int64_t b : grid.find_relevant_frames(stream[s - 1])) {
          direct[b] += w * grid.radial_frame_eval(b, stream[s - 1]);
        }
      }
      for (std::int64_t b = 0; b < grid.total_count(); ++b) {
        worst = std::max(worst, std::abs(model.coefficient(b, 0) - direct[b]));
      }
    }
  }
  return {worst <= 1e-10,
          "max |recursive - direct sum| = " + fmt(worst) + " (tol 1e-10)"};
}

Outcome criterion5() {
  const auto start = std::chrono::steady_clock::now();
  const FrameGrid grid = build_grid(3, SplineOrder::quadratic(), 1);
  const ReceptiveFieldSet gammas = ReceptiveFieldSet::defaults();
  const int view = gammas.size() - 1;  // alpha = 1/1000

  MrwpnModel normal_model(grid, gammas);
  std::mt19937_64 rng(314159);
  std::normal_distribution<double> gauss(0.5, 0.05);
  Eigen::VectorXd x(1);
  for (int i = 0; i < 10000; ++i) {
    x[0] = gauss(rng);
    normal_model.update_online(x);
  }
  x[0] = 0.5;
  const double at_mode = normal_model.estimate_density(x).per_view[view];
  x[0] = 0.95;
  const double at_tail = normal_model.estimate_density(x).per_view[view];

  MrwpnModel uniform_model(grid, gammas);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    x[0] = uni(rng);
    uniform_model.update_online(x);
  }
  double ise = 0.0;
  const int cells = 800;
  for (int i = 0; i < cells; ++i) {
    x[0] = 0.1 + 0.8 * (i + 0.5) / cells;
    const double p = uniform_model.estimate_density(x).per_view[view];
    ise += (p - 1.0) * (p - 1.0) * (0.8 / cells);
  }
  const double elapsed = seconds_since(start);
  const bool pass =
      at_mode >= 10.0 * at_tail && ise <= 0.05 && elapsed < 5.0;
  return {pass, "p(0.5) = " + fmt(at_mode) + " vs p(0.95) = " + fmt(at_tail) +
                    " (need 10x), uniform ISE = " + fmt(ise) +
                    " (tol 0.05), " + fmt(elapsed) + " s (< 5 s)"};
}

Outcome criterion6() {
  const FrameGrid grid = build_grid(3, SplineOrder::quadratic(), 2);
  const ReceptiveFieldSet gammas = ReceptiveFieldSet::defaults();
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<Eigen::VectorXd> queries;
  for (int i = 0; i < 200; ++i) {
    Eigen::VectorXd q(2);
    q << dist(rng), dist(rng);
    queries.push_back(q);
  }
  const auto feed = [&](MrwpnModel& model, int count) {
    Eigen::VectorXd x(2);
    for (int i = 0; i < count; ++i) {
      x << dist(rng), dist(rng);
      model.update_online(x);
    }
  };
  // One timed pass over the fixed query set; repeated, keeping the best of
  // five rounds to suppress scheduler noise.
  const auto measure = [&](const MrwpnModel& model) {
    double best = std::numeric_limits<double>::infinity();
    volatile double sink = 0.0;
    for (int round = 0; round < 5; ++round) {
      const auto start = std::chrono::steady_clock::now();
      for (int rep = 0; rep < 50; ++rep) {
        for (const auto& q : queries) {
          sink = sink + model.estimate_density(q).per_view[0];
        }
      }
      best = std::min(best, seconds_since(start));
    }
    return best;
  };

  MrwpnModel small(grid, gammas);
  feed(small, 100);
  MrwpnModel large(grid, gammas);
  feed(large, 100000);
  const double t_small = measure(small);
  const double t_large = measure(large);
  const double ratio = t_large / t_small;
  return {ratio <= 2.0, "latency after 1e5 updates = " + fmt(t_large * 1e3) +
                            " ms vs after 1e2 = " + fmt(t_small * 1e3) +
                            " ms per 10k queries; ratio " + fmt(ratio) +
                            " (tol 2)"};
}

// ---------------------------------------------------------------- oracle 7
struct SequenceLoss {
  std::vector<Eigen::VectorXd> inputs;
  std::vector<Eigen::VectorXd> probes;

  double value(const LstmLayerParams& params) const {
    const int hidden = static_cast<int>(params.hidden_size());
    Eigen::VectorXd h = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(hidden);
    double loss = 0.0;
    for (std::size_t t = 0; t < inputs.size(); ++t) {
      auto [h2, c2] = lstm_cell_forward(params, inputs[t], h, c);
      h = h2;
      c = c2;
      loss += probes[t].dot(h);
    }
    return loss;
  }
};

Outcome criterion7() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> in_dist(1, 4), hid_dist(1, 5),
      len_dist(1, 4);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int input = in_dist(rng), hidden = hid_dist(rng),
              steps = len_dist(rng);
    LstmLayerParams params = LstmLayerParams::random_init(input, hidden, rng);
    for (auto* b : {&params.b_f, &params.b_i, &params.b_C, &params.b_o}) {
      for (Eigen::Index i = 0; i < b->size(); ++i) (*b)[i] = 0.3 * val(rng);
    }
    SequenceLoss problem;
    for (int t = 0; t < steps; ++t) {
      Eigen::VectorXd xv(input), pv(hidden);
      for (Eigen::Index i = 0; i < xv.size(); ++i) xv[i] = val(rng);
      for (Eigen::Index i = 0; i < pv.size(); ++i) pv[i] = val(rng);
      problem.inputs.push_back(xv);
      problem.probes.push_back(pv);
    }
    // Analytic gradients through the cached forward + backward pass.
    Eigen::VectorXd h = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(hidden);
    std::vector<LstmStep> stepsv;
    for (const auto& xin : problem.inputs) {
      LstmStep st = lstm_cell_forward_cached(params, xin, h, c);
      h = st.h;
      c = st.c;
      stepsv.push_back(std::move(st));
    }
    LstmLayerGrads grads = LstmLayerGrads::zeros_like(params);
    Eigen::VectorXd dh = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd dc = Eigen::VectorXd::Zero(hidden);
    for (int t = static_cast<int>(problem.inputs.size()) - 1; t >= 0; --t) {
      Eigen::VectorXd dx, dh_prev, dc_prev;
      lstm_cell_backward(params, stepsv[static_cast<std::size_t>(t)],
                         Eigen::VectorXd(dh + problem.probes[t]), dc, grads,
                         dx, dh_prev, dc_prev);
      dh = dh_prev;
      dc = dc_prev;
    }
    // Central finite differences over every parameter slot.
    const double eps = 1e-5;
    const auto fd_block = [&](double* param, const double* grad,
                              Eigen::Index count) {
      for (Eigen::Index i = 0; i < count; ++i) {
        const double saved = param[i];
        param[i] = saved + eps;
        const double plus = problem.value(params);
        param[i] = saved - eps;
        const double minus = problem.value(params);
        param[i] = saved;
        const double fd = (plus - minus) / (2.0 * eps);
        const double scale = std::max({std::abs(fd), std::abs(grad[i]), 1e-8});
        worst = std::max(worst, std::abs(fd - grad[i]) / scale);
      }
    };
    fd_block(params.W_f.data(), grads.W_f.data(), params.W_f.size());
    fd_block(params.W_i.data(), grads.W_i.data(), params.W_i.size());
    fd_block(params.W_C.data(), grads.W_C.data(), params.W_C.size());
    fd_block(params.W_o.data(), grads.W_o.data(), params.W_o.size());
    fd_block(params.b_f.data(), grads.b_f.data(), params.b_f.size());
    fd_block(params.b_i.data(), grads.b_i.data(), params.b_i.size());
    fd_block(params.b_C.data(), grads.b_C.data(), params.b_C.size());
    fd_block(params.b_o.data(), grads.b_o.data(), params.b_o.size());
  }
  return {worst <= 1e-4, "max relative gradient error = " + fmt(worst) +
                             " over 20 random models (tol 1e-4)"};
}

PipelineConfig synthetic_pipeline_config() {
  PipelineConfig config;
  config.resolution = 2;
  config.order = SplineOrder::quadratic();
  config.encoder_sizes = {16, 8};
  config.decoder_sizes = {8, 16};
  config.train.learning_rate = 5e-3;
  config.train.max_epochs = 300;
  config.train.batch_size = 8;
  config.train.patience = 12;
  return config;
}

Outcome criterion8() {
  const auto start = std::chrono::steady_clock::now();
  const TimeSeriesDataset data = synthetic::corpus(200, 40, 64, 80886);

  ExperimentConfig config;
  config.split.holdout = 0.8;
  config.split.seed = 900;
  config.pipeline = synthetic_pipeline_config();
  config.pipeline.train.seed = 100;
  // The per-timestep early-warning fit is the dominant cost of fit_pipeline
  // and this criterion never scans windows, so it is skipped to stay inside
  // the runtime budget.
  config.pipeline.fit_early_warning = false;
  config.repeats = 5;

  const ExperimentReport clean = run_experiment(data, config);
  config.drift = DriftSpec{};  // fraction 0.3, mean 0.3, variance 0.2
  const ExperimentReport drifted = run_experiment(data, config);

  const double degradation = clean.mean_f1 - drifted.mean_f1;
  const double elapsed = seconds_since(start);
  const bool pass = clean.mean_f1 >= 0.90 && degradation <= 0.10 &&
                    elapsed < 300.0;
  return {pass, "mean F1 = " + fmt(clean.mean_f1) +
                    " (need >= 0.90), drifted mean F1 = " +
                    fmt(drifted.mean_f1) + ", degradation = " +
                    fmt(degradation) + " (tol 0.10), " + fmt(elapsed) +
                    " s (< 300 s)"};
}

Outcome criterion9() {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> n_dist(2, 60), v_dist(1, 3),
      dup_dist(0, 3);
  std::uniform_real_distribution<double> d_dist(0.0, 1.0);
  std::bernoulli_distribution label_dist(0.35);
  int beaten = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng), views = v_dist(rng);
    Eigen::MatrixXd densities(n, views);
    std::vector<int> labels(static_cast<std::size_t>(n));
    int anomalies = 0;
    for (int i = 0; i < n; ++i) {
      for (int v = 0; v < views; ++v) {
        densities(i, v) = (i > 0 && dup_dist(rng) == 0) ? densities(i - 1, v)
                                                        : d_dist(rng);
      }
      labels[static_cast<std::size_t>(i)] = label_dist(rng) ? 1 : 0;
      anomalies += labels[static_cast<std::size_t>(i)];
    }
    if (anomalies == 0) labels[0] = 1;
    if (anomalies == n) labels[0] = 0;

    const ViewThreshold vt = select_view_and_threshold(densities, labels);
    double rescan = 0.0;
    for (int v = 0; v < views; ++v) {
      std::vector<double> cuts = {-std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity()};
      for (int i = 0; i < n; ++i) {
        cuts.push_back(densities(i, v));
        cuts.push_back(std::nextafter(densities(i, v),
                                      std::numeric_limits<double>::infinity()));
        for (int j = 0; j < n; ++j) {
          cuts.push_back(0.5 * (densities(i, v) + densities(j, v)));
        }
      }
      for (const double beta : cuts) {
        int tp = 0, fp = 0, fn = 0;
        for (int i = 0; i < n; ++i) {
          const bool predicted = densities(i, v) < beta;
          const bool truth = labels[static_cast<std::size_t>(i)] == 1;
          if (predicted && truth) ++tp;
          if (predicted && !truth) ++fp;
          if (!predicted && truth) ++fn;
        }
        const double denom = 2.0 * tp + fp + fn;
        rescan = std::max(rescan, denom > 0 ? 2.0 * tp / denom : 0.0);
      }
    }
    if (rescan > vt.f1 + 1e-12) ++beaten;
  }
  return {beaten == 0, std::to_string(beaten) +
                           " of 100 rescans beat the selected threshold"};
}

Outcome criterion10() {
  const int s = 5;
  const int t0 = 30;
  std::vector<double> step(80, 0.0);
  for (int t = t0; t < 80; ++t) step[static_cast<std::size_t>(t)] = 1.0;
  int first_alert = -1;
  for (const auto& p : rolling_delta_alerts(step, s, 0.5)) {
    if (p.alert) {
      first_alert = p.t;
      break;
    }
  }
  int constant_alerts = 0;
  for (const auto& p : rolling_delta_alerts(std::vector<double>(60, 0.37), s,
                                            1e-9)) {
    constant_alerts += p.alert ? 1 : 0;
  }
  const bool pass = first_alert >= t0 && first_alert <= t0 + 2 * s &&
                    constant_alerts == 0;
  return {pass, "first alert at t = " + std::to_string(first_alert) +
                    " (need within [" + std::to_string(t0) + ", " +
                    std::to_string(t0 + 2 * s) + "]), " +
                    std::to_string(constant_alerts) +
                    " alert(s) on a constant series"};
}

// Non-gating: only runs when RWPNN_ITALY_CSV points at a labelled CSV of
// 24-step univariate windows (override the length with RWPNN_ITALY_LEN).
Outcome criterion11(bool& skipped) {
  const char* path = std::getenv("RWPNN_ITALY_CSV");
  if (path == nullptr) {
    skipped = true;
    return {true, "RWPNN_ITALY_CSV not set (optional real-data check)"};
  }
  skipped = false;
  const char* len_env = std::getenv("RWPNN_ITALY_LEN");
  CsvSchema schema{len_env ? std::atoi(len_env) : 24, 1};
  const TimeSeriesDataset raw = load_csv(path, schema);

  SplitSpec split;
  split.holdout = 0.2;
  split.seed = 42;
  Splits s = split_dataset(raw, split);
  const Normalization norm = fit_normalization(s.train);
  const auto normalise = [&](std::vector<Eigen::MatrixXd>& ws) {
    for (auto& w : ws) w = apply_normalization(norm, w);
  };
  normalise(s.train);
  normalise(s.val_normal);
  normalise(s.val_anomal);
  normalise(s.test.windows);

  PipelineConfig config = synthetic_pipeline_config();
  config.fit_early_warning = false;
  const DetectionModel model =
      fit_pipeline(s.train, s.val_normal, s.val_anomal, config);

  double normal_mean = 0.0, anomaly_mean = 0.0;
  int normals = 0, anomalies = 0;
  for (std::size_t i = 0; i < s.test.size(); ++i) {
    const double score = classify_window(model, s.test.windows[i]).score;
    if (s.test.labels[i] == 1) {
      anomaly_mean += score;
      ++anomalies;
    } else {
      normal_mean += score;
      ++normals;
    }
  }
  if (normals > 0) normal_mean /= normals;
  if (anomalies > 0) anomaly_mean /= anomalies;
  return {anomaly_mean < normal_mean,
          "mean anomaly density " + fmt(anomaly_mean) +
              " vs mean normal density " + fmt(normal_mean) +
              " over the test split"};
}

}  // namespace

int main() {
  int failures = 0;
  const auto run = [&](int id, Outcome (*fn)()) {
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << id
              << ": " << outcome.detail << "\n";
    std::cout.flush();
    if (!outcome.pass) ++failures;
  };

  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  run(9, criterion9);
  run(10, criterion10);

  bool skipped = false;
  Outcome real_data;
  try {
    real_data = criterion11(skipped);
  } catch (const std::exception& e) {
    real_data = {false, std::string("unexpected exception: ") + e.what()};
  }
  if (skipped) {
    std::cout << "SKIP criterion 11: " << real_data.detail << "\n";
  } else {
    // Non-gating by design: report the outcome without affecting the exit.
    std::cout << (real_data.pass ? "PASS" : "FAIL")
              << " criterion 11 (non-gating): " << real_data.detail << "\n";
  }

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all gating criteria passed\n";
  return 0;
}
