//! Python bindings for the core operations: spline/frame evaluation, the
//! online density ensemble, the recurrent autoencoder, the detection
//! pipeline, and the dataset/evaluation helpers.

#include "rwpnn/bspline.hpp"
#include "rwpnn/dataset.hpp"
#include "rwpnn/detector.hpp"
#include "rwpnn/experiment.hpp"
#include "rwpnn/frame_grid.hpp"
#include "rwpnn/mrwpn.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rwpnn;

namespace {

FrameGrid make_grid(int resolution, int order, int dim) {
  return build_grid(resolution, SplineOrder::of(order), dim);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Time-series anomaly detection: B-spline frame lattice, online "
      "multi-receptive-field density ensemble, recurrent autoencoder, "
      "and the detection pipeline";

  py::register_exception<ContractViolation>(m, "ContractViolation",
                                            PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_RuntimeError);

  m.def("bspline_eval",
        [](int order, double x) {
          return bspline_eval(SplineOrder::of(order), x);
        },
        py::arg("order"), py::arg("x"),
        "Centralised cardinal B-spline N_m on [0, m)");

  py::class_<FrameGrid>(m, "FrameGrid")
      .def(py::init(&make_grid), py::arg("resolution"), py::arg("order"),
           py::arg("dim"))
      .def_property_readonly("resolution", &FrameGrid::resolution)
      .def_property_readonly("order",
                             [](const FrameGrid& g) { return g.order().m(); })
      .def_property_readonly("dim", &FrameGrid::dim)
      .def_property_readonly("per_dim_count", &FrameGrid::per_dim_count)
      .def_property_readonly("total_count", &FrameGrid::total_count)
      .def_property_readonly("min_k", &FrameGrid::min_k)
      .def_property_readonly("max_k", &FrameGrid::max_k)
      .def("translation", &FrameGrid::translation, py::arg("flat_index"))
      .def("flat_index", &FrameGrid::flat_index, py::arg("translation"))
      .def("support_lo", &FrameGrid::support_lo, py::arg("k"))
      .def("support_hi", &FrameGrid::support_hi, py::arg("k"))
      .def("radial_frame_eval", &FrameGrid::radial_frame_eval,
           py::arg("flat_index"), py::arg("x"))
      .def("find_relevant_frames", &FrameGrid::find_relevant_frames,
           py::arg("x"));

  py::class_<DensityEstimate>(m, "DensityEstimate")
      .def_readonly("per_view", &DensityEstimate::per_view)
      .def_readonly("relevant_count", &DensityEstimate::relevant_count);

  py::class_<MrwpnModel>(m, "MrwpnModel")
      .def(py::init([](const FrameGrid& grid, std::vector<double> gammas) {
             return MrwpnModel(grid, ReceptiveFieldSet(std::move(gammas)));
           }),
           py::arg("grid"),
           py::arg("gammas") = ReceptiveFieldSet::defaults().values())
      .def("update_online", &MrwpnModel::update_online, py::arg("x"))
      .def("estimate_density", &MrwpnModel::estimate_density, py::arg("x"))
      .def("coefficients", &MrwpnModel::coefficients)
      .def_property_readonly("points_seen", &MrwpnModel::points_seen)
      .def_property_readonly(
          "gammas",
          [](const MrwpnModel& m_) { return m_.gammas().values(); })
      .def("save",
           [](const MrwpnModel& m_, const std::string& p) { m_.save(p); },
           py::arg("path"))
      .def_static(
          "load",
          [](const std::string& p) { return MrwpnModel::load(p); },
          py::arg("path"));

  m.def("update_batch", &update_batch, py::arg("grid"), py::arg("data"),
        "Batch coefficient estimate (1/N) sum Phi(X_i)");
  m.def("batch_density", &batch_density, py::arg("grid"), py::arg("coeffs"),
        py::arg("x"));

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("max_epochs", &TrainConfig::max_epochs)
      .def_readwrite("batch_size", &TrainConfig::batch_size)
      .def_readwrite("patience", &TrainConfig::patience)
      .def_readwrite("seed", &TrainConfig::seed);

  py::class_<EpochRecord>(m, "EpochRecord")
      .def_readonly("epoch", &EpochRecord::epoch)
      .def_readonly("train_mae", &EpochRecord::train_mae)
      .def_readonly("val_mae", &EpochRecord::val_mae);

  py::class_<TrainReport>(m, "TrainReport")
      .def_readonly("epochs", &TrainReport::epochs)
      .def_readonly("best_epoch", &TrainReport::best_epoch)
      .def_readonly("best_val_mae", &TrainReport::best_val_mae)
      .def_readonly("stopped_early", &TrainReport::stopped_early);

  py::class_<EncodeResult>(m, "EncodeResult")
      .def_readonly("latent", &EncodeResult::latent)
      .def_readonly("sequence", &EncodeResult::sequence);

  py::class_<RecurrentAutoencoder>(m, "RecurrentAutoencoder")
      .def(py::init<int, int, std::vector<int>, std::vector<int>,
                    std::uint64_t>(),
           py::arg("input_dim"), py::arg("window_length"),
           py::arg("encoder_sizes"), py::arg("decoder_sizes"),
           py::arg("seed") = 42)
      .def_property_readonly("input_dim", &RecurrentAutoencoder::input_dim)
      .def_property_readonly("window_length",
                             &RecurrentAutoencoder::window_length)
      .def_property_readonly("latent_dim", &RecurrentAutoencoder::latent_dim)
      .def("encode", &RecurrentAutoencoder::encode, py::arg("window"))
      .def("decode", &RecurrentAutoencoder::decode, py::arg("latent"),
           py::arg("length"))
      .def("reconstruct", &RecurrentAutoencoder::reconstruct,
           py::arg("window"))
      .def("reconstruction_mae", &RecurrentAutoencoder::reconstruction_mae,
           py::arg("window"))
      .def("train", &RecurrentAutoencoder::train, py::arg("train_windows"),
           py::arg("val_windows"), py::arg("config") = TrainConfig())
      .def("latent_normalize", &RecurrentAutoencoder::latent_normalize,
           py::arg("window"))
      .def("save",
           [](const RecurrentAutoencoder& a, const std::string& p) {
             a.save(p);
           },
           py::arg("path"))
      .def_static(
          "load",
          [](const std::string& p) { return RecurrentAutoencoder::load(p); },
          py::arg("path"));

  py::class_<ViewThreshold>(m, "ViewThreshold")
      .def_readonly("view", &ViewThreshold::view)
      .def_readonly("threshold", &ViewThreshold::threshold)
      .def_readonly("f1", &ViewThreshold::f1);

  m.def("select_view_and_threshold", &select_view_and_threshold,
        py::arg("densities"), py::arg("labels"));

  py::class_<EarlyWarningPoint>(m, "EarlyWarningPoint")
      .def_readonly("t", &EarlyWarningPoint::t)
      .def_readonly("delta", &EarlyWarningPoint::delta)
      .def_readonly("alert", &EarlyWarningPoint::alert);

  m.def("rolling_delta_alerts", &rolling_delta_alerts, py::arg("series"),
        py::arg("window"), py::arg("threshold"));

  py::class_<EarlyWarningScan>(m, "EarlyWarningScan")
      .def_readonly("log_density", &EarlyWarningScan::log_density)
      .def_readonly("points", &EarlyWarningScan::points)
      .def_readonly("any_alert", &EarlyWarningScan::any_alert);

  py::class_<Classification>(m, "Classification")
      .def_readonly("label", &Classification::label)
      .def_readonly("score", &Classification::score);

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("resolution", &PipelineConfig::resolution)
      .def_property(
          "order",
          [](const PipelineConfig& c) { return c.order.m(); },
          [](PipelineConfig& c, int order) {
            c.order = SplineOrder::of(order);
          })
      .def_readwrite("gammas", &PipelineConfig::gammas)
      .def_readwrite("encoder_sizes", &PipelineConfig::encoder_sizes)
      .def_readwrite("decoder_sizes", &PipelineConfig::decoder_sizes)
      .def_readwrite("train", &PipelineConfig::train)
      .def_readwrite("fit_early_warning", &PipelineConfig::fit_early_warning)
      .def_readwrite("early_warning_window",
                     &PipelineConfig::early_warning_window);

  py::class_<DetectionModel>(m, "DetectionModel")
      .def_readonly("view", &DetectionModel::view)
      .def_readonly("threshold", &DetectionModel::threshold)
      .def_readonly("validation_f1", &DetectionModel::validation_f1)
      .def("classify",
           [](const DetectionModel& model, const Eigen::MatrixXd& window) {
             return classify_window(model, window);
           },
           py::arg("window"))
      .def("early_warning_scan",
           [](const DetectionModel& model, const Eigen::MatrixXd& window,
              int s, double alert_threshold, double log_floor) {
             EarlyWarningConfig cfg;
             cfg.window = s;
             cfg.alert_threshold = alert_threshold;
             cfg.log_floor = log_floor;
             return early_warning_scan(model, window, cfg);
           },
           py::arg("window"), py::arg("s") = 5,
           py::arg("alert_threshold") =
               std::numeric_limits<double>::quiet_NaN(),
           py::arg("log_floor") = 1e-12);

  m.def("fit_pipeline",
        [](const std::vector<Eigen::MatrixXd>& train,
           const std::vector<Eigen::MatrixXd>& val_normal,
           const std::vector<Eigen::MatrixXd>& val_anomal,
           const PipelineConfig& config) {
          return fit_pipeline(train, val_normal, val_anomal, config);
        },
        py::arg("train"), py::arg("val_normal"), py::arg("val_anomal"),
        py::arg("config") = PipelineConfig());

  // Dataset / evaluation helpers.
  py::class_<TimeSeriesDataset>(m, "TimeSeriesDataset")
      .def(py::init<>())
      .def_readwrite("windows", &TimeSeriesDataset::windows)
      .def_readwrite("labels", &TimeSeriesDataset::labels)
      .def("__len__", &TimeSeriesDataset::size);

  m.def("load_csv",
        [](const std::string& path, int window_length, int channels) {
          return load_csv(path, CsvSchema{window_length, channels});
        },
        py::arg("path"), py::arg("window_length"), py::arg("channels"));
  m.def("save_csv", &save_csv, py::arg("path"), py::arg("dataset"));

  py::class_<Normalization>(m, "Normalization")
      .def_readonly("min", &Normalization::min)
      .def_readonly("max", &Normalization::max);

  m.def("fit_normalization", &fit_normalization, py::arg("windows"));
  m.def("apply_normalization", &apply_normalization, py::arg("norm"),
        py::arg("window"));

  py::class_<Splits>(m, "Splits")
      .def_readonly("train", &Splits::train)
      .def_readonly("val_normal", &Splits::val_normal)
      .def_readonly("val_anomal", &Splits::val_anomal)
      .def_readonly("test", &Splits::test);

  m.def("split_dataset",
        [](const TimeSeriesDataset& dataset, double holdout,
           std::uint64_t seed) {
          return split_dataset(dataset, SplitSpec{holdout, seed});
        },
        py::arg("dataset"), py::arg("holdout") = 0.2, py::arg("seed") = 42);

  m.def("inject_drift",
        [](std::vector<Eigen::MatrixXd> windows, double fraction, double mean,
           double variance, std::uint64_t seed) {
          DriftSpec spec{fraction, mean, variance, seed};
          const std::vector<std::size_t> ids = inject_drift(windows, spec);
          return py::make_tuple(windows, ids);
        },
        py::arg("windows"), py::arg("fraction") = 0.3, py::arg("mean") = 0.3,
        py::arg("variance") = 0.2, py::arg("seed") = 7,
        "Returns (drifted windows, affected indices)");

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("tp", &Metrics::tp)
      .def_readonly("fp", &Metrics::fp)
      .def_readonly("tn", &Metrics::tn)
      .def_readonly("fn", &Metrics::fn)
      .def_readonly("precision", &Metrics::precision)
      .def_readonly("recall", &Metrics::recall)
      .def_readonly("f1", &Metrics::f1);

  m.def("compute_metrics", &compute_metrics, py::arg("predicted"),
        py::arg("actual"));
}
