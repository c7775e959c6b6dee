//! Command-line front end: train a detector, run detection, sweep
//! hyper-parameters, and monitor windows for early-warning precursors.
//!
//! Exit codes: 0 success, 1 unexpected error, 2 missing/unreadable input
//! file, 3 training divergence, 64 usage error, 65 invalid configuration.

#include "rwpnn/binary_io.hpp"
#include "rwpnn/dataset.hpp"
#include "rwpnn/detector.hpp"
#include "rwpnn/experiment.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMissingFile = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) {
    throw ConfigError(where + " must be a JSON object");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

//! Whole-file replace via temp + rename so readers never see a torn file.
void atomic_write_text(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw rwpnn::FileError("cannot open file for writing: " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      throw rwpnn::FileError("failed while writing: " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

struct RunConfig {
  std::string dataset_path;
  rwpnn::CsvSchema schema;
  rwpnn::SplitSpec split;
  std::optional<rwpnn::DriftSpec> drift;
  rwpnn::PipelineConfig pipeline;
  fs::path output_dir = "out";
  // benchmark grid (only used by the benchmark command)
  std::vector<int> bench_resolutions;
  std::vector<int> bench_orders;
  int bench_repeats = 10;
  bool has_benchmark = false;
};

rwpnn::DriftSpec parse_drift(const json& j) {
  check_keys(j, "drift", {"fraction", "mean", "variance", "seed"});
  rwpnn::DriftSpec spec;
  spec.fraction = j.value("fraction", spec.fraction);
  spec.mean = j.value("mean", spec.mean);
  spec.variance = j.value("variance", spec.variance);
  spec.seed = j.value("seed", spec.seed);
  return spec;
}

RunConfig parse_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw rwpnn::FileError("cannot open config file: " + path.string());
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }

  try {
    check_keys(root, "config root",
               {"schema_version", "dataset", "split", "drift", "grid",
                "autoencoder", "early_warning", "benchmark", "output_dir"});
    if (!root.contains("schema_version") ||
        !root["schema_version"].is_number_integer() ||
        root["schema_version"].get<int>() != 1) {
      throw ConfigError("config must declare \"schema_version\": 1");
    }

    RunConfig cfg;
    if (!root.contains("dataset")) {
      throw ConfigError("config must declare a \"dataset\" section");
    }
    const json& ds = root["dataset"];
    check_keys(ds, "dataset", {"path", "window_length", "channels"});
    cfg.dataset_path = ds.at("path").get<std::string>();
    cfg.schema.window_length = ds.at("window_length").get<int>();
    cfg.schema.channels = ds.at("channels").get<int>();

    if (root.contains("split")) {
      const json& sp = root["split"];
      check_keys(sp, "split", {"holdout", "seed"});
      cfg.split.holdout = sp.value("holdout", cfg.split.holdout);
      cfg.split.seed = sp.value("seed", cfg.split.seed);
    }
    if (root.contains("drift")) {
      cfg.drift = parse_drift(root["drift"]);
    }
    if (root.contains("grid")) {
      const json& gr = root["grid"];
      check_keys(gr, "grid", {"resolution", "order", "gammas"});
      cfg.pipeline.resolution = gr.value("resolution", cfg.pipeline.resolution);
      if (gr.contains("order")) {
        cfg.pipeline.order = rwpnn::SplineOrder::of(gr["order"].get<int>());
      }
      if (gr.contains("gammas")) {
        cfg.pipeline.gammas = gr["gammas"].get<std::vector<double>>();
      }
    }
    if (root.contains("autoencoder")) {
      const json& ae = root["autoencoder"];
      check_keys(ae, "autoencoder",
                 {"encoder", "decoder", "learning_rate", "max_epochs",
                  "batch_size", "patience", "seed"});
      if (ae.contains("encoder")) {
        cfg.pipeline.encoder_sizes = ae["encoder"].get<std::vector<int>>();
      }
      if (ae.contains("decoder")) {
        cfg.pipeline.decoder_sizes = ae["decoder"].get<std::vector<int>>();
      }
      rwpnn::TrainConfig& tr = cfg.pipeline.train;
      tr.learning_rate = ae.value("learning_rate", tr.learning_rate);
      tr.max_epochs = ae.value("max_epochs", tr.max_epochs);
      tr.batch_size = ae.value("batch_size", tr.batch_size);
      tr.patience = ae.value("patience", tr.patience);
      tr.seed = ae.value("seed", tr.seed);
    }
    if (root.contains("early_warning")) {
      const json& ew = root["early_warning"];
      check_keys(ew, "early_warning", {"enabled", "window"});
      cfg.pipeline.fit_early_warning =
          ew.value("enabled", cfg.pipeline.fit_early_warning);
      cfg.pipeline.early_warning_window =
          ew.value("window", cfg.pipeline.early_warning_window);
    }
    if (root.contains("benchmark")) {
      const json& be = root["benchmark"];
      check_keys(be, "benchmark", {"resolutions", "orders", "repeats"});
      cfg.bench_resolutions = be.at("resolutions").get<std::vector<int>>();
      cfg.bench_orders = be.at("orders").get<std::vector<int>>();
      cfg.bench_repeats = be.value("repeats", cfg.bench_repeats);
      cfg.has_benchmark = true;
    }
    if (root.contains("output_dir")) {
      cfg.output_dir = root["output_dir"].get<std::string>();
    }

    // Validate eagerly so bad values surface as config errors.
    cfg.pipeline.train.validate();
    rwpnn::ReceptiveFieldSet probe(cfg.pipeline.gammas);
    if (cfg.pipeline.resolution < 1) {
      throw ConfigError("grid.resolution must be >= 1");
    }
    if (cfg.schema.window_length < 1 || cfg.schema.channels < 1) {
      throw ConfigError("dataset window_length and channels must be >= 1");
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError("config field has the wrong type: " +
                      std::string(e.what()));
  } catch (const rwpnn::ContractViolation& e) {
    throw ConfigError(e.what());
  }
}

rwpnn::TimeSeriesDataset load_dataset(const RunConfig& cfg) {
  if (!fs::exists(cfg.dataset_path)) {
    throw rwpnn::FileError("dataset file does not exist: " + cfg.dataset_path);
  }
  return rwpnn::load_csv(cfg.dataset_path, cfg.schema);
}

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd json_to_vector(const json& arr) {
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

//! Everything cmd_detect / cmd_earlywarn need from a model directory.
struct LoadedModel {
  rwpnn::DetectionModel model;
  rwpnn::Normalization input_norm;
  rwpnn::CsvSchema schema;
  int early_warning_window = 5;
};

void require_file(const fs::path& p) {
  if (!fs::exists(p)) {
    throw rwpnn::FileError("model file does not exist: " + p.string());
  }
}

LoadedModel load_model_dir(const fs::path& dir) {
  const fs::path meta_path = dir / "detector.json";
  require_file(meta_path);
  require_file(dir / "autoencoder.bin");
  require_file(dir / "mrwpn.bin");

  std::ifstream meta_in(meta_path);
  json meta;
  try {
    meta = json::parse(meta_in);
  } catch (const json::parse_error& e) {
    throw ConfigError("detector.json is not valid JSON: " +
                      std::string(e.what()));
  }

  try {
    const json& thr = meta.at("threshold");
    double threshold;
    if (thr.is_string()) {
      const std::string s = thr.get<std::string>();
      if (s != "+inf" && s != "-inf") {
        throw ConfigError("detector.json threshold must be a number or +-inf");
      }
      threshold = s == "+inf" ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
    } else {
      threshold = thr.get<double>();
    }
    rwpnn::DetectionModel model{
        rwpnn::RecurrentAutoencoder::load((dir / "autoencoder.bin").string()),
        rwpnn::MrwpnModel::load(dir / "mrwpn.bin"),
        meta.at("view").get<int>(),
        threshold,
        meta.value("validation_f1", 0.0),
        {},
    };
    LoadedModel out{std::move(model), {}, {}, 5};
    out.schema.window_length = meta.at("window_length").get<int>();
    out.schema.channels = meta.at("channels").get<int>();
    out.input_norm.min = json_to_vector(meta.at("input_norm").at("min"));
    out.input_norm.max = json_to_vector(meta.at("input_norm").at("max"));
    if (meta.contains("early_warning") && !meta["early_warning"].is_null()) {
      const json& ew = meta["early_warning"];
      require_file(dir / "earlywarn.bin");
      rwpnn::EarlyWarningModel ew_model{
          rwpnn::MrwpnModel::load(dir / "earlywarn.bin"),
          {},
          ew.at("default_alert_threshold").get<double>(),
      };
      ew_model.norm.min = json_to_vector(ew.at("norm").at("min"));
      ew_model.norm.max = json_to_vector(ew.at("norm").at("max"));
      out.early_warning_window = ew.value("window", 5);
      out.model.early_warning = std::move(ew_model);
    }
    return out;
  } catch (const json::exception& e) {
    throw ConfigError("detector.json is missing fields: " +
                      std::string(e.what()));
  }
}

json threshold_to_json(double threshold) {
  // +-inf sentinels are legal thresholds but not legal JSON numbers.
  if (std::isinf(threshold)) {
    return threshold > 0 ? json("+inf") : json("-inf");
  }
  return json(threshold);
}

int cmd_train(const fs::path& config_path) {
  const RunConfig cfg = parse_config(config_path);
  rwpnn::TimeSeriesDataset dataset = load_dataset(cfg);

  rwpnn::Splits splits = rwpnn::split_dataset(dataset, cfg.split);
  const rwpnn::Normalization norm = rwpnn::fit_normalization(splits.train);
  for (auto* part : {&splits.train, &splits.val_normal, &splits.val_anomal}) {
    for (Eigen::MatrixXd& w : *part) w = rwpnn::apply_normalization(norm, w);
  }

  rwpnn::TrainReport report;
  const rwpnn::DetectionModel model =
      rwpnn::fit_pipeline(splits.train, splits.val_normal, splits.val_anomal,
                          cfg.pipeline, &report);

  fs::create_directories(cfg.output_dir);
  model.autoencoder.save((cfg.output_dir / "autoencoder.bin").string());
  model.density.save(cfg.output_dir / "mrwpn.bin");

  json meta;
  meta["schema_version"] = 1;
  meta["view"] = model.view;
  meta["threshold"] = threshold_to_json(model.threshold);
  meta["validation_f1"] = model.validation_f1;
  meta["gammas"] = cfg.pipeline.gammas;
  meta["resolution"] = cfg.pipeline.resolution;
  meta["order"] = cfg.pipeline.order.m();
  meta["window_length"] = cfg.schema.window_length;
  meta["channels"] = cfg.schema.channels;
  meta["input_norm"] = {{"min", vector_to_json(norm.min)},
                        {"max", vector_to_json(norm.max)}};
  if (model.early_warning.has_value()) {
    const rwpnn::EarlyWarningModel& ew = *model.early_warning;
    ew.density.save(cfg.output_dir / "earlywarn.bin");
    meta["early_warning"] = {
        {"default_alert_threshold", ew.default_alert_threshold},
        {"window", cfg.pipeline.early_warning_window},
        {"norm",
         {{"min", vector_to_json(ew.norm.min)},
          {"max", vector_to_json(ew.norm.max)}}},
    };
  } else {
    meta["early_warning"] = nullptr;
  }
  atomic_write_text(cfg.output_dir / "detector.json", meta.dump(2) + "\n");

  std::ostringstream trace;
  report.write_ndjson(trace);
  atomic_write_text(cfg.output_dir / "train_report.ndjson", trace.str());

  std::cout << "trained on " << splits.train.size() << " windows; view "
            << model.view << ", threshold " << model.threshold
            << ", validation F1 " << model.validation_f1 << "\n"
            << "artifacts written to " << cfg.output_dir.string() << "\n";
  return kExitOk;
}

int cmd_detect(const fs::path& model_dir, const fs::path& data_path,
               bool drift, std::uint64_t drift_seed,
               const std::string& out_dir_opt) {
  const LoadedModel loaded = load_model_dir(model_dir);
  if (!fs::exists(data_path)) {
    throw rwpnn::FileError("dataset file does not exist: " +
                           data_path.string());
  }
  rwpnn::TimeSeriesDataset data =
      rwpnn::load_csv(data_path.string(), loaded.schema);
  for (Eigen::MatrixXd& w : data.windows) {
    w = rwpnn::apply_normalization(loaded.input_norm, w);
  }
  if (drift) {
    rwpnn::DriftSpec spec;  // paper defaults: 0.3 / mean 0.3 / variance 0.2
    spec.seed = drift_seed;
    rwpnn::inject_drift(data.windows, spec);
  }

  const fs::path out_dir =
      out_dir_opt.empty() ? model_dir : fs::path(out_dir_opt);
  fs::create_directories(out_dir);

  std::ostringstream records;
  std::vector<int> predicted;
  predicted.reserve(data.size());
  for (std::size_t i = 0; i < data.windows.size(); ++i) {
    const rwpnn::Classification c =
        rwpnn::classify_window(loaded.model, data.windows[i]);
    predicted.push_back(c.label);
    records << "{\"window_id\":" << i << ",\"score\":" << c.score
            << ",\"label\":" << c.label
            << ",\"view_index\":" << loaded.model.view << ",\"threshold\":"
            << threshold_to_json(loaded.model.threshold).dump() << "}\n";
  }
  atomic_write_text(out_dir / "detections.ndjson", records.str());

  const rwpnn::Metrics m = rwpnn::compute_metrics(predicted, data.labels);
  json metrics = {{"precision", m.precision}, {"recall", m.recall},
                  {"f1", m.f1},               {"tp", m.tp},
                  {"fp", m.fp},               {"tn", m.tn},
                  {"fn", m.fn}};
  atomic_write_text(out_dir / "metrics.json", metrics.dump(2) + "\n");

  std::cout << "classified " << data.size() << " windows: precision "
            << m.precision << ", recall " << m.recall << ", f1 " << m.f1
            << "\n"
            << "records written to " << (out_dir / "detections.ndjson").string()
            << "\n";
  return kExitOk;
}

std::string cell_hash(const RunConfig& cfg, int resolution, int order) {
  std::ostringstream key;
  key << cfg.dataset_path << '|' << cfg.schema.window_length << '|'
      << cfg.schema.channels << '|' << cfg.split.holdout << '|'
      << cfg.split.seed << '|' << resolution << '|' << order << '|';
  for (double g : cfg.pipeline.gammas) key << g << ',';
  key << '|';
  for (int s : cfg.pipeline.encoder_sizes) key << s << ',';
  key << '|' << cfg.bench_repeats << '|' << cfg.drift.has_value();
  const std::string s = key.str();
  std::ostringstream hex;
  hex << std::hex << rwpnn::io::fnv1a64(s.data(), s.size());
  return hex.str();
}

int cmd_benchmark(const fs::path& config_path) {
  const RunConfig cfg = parse_config(config_path);
  if (!cfg.has_benchmark) {
    throw ConfigError("benchmark command needs a \"benchmark\" config section");
  }
  rwpnn::TimeSeriesDataset dataset = load_dataset(cfg);
  fs::create_directories(cfg.output_dir);
  const fs::path report_path = cfg.output_dir / "benchmark.ndjson";

  // Resume support: cells already present (by hash) are not recomputed.
  std::vector<json> rows;
  std::set<std::string> done;
  if (fs::exists(report_path)) {
    std::ifstream in(report_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json row = json::parse(line, nullptr, false);
      if (row.is_discarded() || !row.contains("hash")) continue;
      done.insert(row["hash"].get<std::string>());
      rows.push_back(std::move(row));
    }
  }

  const auto flush_rows = [&]() {
    std::ostringstream out;
    for (const json& row : rows) out << row.dump() << "\n";
    atomic_write_text(report_path, out.str());
  };

  for (int resolution : cfg.bench_resolutions) {
    for (int order : cfg.bench_orders) {
      const std::string hash = cell_hash(cfg, resolution, order);
      if (done.count(hash) != 0) {
        std::cout << "cell j0=" << resolution << " m=" << order
                  << " already done, skipping\n";
        continue;
      }
      rwpnn::ExperimentConfig exp;
      exp.split = cfg.split;
      exp.pipeline = cfg.pipeline;
      exp.pipeline.resolution = resolution;
      exp.pipeline.order = rwpnn::SplineOrder::of(order);
      exp.repeats = cfg.bench_repeats;
      exp.drift = cfg.drift;
      const rwpnn::ExperimentReport report =
          rwpnn::run_experiment(dataset, exp);

      json row = {{"hash", hash},
                  {"resolution", resolution},
                  {"order", order},
                  {"repeats", exp.repeats},
                  {"mean_precision", report.mean_precision},
                  {"mean_recall", report.mean_recall},
                  {"mean_f1", report.mean_f1},
                  {"std_f1", report.std_f1}};
      rows.push_back(std::move(row));
      flush_rows();
      std::cout << "cell j0=" << resolution << " m=" << order << ": mean f1 "
                << report.mean_f1 << " (std " << report.std_f1 << ")\n";
    }
  }

  // Best cell: highest mean F1, ties to the smaller lattice resolution,
  // then the smaller order.
  const json* best = nullptr;
  for (const json& row : rows) {
    if (best == nullptr) {
      best = &row;
      continue;
    }
    const double f1 = row["mean_f1"].get<double>();
    const double best_f1 = (*best)["mean_f1"].get<double>();
    const auto key = [](const json& r) {
      return std::make_pair(r["resolution"].get<int>(),
                            r["order"].get<int>());
    };
    if (f1 > best_f1 || (f1 == best_f1 && key(row) < key(*best))) {
      best = &row;
    }
  }
  if (best != nullptr) {
    atomic_write_text(cfg.output_dir / "best_cell.json",
                      best->dump(2) + "\n");
    std::cout << "best cell: j0=" << (*best)["resolution"]
              << " m=" << (*best)["order"] << " mean f1 "
              << (*best)["mean_f1"] << "\n";
  }
  return kExitOk;
}

int cmd_earlywarn(const fs::path& model_dir, const fs::path& data_path,
                  int window_override, double delta_override,
                  const std::string& out_dir_opt) {
  const LoadedModel loaded = load_model_dir(model_dir);
  if (!loaded.model.early_warning.has_value()) {
    throw ConfigError(
        "model was trained without early-warning state; retrain with "
        "early_warning.enabled = true");
  }
  if (!fs::exists(data_path)) {
    throw rwpnn::FileError("dataset file does not exist: " +
                           data_path.string());
  }
  rwpnn::TimeSeriesDataset data =
      rwpnn::load_csv(data_path.string(), loaded.schema);
  for (Eigen::MatrixXd& w : data.windows) {
    w = rwpnn::apply_normalization(loaded.input_norm, w);
  }

  rwpnn::EarlyWarningConfig scan_cfg;
  scan_cfg.window =
      window_override > 0 ? window_override : loaded.early_warning_window;
  if (!std::isnan(delta_override)) scan_cfg.alert_threshold = delta_override;

  const fs::path out_dir =
      out_dir_opt.empty() ? model_dir : fs::path(out_dir_opt);
  fs::create_directories(out_dir);

  std::ostringstream trace, alerts;
  std::size_t alert_count = 0;
  for (std::size_t i = 0; i < data.windows.size(); ++i) {
    const rwpnn::EarlyWarningScan scan =
        rwpnn::early_warning_scan(loaded.model, data.windows[i], scan_cfg);
    for (std::size_t t = 0; t < scan.log_density.size(); ++t) {
      trace << "{\"window_id\":" << i << ",\"t\":" << t
            << ",\"log_density\":" << scan.log_density[t] << "}\n";
    }
    for (const rwpnn::EarlyWarningPoint& p : scan.points) {
      alerts << "{\"window_id\":" << i << ",\"t\":" << p.t
             << ",\"delta\":" << p.delta
             << ",\"alert\":" << (p.alert ? "true" : "false") << "}\n";
      alert_count += p.alert ? 1 : 0;
    }
  }
  atomic_write_text(out_dir / "earlywarn_trace.ndjson", trace.str());
  atomic_write_text(out_dir / "earlywarn_alerts.ndjson", alerts.str());

  std::cout << "scanned " << data.size() << " windows, " << alert_count
            << " alert points\n"
            << "trace written to "
            << (out_dir / "earlywarn_trace.ndjson").string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Time-series anomaly detection with a recurrent autoencoder and a "
      "multi-receptive-field wavelet density ensemble"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* train = app.add_subcommand("train", "fit a detector from a config");
  train->add_option("-c,--config", config_path, "JSON config file")
      ->required();

  std::string model_dir, data_path, out_dir;
  bool drift = false;
  std::uint64_t seed = 7;
  CLI::App* detect =
      app.add_subcommand("detect", "classify windows with a trained model");
  detect->add_option("-m,--model", model_dir, "model directory")->required();
  detect->add_option("-d,--data", data_path, "CSV dataset to classify")
      ->required();
  detect->add_flag("--drift", drift,
                   "inject drift noise (fraction 0.3, mean 0.3, variance 0.2)");
  detect->add_option("--seed", seed, "seed for the drift injection");
  detect->add_option("-o,--out", out_dir,
                     "output directory (default: model directory)");

  CLI::App* benchmark = app.add_subcommand(
      "benchmark", "sweep lattice resolutions and spline orders");
  benchmark->add_option("-c,--config", config_path, "JSON config file")
      ->required();

  int ew_window = 0;
  double ew_delta = std::numeric_limits<double>::quiet_NaN();
  CLI::App* earlywarn = app.add_subcommand(
      "earlywarn", "scan windows for early-warning precursors");
  earlywarn->add_option("-m,--model", model_dir, "model directory")
      ->required();
  earlywarn->add_option("-d,--data", data_path, "CSV dataset to scan")
      ->required();
  earlywarn->add_option("-s,--window", ew_window,
                        "rolling-mean window (default: stored setting)");
  earlywarn->add_option("--delta", ew_delta,
                        "alert threshold (default: stored 99th percentile)");
  earlywarn->add_option("-o,--out", out_dir,
                        "output directory (default: model directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (train->parsed()) return cmd_train(config_path);
    if (detect->parsed()) {
      return cmd_detect(model_dir, data_path, drift, seed, out_dir);
    }
    if (benchmark->parsed()) return cmd_benchmark(config_path);
    if (earlywarn->parsed()) {
      return cmd_earlywarn(model_dir, data_path, ew_window, ew_delta, out_dir);
    }
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const rwpnn::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingFile;
  } catch (const rwpnn::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
