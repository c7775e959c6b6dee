#pragma once

#include "rwpnn/binary_io.hpp"
#include "rwpnn/errors.hpp"
#include "rwpnn/lstm.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rwpnn {

//! Optimisation settings for RecurrentAutoencoder::train.
struct TrainConfig {
  double learning_rate = 1e-3;
  int max_epochs = 200;
  int batch_size = 16;
  int patience = 20;      //!< epochs without val improvement before stopping
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  std::uint64_t seed = 42;

  //! Throws ContractViolation when any knob is out of range.
  void validate() const;
};

//! One epoch of the training trace.
struct EpochRecord {
  int epoch = 0;  //!< 1-based
  double train_mae = 0.0;
  double val_mae = 0.0;
};

//! Full training trace plus the early-stopping outcome.
struct TrainReport {
  std::vector<EpochRecord> epochs;
  int best_epoch = 0;  //!< 1-based epoch whose weights were kept
  double best_val_mae = 0.0;
  bool stopped_early = false;

  //! One JSON object per line: {"epoch":..,"train_mae":..,"val_mae":..}.
  void write_ndjson(std::ostream& out) const;
};

//! Per-dimension min/max rescaling of latent vectors into [0,1]^d.
//! Dimensions whose observed range collapses below 1e-9 map to 0.5.
struct LatentNorm {
  Eigen::VectorXd min;
  Eigen::VectorXd max;

  bool fitted() const { return min.size() > 0; }
  static LatentNorm fit(const std::vector<Eigen::VectorXd>& points);
  //! Clamps into [0,1]; throws ContractViolation when unfitted.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

//! Result of running the encoder over one window.
struct EncodeResult {
  Eigen::VectorXd latent;    //!< final hidden state of the last encoder layer
  Eigen::MatrixXd sequence;  //!< per-timestep outputs of that layer, L x n_t
};

//! Stacked LSTM encoder/decoder trained to reproduce its input window.
//!
//! The encoder layers run in the order given (sizes non-increasing); the
//! final hidden state of the last layer is the latent code. The decoder
//! (sizes non-decreasing, first size equal to the latent width) starts from
//! that code as the first layer's initial hidden state and feeds each dense
//! reconstruction back as the next step's input. Loss is mean absolute
//! error over all L x n_o reconstructed entries.
class RecurrentAutoencoder {
 public:
  RecurrentAutoencoder(int input_dim, int window_length,
                       std::vector<int> encoder_sizes,
                       std::vector<int> decoder_sizes, std::uint64_t seed);

  int input_dim() const { return input_dim_; }
  int window_length() const { return window_length_; }
  int latent_dim() const { return encoder_sizes_.back(); }
  const std::vector<int>& encoder_sizes() const { return encoder_sizes_; }
  const std::vector<int>& decoder_sizes() const { return decoder_sizes_; }

  //! window is L x input_dim (any L >= 1).
  EncodeResult encode(const Eigen::MatrixXd& window) const;
  //! Unrolls the decoder for `length` steps from a latent code.
  Eigen::MatrixXd decode(const Eigen::VectorXd& latent, int length) const;
  //! encode + decode with matching length.
  Eigen::MatrixXd reconstruct(const Eigen::MatrixXd& window) const;
  //! Mean absolute reconstruction error of one window.
  double reconstruction_mae(const Eigen::MatrixXd& window) const;

  //! All trainable tensors, in update order.
  struct Gradients {
    std::vector<LstmLayerGrads> encoder;
    std::vector<LstmLayerGrads> decoder;
    Eigen::MatrixXd w_out;
    Eigen::VectorXd b_out;
  };

  //! Forward + full backward over one window; returns the MAE loss and
  //! accumulates into `grads` (callers zero it first).
  double loss_and_gradients(const Eigen::MatrixXd& window,
                            Gradients& grads) const;
  Gradients zero_gradients() const;

  //! Mini-batch Adam with early stopping on the validation MAE; restores
  //! the best-validation weights before returning and fits the latent
  //! normaliser on the training windows. Throws DivergenceError when the
  //! loss turns non-finite.
  TrainReport train(const std::vector<Eigen::MatrixXd>& train_windows,
                    const std::vector<Eigen::MatrixXd>& val_windows,
                    const TrainConfig& config);

  const LatentNorm& latent_norm() const { return latent_norm_; }
  void set_latent_norm(LatentNorm norm) { latent_norm_ = std::move(norm); }
  //! encode + latent normalisation; throws when the normaliser is unfitted.
  Eigen::VectorXd latent_normalize(const Eigen::MatrixXd& window) const;

  // Parameter access (serialisation, tests, finite-difference checks).
  std::vector<LstmLayerParams>& encoder_layers() { return encoder_; }
  const std::vector<LstmLayerParams>& encoder_layers() const {
    return encoder_;
  }
  std::vector<LstmLayerParams>& decoder_layers() { return decoder_; }
  const std::vector<LstmLayerParams>& decoder_layers() const {
    return decoder_;
  }
  Eigen::MatrixXd& output_weight() { return w_out_; }
  const Eigen::MatrixXd& output_weight() const { return w_out_; }
  Eigen::VectorXd& output_bias() { return b_out_; }
  const Eigen::VectorXd& output_bias() const { return b_out_; }

  void save(const std::string& path) const;
  void save(io::BinaryWriter& writer) const;
  static RecurrentAutoencoder load(const std::string& path);
  static RecurrentAutoencoder load(io::BinaryReader& reader);

 private:
  struct ForwardCache;
  void forward_all(const Eigen::MatrixXd& window, ForwardCache& cache) const;
  void check_window(const Eigen::MatrixXd& window) const;

  int input_dim_ = 0;
  int window_length_ = 0;
  std::vector<int> encoder_sizes_;
  std::vector<int> decoder_sizes_;
  std::vector<LstmLayerParams> encoder_;
  std::vector<LstmLayerParams> decoder_;
  Eigen::MatrixXd w_out_;  // input_dim x last decoder size
  Eigen::VectorXd b_out_;
  LatentNorm latent_norm_;
};

}  // namespace rwpnn
