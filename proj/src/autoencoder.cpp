#include "rwpnn/autoencoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

namespace rwpnn {
namespace {

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void write_matrix(io::BinaryWriter& w, const Eigen::MatrixXd& m) {
  w.i64(m.rows());
  w.i64(m.cols());
  w.f64_array(m.data(), static_cast<std::size_t>(m.size()));
}

Eigen::MatrixXd read_matrix(io::BinaryReader& r) {
  const auto rows = r.i64();
  const auto cols = r.i64();
  if (rows < 0 || cols < 0 || rows > 1'000'000 || cols > 1'000'000) {
    throw FormatError("autoencoder payload carries an implausible tensor shape");
  }
  Eigen::MatrixXd m(rows, cols);
  r.f64_array(m.data(), static_cast<std::size_t>(m.size()));
  return m;
}

void write_vector(io::BinaryWriter& w, const Eigen::VectorXd& v) {
  w.i64(v.size());
  w.f64_array(v.data(), static_cast<std::size_t>(v.size()));
}

Eigen::VectorXd read_vector(io::BinaryReader& r) {
  const auto n = r.i64();
  if (n < 0 || n > 1'000'000'000) {
    throw FormatError("autoencoder payload carries an implausible vector size");
  }
  Eigen::VectorXd v(n);
  r.f64_array(v.data(), static_cast<std::size_t>(v.size()));
  return v;
}

void write_layer(io::BinaryWriter& w, const LstmLayerParams& p) {
  write_matrix(w, p.W_f);
  write_matrix(w, p.W_i);
  write_matrix(w, p.W_C);
  write_matrix(w, p.W_o);
  write_vector(w, p.b_f);
  write_vector(w, p.b_i);
  write_vector(w, p.b_C);
  write_vector(w, p.b_o);
}

LstmLayerParams read_layer(io::BinaryReader& r) {
  LstmLayerParams p;
  p.W_f = read_matrix(r);
  p.W_i = read_matrix(r);
  p.W_C = read_matrix(r);
  p.W_o = read_matrix(r);
  p.b_f = read_vector(r);
  p.b_i = read_vector(r);
  p.b_C = read_vector(r);
  p.b_o = read_vector(r);
  return p;
}

//! Adam with bias correction; `t` is the 1-based update count.
template <typename Tensor>
void adam_step(Tensor& param, const Tensor& grad, Tensor& m, Tensor& v,
               double lr, double beta1, double beta2, double eps, long t) {
  m = beta1 * m + (1.0 - beta1) * grad;
  v = (beta2 * v.array() + (1.0 - beta2) * grad.array().square()).matrix();
  const double corr1 = 1.0 - std::pow(beta1, static_cast<double>(t));
  const double corr2 = 1.0 - std::pow(beta2, static_cast<double>(t));
  param.array() -=
      lr * (m.array() / corr1) / ((v.array() / corr2).sqrt() + eps);
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ContractViolation("learning_rate must be positive and finite");
  }
  if (max_epochs < 1) throw ContractViolation("max_epochs must be >= 1");
  if (batch_size < 1) throw ContractViolation("batch_size must be >= 1");
  if (patience < 1) throw ContractViolation("patience must be >= 1");
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0)) {
    throw ContractViolation("adam_beta1 must lie in [0,1)");
  }
  if (!(adam_beta2 >= 0.0 && adam_beta2 < 1.0)) {
    throw ContractViolation("adam_beta2 must lie in [0,1)");
  }
  if (!(adam_eps > 0.0)) throw ContractViolation("adam_eps must be positive");
}

void TrainReport::write_ndjson(std::ostream& out) const {
  for (const EpochRecord& rec : epochs) {
    out << "{\"epoch\":" << rec.epoch << ",\"train_mae\":" << rec.train_mae
        << ",\"val_mae\":" << rec.val_mae << "}\n";
  }
}

LatentNorm LatentNorm::fit(const std::vector<Eigen::VectorXd>& points) {
  if (points.empty()) {
    throw ContractViolation("latent normaliser needs at least one point");
  }
  const Eigen::Index dim = points.front().size();
  LatentNorm norm;
  norm.min = points.front();
  norm.max = points.front();
  for (const Eigen::VectorXd& p : points) {
    if (p.size() != dim) {
      throw ContractViolation("latent points must share one dimension");
    }
    norm.min = norm.min.cwiseMin(p);
    norm.max = norm.max.cwiseMax(p);
  }
  return norm;
}

Eigen::VectorXd LatentNorm::apply(const Eigen::VectorXd& x) const {
  if (!fitted()) {
    throw ContractViolation("latent normaliser was never fitted");
  }
  if (x.size() != min.size()) {
    throw ContractViolation("latent point dimension mismatch: expected " +
                            std::to_string(min.size()) + ", got " +
                            std::to_string(x.size()));
  }
  Eigen::VectorXd out(x.size());
  for (Eigen::Index d = 0; d < x.size(); ++d) {
    const double range = max[d] - min[d];
    if (range < 1e-9) {
      out[d] = 0.5;
    } else {
      out[d] = std::clamp((x[d] - min[d]) / range, 0.0, 1.0);
    }
  }
  return out;
}

RecurrentAutoencoder::RecurrentAutoencoder(int input_dim, int window_length,
                                           std::vector<int> encoder_sizes,
                                           std::vector<int> decoder_sizes,
                                           std::uint64_t seed)
    : input_dim_(input_dim),
      window_length_(window_length),
      encoder_sizes_(std::move(encoder_sizes)),
      decoder_sizes_(std::move(decoder_sizes)) {
  if (input_dim_ < 1) throw ContractViolation("input_dim must be >= 1");
  if (window_length_ < 1) throw ContractViolation("window_length must be >= 1");
  if (encoder_sizes_.empty() || decoder_sizes_.empty()) {
    throw ContractViolation("encoder and decoder each need at least one layer");
  }
  for (int s : encoder_sizes_) {
    if (s < 1) throw ContractViolation("encoder layer sizes must be >= 1");
  }
  for (int s : decoder_sizes_) {
    if (s < 1) throw ContractViolation("decoder layer sizes must be >= 1");
  }
  for (std::size_t i = 1; i < encoder_sizes_.size(); ++i) {
    if (encoder_sizes_[i] > encoder_sizes_[i - 1]) {
      throw ContractViolation("encoder layer sizes must be non-increasing");
    }
  }
  for (std::size_t i = 1; i < decoder_sizes_.size(); ++i) {
    if (decoder_sizes_[i] < decoder_sizes_[i - 1]) {
      throw ContractViolation("decoder layer sizes must be non-decreasing");
    }
  }
  if (decoder_sizes_.front() != encoder_sizes_.back()) {
    throw ContractViolation(
        "first decoder size must equal the latent width " +
        std::to_string(encoder_sizes_.back()) + ", got " +
        std::to_string(decoder_sizes_.front()));
  }
  const long flat = static_cast<long>(input_dim_) * window_length_;
  if (encoder_sizes_.back() >= flat) {
    throw ContractViolation(
        "latent width " + std::to_string(encoder_sizes_.back()) +
        " must be smaller than the window size " + std::to_string(flat));
  }

  std::mt19937_64 rng(seed);
  int in = input_dim_;
  for (int hidden : encoder_sizes_) {
    encoder_.push_back(LstmLayerParams::random_init(in, hidden, rng));
    in = hidden;
  }
  in = input_dim_;  // the decoder consumes its own previous reconstruction
  for (int hidden : decoder_sizes_) {
    decoder_.push_back(LstmLayerParams::random_init(in, hidden, rng));
    in = hidden;
  }
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  w_out_.resize(input_dim_, in);
  for (Eigen::Index r = 0; r < w_out_.rows(); ++r) {
    for (Eigen::Index c = 0; c < w_out_.cols(); ++c) {
      w_out_(r, c) = dist(rng);
    }
  }
  b_out_ = Eigen::VectorXd::Zero(input_dim_);
}

void RecurrentAutoencoder::check_window(const Eigen::MatrixXd& window) const {
  if (window.rows() < 1) {
    throw ContractViolation("window must hold at least one timestep");
  }
  if (window.cols() != input_dim_) {
    throw ContractViolation("window has " + std::to_string(window.cols()) +
                            " channels, expected " +
                            std::to_string(input_dim_));
  }
}

EncodeResult RecurrentAutoencoder::encode(const Eigen::MatrixXd& window) const {
  check_window(window);
  const Eigen::Index length = window.rows();
  Eigen::MatrixXd layer_in = window;
  Eigen::VectorXd h;
  for (const LstmLayerParams& layer : encoder_) {
    const int hidden = layer.hidden_size();
    h = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(hidden);
    Eigen::MatrixXd out(length, hidden);
    for (Eigen::Index t = 0; t < length; ++t) {
      std::tie(h, c) = lstm_cell_forward(layer, layer_in.row(t), h, c);
      out.row(t) = h;
    }
    layer_in = std::move(out);
  }
  return {h, layer_in};
}

Eigen::MatrixXd RecurrentAutoencoder::decode(const Eigen::VectorXd& latent,
                                             int length) const {
  if (length < 1) throw ContractViolation("decode length must be >= 1");
  if (latent.size() != decoder_sizes_.front()) {
    throw ContractViolation("latent width mismatch: expected " +
                            std::to_string(decoder_sizes_.front()) + ", got " +
                            std::to_string(latent.size()));
  }
  const std::size_t layers = decoder_.size();
  std::vector<Eigen::VectorXd> h(layers), c(layers);
  for (std::size_t d = 0; d < layers; ++d) {
    h[d] = Eigen::VectorXd::Zero(decoder_[d].hidden_size());
    c[d] = Eigen::VectorXd::Zero(decoder_[d].hidden_size());
  }
  h[0] = latent;  // the code primes only the first layer's hidden state
  Eigen::MatrixXd out(length, input_dim_);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(input_dim_);
  for (int t = 0; t < length; ++t) {
    for (std::size_t d = 0; d < layers; ++d) {
      const Eigen::VectorXd& in = (d == 0) ? x : h[d - 1];
      std::tie(h[d], c[d]) = lstm_cell_forward(decoder_[d], in, h[d], c[d]);
    }
    x = w_out_ * h[layers - 1] + b_out_;
    out.row(t) = x;
  }
  return out;
}

Eigen::MatrixXd RecurrentAutoencoder::reconstruct(
    const Eigen::MatrixXd& window) const {
  return decode(encode(window).latent, static_cast<int>(window.rows()));
}

double RecurrentAutoencoder::reconstruction_mae(
    const Eigen::MatrixXd& window) const {
  const Eigen::MatrixXd xhat = reconstruct(window);
  return (xhat - window).cwiseAbs().mean();
}

struct RecurrentAutoencoder::ForwardCache {
  std::vector<std::vector<LstmStep>> enc;  // [layer][t]
  std::vector<std::vector<LstmStep>> dec;
  Eigen::MatrixXd xhat;
};

void RecurrentAutoencoder::forward_all(const Eigen::MatrixXd& window,
                                       ForwardCache& cache) const {
  const Eigen::Index length = window.rows();
  cache.enc.assign(encoder_.size(), {});
  cache.dec.assign(decoder_.size(), {});

  Eigen::MatrixXd layer_in = window;
  for (std::size_t e = 0; e < encoder_.size(); ++e) {
    const LstmLayerParams& layer = encoder_[e];
    const int hidden = layer.hidden_size();
    Eigen::VectorXd h = Eigen::VectorXd::Zero(hidden);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(hidden);
    Eigen::MatrixXd out(length, hidden);
    cache.enc[e].reserve(length);
    for (Eigen::Index t = 0; t < length; ++t) {
      cache.enc[e].push_back(
          lstm_cell_forward_cached(layer, layer_in.row(t), h, c));
      h = cache.enc[e].back().h;
      c = cache.enc[e].back().c;
      out.row(t) = h;
    }
    layer_in = std::move(out);
  }

  const std::size_t layers = decoder_.size();
  std::vector<Eigen::VectorXd> h(layers), c(layers);
  for (std::size_t d = 0; d < layers; ++d) {
    h[d] = Eigen::VectorXd::Zero(decoder_[d].hidden_size());
    c[d] = Eigen::VectorXd::Zero(decoder_[d].hidden_size());
    cache.dec[d].reserve(length);
  }
  h[0] = cache.enc.back().back().h;
  cache.xhat.resize(length, input_dim_);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(input_dim_);
  for (Eigen::Index t = 0; t < length; ++t) {
    for (std::size_t d = 0; d < layers; ++d) {
      const Eigen::VectorXd& in = (d == 0) ? x : h[d - 1];
      cache.dec[d].push_back(
          lstm_cell_forward_cached(decoder_[d], in, h[d], c[d]));
      h[d] = cache.dec[d].back().h;
      c[d] = cache.dec[d].back().c;
    }
    x = w_out_ * h[layers - 1] + b_out_;
    cache.xhat.row(t) = x;
  }
}

RecurrentAutoencoder::Gradients RecurrentAutoencoder::zero_gradients() const {
  Gradients g;
  g.encoder.reserve(encoder_.size());
  for (const LstmLayerParams& p : encoder_) {
    g.encoder.push_back(LstmLayerGrads::zeros_like(p));
  }
  g.decoder.reserve(decoder_.size());
  for (const LstmLayerParams& p : decoder_) {
    g.decoder.push_back(LstmLayerGrads::zeros_like(p));
  }
  g.w_out = Eigen::MatrixXd::Zero(w_out_.rows(), w_out_.cols());
  g.b_out = Eigen::VectorXd::Zero(b_out_.size());
  return g;
}

double RecurrentAutoencoder::loss_and_gradients(const Eigen::MatrixXd& window,
                                                Gradients& grads) const {
  check_window(window);
  ForwardCache cache;
  forward_all(window, cache);
  const Eigen::Index length = window.rows();
  const double denom = static_cast<double>(length * input_dim_);
  const double loss = (cache.xhat - window).cwiseAbs().sum() / denom;

  // dL/dxhat for the mean absolute error.
  Eigen::MatrixXd d_xhat(length, input_dim_);
  for (Eigen::Index t = 0; t < length; ++t) {
    for (Eigen::Index j = 0; j < input_dim_; ++j) {
      d_xhat(t, j) = sign_of(cache.xhat(t, j) - window(t, j)) / denom;
    }
  }

  // Decoder: walk time backwards, threading the autoregressive input path.
  const std::size_t layers = decoder_.size();
  std::vector<Eigen::VectorXd> dh(layers), dc(layers);
  for (std::size_t d = 0; d < layers; ++d) {
    dh[d] = Eigen::VectorXd::Zero(decoder_[d].hidden_size());
    dc[d] = Eigen::VectorXd::Zero(decoder_[d].hidden_size());
  }
  Eigen::VectorXd d_next_input = Eigen::VectorXd::Zero(input_dim_);
  for (Eigen::Index t = length - 1; t >= 0; --t) {
    const Eigen::VectorXd d_out = d_xhat.row(t).transpose() + d_next_input;
    const Eigen::VectorXd& h_top = cache.dec[layers - 1][t].h;
    grads.w_out.noalias() += d_out * h_top.transpose();
    grads.b_out += d_out;
    dh[layers - 1] += w_out_.transpose() * d_out;

    d_next_input.setZero();
    for (std::size_t d = layers; d-- > 0;) {
      Eigen::VectorXd dx, dh_prev, dc_prev;
      lstm_cell_backward(decoder_[d], cache.dec[d][t], dh[d], dc[d],
                         grads.decoder[d], dx, dh_prev, dc_prev);
      dh[d] = std::move(dh_prev);
      dc[d] = std::move(dc_prev);
      if (d > 0) {
        dh[d - 1] += dx;
      } else if (t > 0) {
        d_next_input = std::move(dx);  // input at t was the output of t-1
      }
    }
  }
  // dh[0] now holds the gradient wrt the decoder's initial hidden state,
  // i.e. wrt the latent code produced by the last encoder layer at t = L-1.
  Eigen::VectorXd d_latent = dh[0];

  // Encoder: only the final step of the top layer feeds the loss.
  std::vector<Eigen::MatrixXd> d_out_rows(encoder_.size());
  d_out_rows.back() =
      Eigen::MatrixXd::Zero(length, encoder_sizes_.back());
  d_out_rows.back().row(length - 1) = d_latent;
  for (std::size_t e = encoder_.size(); e-- > 0;) {
    const LstmLayerParams& layer = encoder_[e];
    Eigen::VectorXd dhe = Eigen::VectorXd::Zero(layer.hidden_size());
    Eigen::VectorXd dce = Eigen::VectorXd::Zero(layer.hidden_size());
    Eigen::MatrixXd d_below(length, layer.input_size());
    for (Eigen::Index t = length - 1; t >= 0; --t) {
      dhe += d_out_rows[e].row(t).transpose();
      Eigen::VectorXd dx, dh_prev, dc_prev;
      lstm_cell_backward(layer, cache.enc[e][t], dhe, dce, grads.encoder[e],
                         dx, dh_prev, dc_prev);
      d_below.row(t) = dx;
      dhe = std::move(dh_prev);
      dce = std::move(dc_prev);
    }
    if (e > 0) d_out_rows[e - 1] = std::move(d_below);
  }
  return loss;
}

namespace {

//! Applies `fn(param, grad, m, v)` across every trainable tensor.
template <typename Fn>
void zip_tensors(std::vector<LstmLayerParams>& params,
                 std::vector<LstmLayerGrads>& grads,
                 std::vector<LstmLayerGrads>& m, std::vector<LstmLayerGrads>& v,
                 Fn&& fn) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    fn(params[i].W_f, grads[i].W_f, m[i].W_f, v[i].W_f);
    fn(params[i].W_i, grads[i].W_i, m[i].W_i, v[i].W_i);
    fn(params[i].W_C, grads[i].W_C, m[i].W_C, v[i].W_C);
    fn(params[i].W_o, grads[i].W_o, m[i].W_o, v[i].W_o);
    fn(params[i].b_f, grads[i].b_f, m[i].b_f, v[i].b_f);
    fn(params[i].b_i, grads[i].b_i, m[i].b_i, v[i].b_i);
    fn(params[i].b_C, grads[i].b_C, m[i].b_C, v[i].b_C);
    fn(params[i].b_o, grads[i].b_o, m[i].b_o, v[i].b_o);
  }
}

}  // namespace

TrainReport RecurrentAutoencoder::train(
    const std::vector<Eigen::MatrixXd>& train_windows,
    const std::vector<Eigen::MatrixXd>& val_windows,
    const TrainConfig& config) {
  config.validate();
  if (train_windows.empty()) {
    throw ContractViolation("training needs at least one window");
  }
  for (const Eigen::MatrixXd& w : train_windows) {
    check_window(w);
    if (w.rows() != window_length_) {
      throw ContractViolation("training window length " +
                              std::to_string(w.rows()) + " does not match " +
                              std::to_string(window_length_));
    }
  }
  for (const Eigen::MatrixXd& w : val_windows) check_window(w);

  Gradients grads = zero_gradients();
  Gradients m = zero_gradients();
  Gradients v = zero_gradients();
  long adam_t = 0;

  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(train_windows.size());
  std::iota(order.begin(), order.end(), 0);

  TrainReport report;
  double best_monitor = std::numeric_limits<double>::infinity();
  std::vector<LstmLayerParams> best_encoder;
  std::vector<LstmLayerParams> best_decoder;
  Eigen::MatrixXd best_w_out;
  Eigen::VectorXd best_b_out;
  int since_best = 0;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t stop = std::min(
          order.size(), start + static_cast<std::size_t>(config.batch_size));
      const double batch_count = static_cast<double>(stop - start);
      grads = zero_gradients();
      for (std::size_t b = start; b < stop; ++b) {
        epoch_loss += loss_and_gradients(train_windows[order[b]], grads);
      }
      const double scale = 1.0 / batch_count;
      ++adam_t;
      const auto update = [&](auto& p, auto& g, auto& mm, auto& vv) {
        g *= scale;
        adam_step(p, g, mm, vv, config.learning_rate, config.adam_beta1,
                  config.adam_beta2, config.adam_eps, adam_t);
      };
      zip_tensors(encoder_, grads.encoder, m.encoder, v.encoder, update);
      zip_tensors(decoder_, grads.decoder, m.decoder, v.decoder, update);
      update(w_out_, grads.w_out, m.w_out, v.w_out);
      update(b_out_, grads.b_out, m.b_out, v.b_out);
    }
    const double train_mae =
        epoch_loss / static_cast<double>(train_windows.size());

    double val_mae = train_mae;
    if (!val_windows.empty()) {
      double sum = 0.0;
      for (const Eigen::MatrixXd& w : val_windows) {
        sum += reconstruction_mae(w);
      }
      val_mae = sum / static_cast<double>(val_windows.size());
    }
    if (!std::isfinite(train_mae) || !std::isfinite(val_mae)) {
      throw DivergenceError(epoch);
    }
    report.epochs.push_back({epoch, train_mae, val_mae});

    if (val_mae < best_monitor) {
      best_monitor = val_mae;
      best_encoder = encoder_;
      best_decoder = decoder_;
      best_w_out = w_out_;
      best_b_out = b_out_;
      report.best_epoch = epoch;
      since_best = 0;
    } else {
      ++since_best;
      if (since_best >= config.patience) {
        report.stopped_early = true;
        break;
      }
    }
  }

  encoder_ = std::move(best_encoder);
  decoder_ = std::move(best_decoder);
  w_out_ = std::move(best_w_out);
  b_out_ = std::move(best_b_out);
  report.best_val_mae = best_monitor;

  std::vector<Eigen::VectorXd> latents;
  latents.reserve(train_windows.size());
  for (const Eigen::MatrixXd& w : train_windows) {
    latents.push_back(encode(w).latent);
  }
  latent_norm_ = LatentNorm::fit(latents);
  return report;
}

Eigen::VectorXd RecurrentAutoencoder::latent_normalize(
    const Eigen::MatrixXd& window) const {
  return latent_norm_.apply(encode(window).latent);
}

void RecurrentAutoencoder::save(io::BinaryWriter& writer) const {
  writer.i32(input_dim_);
  writer.i32(window_length_);
  writer.i32(static_cast<std::int32_t>(encoder_sizes_.size()));
  for (int s : encoder_sizes_) writer.i32(s);
  writer.i32(static_cast<std::int32_t>(decoder_sizes_.size()));
  for (int s : decoder_sizes_) writer.i32(s);
  for (const LstmLayerParams& p : encoder_) write_layer(writer, p);
  for (const LstmLayerParams& p : decoder_) write_layer(writer, p);
  write_matrix(writer, w_out_);
  write_vector(writer, b_out_);
  writer.u32(latent_norm_.fitted() ? 1u : 0u);
  if (latent_norm_.fitted()) {
    write_vector(writer, latent_norm_.min);
    write_vector(writer, latent_norm_.max);
  }
}

void RecurrentAutoencoder::save(const std::string& path) const {
  io::BinaryWriter writer;
  save(writer);
  writer.write_file(path, io::FileKind::autoencoder);
}

RecurrentAutoencoder RecurrentAutoencoder::load(io::BinaryReader& reader) {
  const int input_dim = reader.i32();
  const int window_length = reader.i32();
  const int n_enc = reader.i32();
  if (n_enc < 1 || n_enc > 64) {
    throw FormatError("autoencoder payload carries an implausible layer count");
  }
  std::vector<int> enc_sizes(n_enc);
  for (int& s : enc_sizes) s = reader.i32();
  const int n_dec = reader.i32();
  if (n_dec < 1 || n_dec > 64) {
    throw FormatError("autoencoder payload carries an implausible layer count");
  }
  std::vector<int> dec_sizes(n_dec);
  for (int& s : dec_sizes) s = reader.i32();

  RecurrentAutoencoder model(input_dim, window_length, enc_sizes, dec_sizes,
                             /*seed=*/0);
  for (LstmLayerParams& p : model.encoder_) p = read_layer(reader);
  for (LstmLayerParams& p : model.decoder_) p = read_layer(reader);
  model.w_out_ = read_matrix(reader);
  model.b_out_ = read_vector(reader);
  if (reader.u32() != 0) {
    model.latent_norm_.min = read_vector(reader);
    model.latent_norm_.max = read_vector(reader);
  }
  return model;
}

RecurrentAutoencoder RecurrentAutoencoder::load(const std::string& path) {
  io::BinaryReader reader =
      io::BinaryReader::open(path, io::FileKind::autoencoder);
  return load(reader);
}

}  // namespace rwpnn
