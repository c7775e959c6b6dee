#include "rwpnn/lstm.hpp"

namespace rwpnn {
namespace {

Eigen::VectorXd sigmoid(const Eigen::VectorXd& a) {
  return (1.0 / (1.0 + (-a.array()).exp())).matrix();
}

void check_sizes(int input_size, int hidden_size) {
  if (input_size < 1 || hidden_size < 1) {
    throw ContractViolation("lstm layer sizes must be positive, got input=" +
                            std::to_string(input_size) +
                            " hidden=" + std::to_string(hidden_size));
  }
}

}  // namespace

LstmLayerParams LstmLayerParams::zeros(int input_size, int hidden_size) {
  check_sizes(input_size, hidden_size);
  const int cols = hidden_size + input_size;
  LstmLayerParams p;
  p.W_f = Eigen::MatrixXd::Zero(hidden_size, cols);
  p.W_i = Eigen::MatrixXd::Zero(hidden_size, cols);
  p.W_C = Eigen::MatrixXd::Zero(hidden_size, cols);
  p.W_o = Eigen::MatrixXd::Zero(hidden_size, cols);
  p.b_f = Eigen::VectorXd::Zero(hidden_size);
  p.b_i = Eigen::VectorXd::Zero(hidden_size);
  p.b_C = Eigen::VectorXd::Zero(hidden_size);
  p.b_o = Eigen::VectorXd::Zero(hidden_size);
  return p;
}

LstmLayerParams LstmLayerParams::random_init(int input_size, int hidden_size,
                                             std::mt19937_64& rng) {
  check_sizes(input_size, hidden_size);
  const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_size));
  std::uniform_real_distribution<double> dist(-bound, bound);
  LstmLayerParams p = zeros(input_size, hidden_size);
  const auto fill = [&](Eigen::MatrixXd& w) {
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        w(r, c) = dist(rng);
      }
    }
  };
  fill(p.W_f);
  fill(p.W_i);
  fill(p.W_C);
  fill(p.W_o);
  // Biases start at zero; the uniform fan-in init covers the weights only.
  return p;
}

LstmLayerGrads LstmLayerGrads::zeros_like(const LstmLayerParams& params) {
  LstmLayerGrads g;
  g.W_f = Eigen::MatrixXd::Zero(params.W_f.rows(), params.W_f.cols());
  g.W_i = g.W_f;
  g.W_C = g.W_f;
  g.W_o = g.W_f;
  g.b_f = Eigen::VectorXd::Zero(params.b_f.size());
  g.b_i = g.b_f;
  g.b_C = g.b_f;
  g.b_o = g.b_f;
  return g;
}

void LstmLayerGrads::set_zero() {
  W_f.setZero();
  W_i.setZero();
  W_C.setZero();
  W_o.setZero();
  b_f.setZero();
  b_i.setZero();
  b_C.setZero();
  b_o.setZero();
}

void LstmLayerGrads::add_scaled(const LstmLayerGrads& other, double factor) {
  W_f += factor * other.W_f;
  W_i += factor * other.W_i;
  W_C += factor * other.W_C;
  W_o += factor * other.W_o;
  b_f += factor * other.b_f;
  b_i += factor * other.b_i;
  b_C += factor * other.b_C;
  b_o += factor * other.b_o;
}

LstmStep lstm_cell_forward_cached(const LstmLayerParams& params,
                                  const Eigen::VectorXd& x_t,
                                  const Eigen::VectorXd& h_prev,
                                  const Eigen::VectorXd& c_prev) {
  const int hidden = params.hidden_size();
  const int input = params.input_size();
  if (x_t.size() != input) {
    throw ContractViolation("lstm input size mismatch: expected " +
                            std::to_string(input) + ", got " +
                            std::to_string(x_t.size()));
  }
  if (h_prev.size() != hidden || c_prev.size() != hidden) {
    throw ContractViolation("lstm state size mismatch: expected " +
                            std::to_string(hidden));
  }
  LstmStep s;
  s.z.resize(hidden + input);
  s.z.head(hidden) = h_prev;
  s.z.tail(input) = x_t;
  s.c_prev = c_prev;
  s.f = sigmoid(params.W_f * s.z + params.b_f);
  s.i = sigmoid(params.W_i * s.z + params.b_i);
  s.c_bar = (params.W_C * s.z + params.b_C).array().tanh().matrix();
  s.o = sigmoid(params.W_o * s.z + params.b_o);
  s.c = (s.f.array() * c_prev.array() + s.i.array() * s.c_bar.array()).matrix();
  s.tanh_c = s.c.array().tanh().matrix();
  s.h = (s.o.array() * s.tanh_c.array()).matrix();
  return s;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> lstm_cell_forward(
    const LstmLayerParams& params, const Eigen::VectorXd& x_t,
    const Eigen::VectorXd& h_prev, const Eigen::VectorXd& c_prev) {
  LstmStep s = lstm_cell_forward_cached(params, x_t, h_prev, c_prev);
  return {std::move(s.h), std::move(s.c)};
}

void lstm_cell_backward(const LstmLayerParams& params, const LstmStep& step,
                        const Eigen::VectorXd& dh, const Eigen::VectorXd& dc,
                        LstmLayerGrads& grads, Eigen::VectorXd& dx,
                        Eigen::VectorXd& dh_prev, Eigen::VectorXd& dc_prev) {
  const int hidden = params.hidden_size();
  const int input = params.input_size();

  // h_t = o (.) tanh(C_t)
  const Eigen::ArrayXd d_o = dh.array() * step.tanh_c.array();
  const Eigen::ArrayXd dc_total =
      dc.array() + dh.array() * step.o.array() *
                       (1.0 - step.tanh_c.array() * step.tanh_c.array());

  // C_t = f (.) C_{t-1} + i (.) C~_t
  const Eigen::ArrayXd d_f = dc_total * step.c_prev.array();
  const Eigen::ArrayXd d_i = dc_total * step.c_bar.array();
  const Eigen::ArrayXd d_cbar = dc_total * step.i.array();
  dc_prev = (dc_total * step.f.array()).matrix();

  // Pre-activation gradients through sigma / tanh.
  const Eigen::VectorXd da_f =
      (d_f * step.f.array() * (1.0 - step.f.array())).matrix();
  const Eigen::VectorXd da_i =
      (d_i * step.i.array() * (1.0 - step.i.array())).matrix();
  const Eigen::VectorXd da_c =
      (d_cbar * (1.0 - step.c_bar.array() * step.c_bar.array())).matrix();
  const Eigen::VectorXd da_o =
      (d_o * step.o.array() * (1.0 - step.o.array())).matrix();

  grads.W_f.noalias() += da_f * step.z.transpose();
  grads.W_i.noalias() += da_i * step.z.transpose();
  grads.W_C.noalias() += da_c * step.z.transpose();
  grads.W_o.noalias() += da_o * step.z.transpose();
  grads.b_f += da_f;
  grads.b_i += da_i;
  grads.b_C += da_c;
  grads.b_o += da_o;

  const Eigen::VectorXd dz = params.W_f.transpose() * da_f +
                             params.W_i.transpose() * da_i +
                             params.W_C.transpose() * da_c +
                             params.W_o.transpose() * da_o;
  dh_prev = dz.head(hidden);
  dx = dz.tail(input);
}

}  // namespace rwpnn
