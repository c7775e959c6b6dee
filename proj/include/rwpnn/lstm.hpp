#pragma once

#include "rwpnn/errors.hpp"

#include <Eigen/Core>
#include <random>

namespace rwpnn {

//! Gate weights of one LSTM layer. Every W acts on the concatenated vector
//! [h_{t-1}; x_t], so its shape is hidden x (hidden + input).
struct LstmLayerParams {
  Eigen::MatrixXd W_f, W_i, W_C, W_o;
  Eigen::VectorXd b_f, b_i, b_C, b_o;

  int hidden_size() const { return static_cast<int>(W_f.rows()); }
  int input_size() const { return static_cast<int>(W_f.cols() - W_f.rows()); }

  static LstmLayerParams zeros(int input_size, int hidden_size);
  //! Uniform init in +-1/sqrt(hidden_size).
  static LstmLayerParams random_init(int input_size, int hidden_size,
                                     std::mt19937_64& rng);
};

//! Everything the backward pass needs about one forward step.
struct LstmStep {
  Eigen::VectorXd z;  // [h_prev; x]
  Eigen::VectorXd f, i, c_bar, o;
  Eigen::VectorXd c, tanh_c, h;
  Eigen::VectorXd c_prev;
};

//! Parameter gradients of one layer, same shapes as LstmLayerParams.
struct LstmLayerGrads {
  Eigen::MatrixXd W_f, W_i, W_C, W_o;
  Eigen::VectorXd b_f, b_i, b_C, b_o;

  static LstmLayerGrads zeros_like(const LstmLayerParams& params);
  void set_zero();
  void add_scaled(const LstmLayerGrads& other, double factor);
};

//! Gate equations: f, i, o through sigmoid, candidate through tanh,
//! C_t = f (.) C_{t-1} + i (.) C~_t, h_t = o (.) tanh(C_t).
std::pair<Eigen::VectorXd, Eigen::VectorXd> lstm_cell_forward(
    const LstmLayerParams& params, const Eigen::VectorXd& x_t,
    const Eigen::VectorXd& h_prev, const Eigen::VectorXd& c_prev);

//! Forward step that also records the cache for lstm_cell_backward.
LstmStep lstm_cell_forward_cached(const LstmLayerParams& params,
                                  const Eigen::VectorXd& x_t,
                                  const Eigen::VectorXd& h_prev,
                                  const Eigen::VectorXd& c_prev);

//! One-step backward. dh/dc are the incoming gradients wrt h_t and C_t;
//! accumulates parameter gradients and fills the gradients wrt the step
//! inputs (x_t, h_{t-1}, C_{t-1}).
void lstm_cell_backward(const LstmLayerParams& params, const LstmStep& step,
                        const Eigen::VectorXd& dh, const Eigen::VectorXd& dc,
                        LstmLayerGrads& grads, Eigen::VectorXd& dx,
                        Eigen::VectorXd& dh_prev, Eigen::VectorXd& dc_prev);

}  // namespace rwpnn
