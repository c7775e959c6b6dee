#pragma once

#include "rwpnn/bspline.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace rwpnn {

//! Lattice of integer translation vectors defining a radial B-spline frame
//! over [0,1]^n. Per dimension the translations run through
//! {-u, ..., 0, ..., 2^j0 + u}, giving M1 = 2^j0 + 2u + 1 values and
//! M = M1^n frame functions in total.
//!
//! Flat frame indices enumerate the lattice row-major over dimensions with
//! k ascending: index = sum_d (k_d + u) * M1^(n-1-d), i.e. the last
//! dimension varies fastest. This order is part of the model file contract.
class FrameGrid {
public:
  static constexpr std::int64_t kDefaultFrameBudget = 10'000'000;

  //! Throws ContractViolation for j0 < 1, n < 1, or when M1^n exceeds the
  //! frame budget.
  FrameGrid(int j0, SplineOrder order, int dim,
            std::int64_t frame_budget = kDefaultFrameBudget);

  int resolution() const { return j0_; }
  SplineOrder order() const { return order_; }
  int dim() const { return dim_; }
  std::int64_t per_dim_count() const { return per_dim_count_; }  // M1
  std::int64_t total_count() const { return total_count_; }      // M

  int min_k() const { return -order_.boundary_pad(); }
  int max_k() const { return (1 << j0_) + order_.boundary_pad(); }

  //! Translation vector k for a flat frame index.
  std::vector<int> translation(std::int64_t frame_index) const;
  std::int64_t flat_index(const std::vector<int>& k) const;

  //! Support of translation k in one dimension:
  //! [2^-j0 (k - m/2), 2^-j0 (k + m/2)], both ends inclusive.
  double support_lo(int k) const { return (k - 0.5 * order_.m()) / scale_; }
  double support_hi(int k) const { return (k + 0.5 * order_.m()) / scale_; }

  //! 2^(n j0 / 2) * N_m(||2^j0 x - k||_2 + m/2) for the given frame.
  double radial_frame_eval(std::int64_t frame_index,
                           const Eigen::VectorXd& x) const;

  //! Ascending flat indices of the frames whose support box contains x in
  //! every dimension (boundaries inclusive). At most (m+1)^n indices; empty
  //! when x lies outside every support.
  std::vector<std::int64_t> find_relevant_frames(const Eigen::VectorXd& x) const;

  double dilation() const { return scale_; }          // 2^j0
  double norm_constant() const { return norm_const_; }  // 2^(n j0 / 2)

  bool operator==(const FrameGrid& other) const {
    return j0_ == other.j0_ && order_ == other.order_ && dim_ == other.dim_;
  }

private:
  void check_dim(const Eigen::VectorXd& x) const;

  int j0_;
  SplineOrder order_;
  int dim_;
  std::int64_t budget_;
  std::int64_t per_dim_count_;
  std::int64_t total_count_;
  double scale_;
  double norm_const_;
};

//! Named constructor matching the grid parameters as usually written:
//! resolution j0, spline order, data dimension n.
inline FrameGrid build_grid(int j0, SplineOrder order, int n,
                            std::int64_t frame_budget =
                                FrameGrid::kDefaultFrameBudget) {
  return FrameGrid(j0, order, n, frame_budget);
}

}  // namespace rwpnn
