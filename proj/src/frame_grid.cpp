#include "rwpnn/frame_grid.hpp"

#include <cmath>
#include <string>

namespace rwpnn {

FrameGrid::FrameGrid(int j0, SplineOrder order, int dim,
                     std::int64_t frame_budget)
    : j0_(j0), order_(order), dim_(dim), budget_(frame_budget) {
  if (j0 < 1)
    throw ContractViolation("resolution j0 must be >= 1, got " +
                            std::to_string(j0));
  if (dim < 1)
    throw ContractViolation("dimension n must be >= 1, got " +
                            std::to_string(dim));
  if (j0 > 30)
    throw ContractViolation("resolution j0 too large: " + std::to_string(j0));

  per_dim_count_ = (std::int64_t{1} << j0) + 2 * order.boundary_pad() + 1;

  __int128 total = 1;
  for (int d = 0; d < dim; ++d) {
    total *= per_dim_count_;
    if (total > frame_budget) {
      const double approx =
          std::pow(static_cast<double>(per_dim_count_), dim);
      throw ContractViolation(
          "frame budget exceeded: M1^n = " + std::to_string(per_dim_count_) +
          "^" + std::to_string(dim) + " ~ " + std::to_string(approx) +
          " frames > budget " + std::to_string(frame_budget));
    }
  }
  total_count_ = static_cast<std::int64_t>(total);
  scale_ = std::ldexp(1.0, j0);
  norm_const_ = std::exp2(0.5 * dim * j0);
}

std::vector<int> FrameGrid::translation(std::int64_t frame_index) const {
  if (frame_index < 0 || frame_index >= total_count_)
    throw ContractViolation("frame index " + std::to_string(frame_index) +
                            " out of range [0, " +
                            std::to_string(total_count_) + ")");
  std::vector<int> k(dim_);
  std::int64_t rest = frame_index;
  for (int d = dim_ - 1; d >= 0; --d) {
    k[d] = static_cast<int>(rest % per_dim_count_) + min_k();
    rest /= per_dim_count_;
  }
  return k;
}

std::int64_t FrameGrid::flat_index(const std::vector<int>& k) const {
  if (static_cast<int>(k.size()) != dim_)
    throw ContractViolation("translation vector has wrong dimension");
  std::int64_t index = 0;
  for (int d = 0; d < dim_; ++d) {
    const int digit = k[d] - min_k();
    if (digit < 0 || digit >= per_dim_count_)
      throw ContractViolation("translation component out of lattice range");
    index = index * per_dim_count_ + digit;
  }
  return index;
}

void FrameGrid::check_dim(const Eigen::VectorXd& x) const {
  if (x.size() != dim_)
    throw ContractViolation("point has dimension " + std::to_string(x.size()) +
                            ", grid expects " + std::to_string(dim_));
}

double FrameGrid::radial_frame_eval(std::int64_t frame_index,
                                    const Eigen::VectorXd& x) const {
  check_dim(x);
  const std::vector<int> k = translation(frame_index);  // range-checks index
  double sq = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double diff = scale_ * x[d] - k[d];
    sq += diff * diff;
  }
  const double radius = std::sqrt(sq);
  return norm_const_ * bspline_eval(order_, radius + 0.5 * order_.m());
}

std::vector<std::int64_t> FrameGrid::find_relevant_frames(
    const Eigen::VectorXd& x) const {
  check_dim(x);
  const double half_m = 0.5 * order_.m();

  // Per dimension, the k satisfying the inclusive support test
  // 2^-j0 (k - m/2) <= x_d <= 2^-j0 (k + m/2) form a contiguous range.
  std::vector<int> lo(dim_), hi(dim_);
  for (int d = 0; d < dim_; ++d) {
    const double t = scale_ * x[d];
    int l = static_cast<int>(std::ceil(t - half_m));
    int h = static_cast<int>(std::floor(t + half_m));
    l = std::max(l, min_k());
    h = std::min(h, max_k());
    if (l > h) return {};  // x misses every support in this dimension
    lo[d] = l;
    hi[d] = h;
  }

  std::vector<std::int64_t> out;
  std::int64_t count = 1;
  for (int d = 0; d < dim_; ++d) count *= hi[d] - lo[d] + 1;
  out.reserve(count);

  // Cartesian product of the per-dimension ranges; row-major flattening
  // makes the result ascending by construction.
  std::vector<int> k(lo);
  while (true) {
    std::int64_t index = 0;
    for (int d = 0; d < dim_; ++d)
      index = index * per_dim_count_ + (k[d] - min_k());
    out.push_back(index);

    int d = dim_ - 1;
    while (d >= 0 && k[d] == hi[d]) {
      k[d] = lo[d];
      --d;
    }
    if (d < 0) break;
    ++k[d];
  }
  return out;
}

}  // namespace rwpnn
