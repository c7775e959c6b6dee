#pragma once

#include "rwpnn/binary_io.hpp"
#include "rwpnn/frame_grid.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace rwpnn {

//! Ordered set of forgetting factors, one per ensemble view. Each factor
//! alpha = 1/P tracks an effective sliding window of the latest P points,
//! so the set as a whole watches several rates of data variation at once.
class ReceptiveFieldSet {
public:
  //! Factors must lie in (0, 1] and be strictly descending.
  explicit ReceptiveFieldSet(std::vector<double> gammas);

  //! 1/{1, 10, 100, 500, 1000}.
  static ReceptiveFieldSet defaults();

  int size() const { return static_cast<int>(gammas_.size()); }
  double operator[](int i) const { return gammas_[i]; }
  const std::vector<double>& values() const { return gammas_; }

private:
  std::vector<double> gammas_;
};

//! Per-view density values at one evaluation point.
struct DensityEstimate {
  Eigen::VectorXd per_view;        // p-hat_i(x), one entry per view
  std::int64_t relevant_count = 0;  // M_c at the evaluation point
};

//! Multi-receptive-field wavelet probabilistic network: one coefficient
//! vector per forgetting factor, updated online from a stream of points in
//! [0,1]^n and evaluated as a frame-expansion density estimate.
//!
//! The eager update multiplies every coefficient by (1 - alpha) and adds
//! alpha * Phi(x) at the relevant frames. Coefficients are stored as
//! view_scale_i * raw so that each update touches only the M_c relevant
//! entries; the per-view scale absorbs the decay of everything else.
class MrwpnModel {
public:
  MrwpnModel(FrameGrid grid, ReceptiveFieldSet gammas);

  //! One Alg.-style online step. Points outside [0,1]^n match no frame and
  //! therefore only decay the coefficients; this is intended, latent
  //! normalisation clamps into the lattice.
  void update_online(const Eigen::VectorXd& x);

  //! Per-view p-hat_i(x) = sum over relevant frames of w[b,i] * Phi_b(x).
  //! Cost is O(M_c * n * m) regardless of how many points were seen.
  DensityEstimate estimate_density(const Eigen::VectorXd& x) const;

  //! Materialised coefficient w[frame, view].
  double coefficient(std::int64_t frame, int view) const;
  //! Materialised M x |Gamma| coefficient matrix.
  Eigen::MatrixXd coefficients() const;

  std::uint64_t points_seen() const { return points_seen_; }
  const FrameGrid& grid() const { return grid_; }
  const ReceptiveFieldSet& gammas() const { return gammas_; }

  void save(const std::filesystem::path& path) const;
  static MrwpnModel load(const std::filesystem::path& path);

  void save(io::BinaryWriter& writer) const;
  static MrwpnModel load(io::BinaryReader& reader);

private:
  void flush_view(int view);

  FrameGrid grid_;
  ReceptiveFieldSet gammas_;
  //! raw coefficients, row per frame; true w = raw * view_scale per column.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> raw_;
  Eigen::VectorXd view_scale_;
  std::uint64_t points_seen_ = 0;
};

//! Batch coefficient estimate w_k = (1/N) sum_i Phi_k(X_i). Stationary
//! baseline, and the independent oracle the recursive update is tested
//! against; keep it free of MrwpnModel internals.
Eigen::VectorXd update_batch(const FrameGrid& grid,
                             const std::vector<Eigen::VectorXd>& data);

//! Density reconstruction from a batch coefficient vector.
double batch_density(const FrameGrid& grid, const Eigen::VectorXd& coeffs,
                     const Eigen::VectorXd& x);

//! Feeds the same stream to one multi-view model and to |Gamma| single-view
//! models; true iff every per-view coefficient column is bit-identical.
bool ensemble_equivalence_check(const FrameGrid& grid,
                                const ReceptiveFieldSet& gammas,
                                const std::vector<Eigen::VectorXd>& stream);

}  // namespace rwpnn
