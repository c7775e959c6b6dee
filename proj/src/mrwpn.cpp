#include "rwpnn/mrwpn.hpp"

#include <cmath>
#include <string>

namespace rwpnn {

namespace {
// Below this the per-view scale is folded into the raw coefficients. Keeps
// alpha * Phi / scale comfortably inside double range (scale = 0 happens
// immediately for alpha = 1).
constexpr double kFlushThreshold = 1e-120;
}  // namespace

ReceptiveFieldSet::ReceptiveFieldSet(std::vector<double> gammas)
    : gammas_(std::move(gammas)) {
  if (gammas_.empty())
    throw ContractViolation("forgetting factor set must be non-empty");
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (!(gammas_[i] > 0.0) || gammas_[i] > 1.0)
      throw ContractViolation("forgetting factor " +
                              std::to_string(gammas_[i]) +
                              " outside (0, 1]");
    if (i > 0 && gammas_[i] >= gammas_[i - 1])
      throw ContractViolation(
          "forgetting factors must be strictly descending");
  }
}

ReceptiveFieldSet ReceptiveFieldSet::defaults() {
  return ReceptiveFieldSet({1.0, 1.0 / 10, 1.0 / 100, 1.0 / 500, 1.0 / 1000});
}

MrwpnModel::MrwpnModel(FrameGrid grid, ReceptiveFieldSet gammas)
    : grid_(std::move(grid)), gammas_(std::move(gammas)) {
  raw_.setZero(grid_.total_count(), gammas_.size());
  view_scale_.setOnes(gammas_.size());
}

void MrwpnModel::flush_view(int view) {
  raw_.col(view) *= view_scale_[view];
  view_scale_[view] = 1.0;
}

void MrwpnModel::update_online(const Eigen::VectorXd& x) {
  const auto relevant = grid_.find_relevant_frames(x);

  Eigen::VectorXd phi(static_cast<Eigen::Index>(relevant.size()));
  for (std::size_t l = 0; l < relevant.size(); ++l)
    phi[static_cast<Eigen::Index>(l)] =
        grid_.radial_frame_eval(relevant[l], x);

  for (int i = 0; i < gammas_.size(); ++i) {
    const double alpha = gammas_[i];
    view_scale_[i] *= 1.0 - alpha;
    if (view_scale_[i] < kFlushThreshold) flush_view(i);
    const double gain = alpha / view_scale_[i];
    for (std::size_t l = 0; l < relevant.size(); ++l)
      raw_(relevant[l], i) += gain * phi[static_cast<Eigen::Index>(l)];
  }
  ++points_seen_;
}

DensityEstimate MrwpnModel::estimate_density(const Eigen::VectorXd& x) const {
  const auto relevant = grid_.find_relevant_frames(x);

  DensityEstimate estimate;
  estimate.per_view.setZero(gammas_.size());
  estimate.relevant_count = static_cast<std::int64_t>(relevant.size());
  for (const std::int64_t b : relevant) {
    const double phi = grid_.radial_frame_eval(b, x);
    for (int i = 0; i < gammas_.size(); ++i)
      estimate.per_view[i] += view_scale_[i] * raw_(b, i) * phi;
  }
  return estimate;
}

double MrwpnModel::coefficient(std::int64_t frame, int view) const {
  if (frame < 0 || frame >= grid_.total_count())
    throw ContractViolation("frame index out of range");
  if (view < 0 || view >= gammas_.size())
    throw ContractViolation("view index out of range");
  return view_scale_[view] * raw_(frame, view);
}

Eigen::MatrixXd MrwpnModel::coefficients() const {
  Eigen::MatrixXd w(grid_.total_count(), gammas_.size());
  for (int i = 0; i < gammas_.size(); ++i)
    w.col(i) = view_scale_[i] * raw_.col(i);
  return w;
}

void MrwpnModel::save(io::BinaryWriter& writer) const {
  writer.i32(grid_.resolution());
  writer.i32(grid_.order().m());
  writer.i32(grid_.dim());
  writer.i32(gammas_.size());
  for (const double g : gammas_.values()) writer.f64(g);
  writer.u64(points_seen_);
  const Eigen::MatrixXd w = coefficients();  // column per view
  writer.f64_array(w.data(), static_cast<std::size_t>(w.size()));
}

void MrwpnModel::save(const std::filesystem::path& path) const {
  io::BinaryWriter writer;
  save(writer);
  writer.write_file(path, io::FileKind::mrwpn_model);
}

MrwpnModel MrwpnModel::load(io::BinaryReader& reader) {
  const int j0 = reader.i32();
  const int m = reader.i32();
  const int n = reader.i32();
  const int views = reader.i32();
  if (views <= 0) throw FormatError("model file declares no views");
  std::vector<double> gammas(views);
  for (double& g : gammas) g = reader.f64();

  MrwpnModel model(FrameGrid(j0, SplineOrder::of(m), n),
                   ReceptiveFieldSet(std::move(gammas)));
  model.points_seen_ = reader.u64();
  Eigen::MatrixXd w(model.grid_.total_count(), views);
  reader.f64_array(w.data(), static_cast<std::size_t>(w.size()));
  model.raw_ = w;
  model.view_scale_.setOnes(views);
  return model;
}

MrwpnModel MrwpnModel::load(const std::filesystem::path& path) {
  io::BinaryReader reader = io::BinaryReader::open(path, io::FileKind::mrwpn_model);
  return load(reader);
}

Eigen::VectorXd update_batch(const FrameGrid& grid,
                             const std::vector<Eigen::VectorXd>& data) {
  if (data.empty())
    throw ContractViolation("batch coefficient estimate needs data");
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(grid.total_count());
  for (const auto& x : data) {
    for (const std::int64_t b : grid.find_relevant_frames(x))
      coeffs[b] += grid.radial_frame_eval(b, x);
  }
  coeffs /= static_cast<double>(data.size());
  return coeffs;
}

double batch_density(const FrameGrid& grid, const Eigen::VectorXd& coeffs,
                     const Eigen::VectorXd& x) {
  if (coeffs.size() != grid.total_count())
    throw ContractViolation("coefficient vector does not match grid");
  double density = 0.0;
  for (const std::int64_t b : grid.find_relevant_frames(x))
    density += coeffs[b] * grid.radial_frame_eval(b, x);
  return density;
}

bool ensemble_equivalence_check(const FrameGrid& grid,
                                const ReceptiveFieldSet& gammas,
                                const std::vector<Eigen::VectorXd>& stream) {
  MrwpnModel ensemble(grid, gammas);
  std::vector<MrwpnModel> singles;
  singles.reserve(gammas.size());
  for (int i = 0; i < gammas.size(); ++i)
    singles.emplace_back(grid, ReceptiveFieldSet({gammas[i]}));

  for (const auto& x : stream) {
    ensemble.update_online(x);
    for (auto& single : singles) single.update_online(x);
  }

  const Eigen::MatrixXd w = ensemble.coefficients();
  for (int i = 0; i < gammas.size(); ++i) {
    const Eigen::MatrixXd wi = singles[static_cast<std::size_t>(i)].coefficients();
    for (Eigen::Index f = 0; f < w.rows(); ++f)
      if (w(f, i) != wi(f, 0)) return false;
  }
  return true;
}

}  // namespace rwpnn
