#include "gfid/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gfid/errors.hpp"
#include "gfid/fidelity.hpp"
#include "gfid/parallel.hpp"

namespace gfid {
namespace {

constexpr std::int64_t kMcChunk = 1 << 16;

void require_pure(const GaussianState& s, const char* what) {
  double p = 0.0;
  try {
    p = purity(s);
  } catch (const InvalidState& e) {
    throw PreconditionError(std::string(what) + ": " + e.what());
  }
  if (p < 1.0 - kPurityTol) throw PreconditionError(std::string(what) + ": input state must be pure");
}

struct RunningStats {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;
};

RunningStats merge(const RunningStats& a, const RunningStats& b) {
  if (a.count == 0.0) return b;
  if (b.count == 0.0) return a;
  RunningStats out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * (b.count / out.count);
  out.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / out.count);
  return out;
}

RunningStats merge_tree(std::span<const RunningStats> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  return merge(merge_tree(parts.first(half)), merge_tree(parts.subspan(half)));
}

}  // namespace

double quad_fidelity(const GaussianChannel& c, const GaussianState& s, const QuadratureGrid& grid, int threads) {
  if (c.modes() != s.modes()) throw InvalidArgument("quad_fidelity: mode counts differ");
  if (s.modes() > 2) throw UnsupportedDimension("quad_fidelity: only n <= 2 modes are supported");
  if (!(grid.half_width > 0.0) || !std::isfinite(grid.half_width)) {
    throw InvalidArgument("quad_fidelity: half_width must be > 0");
  }
  if (grid.points_per_axis < 16) throw InvalidArgument("quad_fidelity: points_per_axis must be >= 16");
  const int dim = 2 * s.modes();
  const double total = std::pow(static_cast<double>(grid.points_per_axis), dim);
  if (total > kMaxGridPoints) {
    throw InvalidArgument("quad_fidelity: grid of " + std::to_string(total) + " points exceeds the 1e8 limit");
  }
  require_pure(s, "quad_fidelity");

  const Matrix& gamma = s.covariance();
  const Matrix m = c.a() * gamma * c.a().transpose() + gamma + c.g();
  const Vector delta = c.a() * s.displacement() - s.displacement();

  const int pts = grid.points_per_axis;
  const double h = 2.0 * grid.half_width / pts;
  std::vector<double> nodes(static_cast<std::size_t>(pts));
  for (int k = 0; k < pts; ++k) nodes[static_cast<std::size_t>(k)] = -grid.half_width + (k + 0.5) * h;

  // One slice per node of the first axis; each slice is summed serially.
  const auto inner = static_cast<std::int64_t>(std::llround(total / pts));
  std::vector<double> slice_sums(static_cast<std::size_t>(pts));
  parallel_for(slice_sums.size(), threads, [&](std::size_t first) {
    Vector eps(dim);
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    double sum = 0.0;
    for (std::int64_t flat = 0; flat < inner; ++flat) {
      std::int64_t rem = flat;
      eps(0) = nodes[first];
      for (int ax = dim - 1; ax >= 1; --ax) {
        eps(ax) = nodes[static_cast<std::size_t>(rem % pts)];
        rem /= pts;
      }
      const double q = eps.dot(m * eps);
      sum += std::exp(-0.5 * q) * std::cos(delta.dot(eps));
    }
    slice_sums[first] = sum;
  });

  const double volume = std::pow(h, dim);
  const double norm = std::pow(2.0 * std::numbers::pi, -s.modes());
  return norm * volume * pairwise_sum(slice_sums);
}

McEstimate mc_fidelity(const GaussianChannel& c, const GaussianState& s, const McConfig& cfg, int threads) {
  if (c.modes() != s.modes()) throw InvalidArgument("mc_fidelity: mode counts differ");
  const auto dim = c.a().rows();
  if (c.a() != Matrix::Identity(dim, dim)) {
    throw UnsupportedChannel("mc_fidelity: only classical-noise channels (A = I) are supported");
  }
  if (!is_psd(c.g())) throw InvalidArgument("mc_fidelity: G must be symmetric positive semidefinite");
  if (cfg.samples < 10'000) throw InvalidArgument("mc_fidelity: at least 1e4 samples are required");
  require_pure(s, "mc_fidelity");

  // d = F z with F F^T = G; rank-deficient directions get zero weight.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (c.g() + c.g().transpose()));
  const Vector root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix factor = eig.eigenvectors() * root.asDiagonal();
  const Eigen::LLT<Matrix> chol(s.covariance());

  const std::int64_t chunks = (cfg.samples + kMcChunk - 1) / kMcChunk;
  std::vector<RunningStats> parts(static_cast<std::size_t>(chunks));
  parallel_for(parts.size(), threads, [&](std::size_t k) {
    const std::int64_t begin = static_cast<std::int64_t>(k) * kMcChunk;
    const std::int64_t end = std::min(cfg.samples, begin + kMcChunk);
    std::mt19937_64 rng(mix_seed(cfg.seed, k));
    std::normal_distribution<double> normal;
    Vector z(dim);
    RunningStats st;
    for (std::int64_t i = begin; i < end; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) z(j) = normal(rng);
      const Vector d = factor * z;
      const double value = std::exp(-0.25 * chol.matrixL().solve(d).squaredNorm());
      st.count += 1.0;
      const double diff = value - st.mean;
      st.mean += diff / st.count;
      st.m2 += diff * (value - st.mean);
    }
    parts[k] = st;
  });

  const RunningStats total = merge_tree(parts);
  const double variance = total.m2 / (total.count - 1.0);
  return {total.mean, std::sqrt(variance / total.count)};
}

}  // namespace gfid
