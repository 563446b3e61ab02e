#pragma once

#include <cstdint>

#include "gfid/channels.hpp"
#include "gfid/states.hpp"

namespace gfid {

/// Uniform midpoint grid on [-half_width, half_width]^{2n}.
struct QuadratureGrid {
  double half_width = 8.0;
  int points_per_axis = 201;
};

inline constexpr double kMaxGridPoints = 1e8;

struct McConfig {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

struct McEstimate {
  double estimate;
  double std_error;
};

/// Fidelity by direct midpoint quadrature of the phase-space trace integral
/// (2 pi)^{-n} int exp(-1/2 eps M eps^T) cos(delta . eps) d^{2n} eps.
/// Supports n <= 2. The result does not depend on `threads`.
double quad_fidelity(const GaussianChannel& c, const GaussianState& s, const QuadratureGrid& grid, int threads = 1);

/// Monte-Carlo fidelity for classical-noise channels (A = I): the mean of
/// exp(-1/4 d Gamma^{-1} d^T) over displacements d ~ Normal(0, G).
/// Chunks of samples draw from streams seeded by mix_seed(seed, chunk), so
/// the output is independent of `threads`.
McEstimate mc_fidelity(const GaussianChannel& c, const GaussianState& s, const McConfig& cfg, int threads = 1);

}  // namespace gfid
