#pragma once

#include "gfid/phase_space.hpp"
#include "gfid/states.hpp"

namespace gfid {

/// Gaussian channel acting as Gamma -> A Gamma A^T + G, D -> A D.
///
/// The constructor only checks shapes: channels that fail the positivity
/// checks are representable so that `validate` can report on them.
class GaussianChannel {
 public:
  GaussianChannel(Matrix a, Matrix g);

  int modes() const { return static_cast<int>(a_.rows() / 2); }
  const Matrix& a() const { return a_; }
  const Matrix& g() const { return g_; }

 private:
  Matrix a_;
  Matrix g_;
};

/// Correlated noise between two channel uses: variance N, correlation x.
struct MemoryNoiseSpec {
  double noise;        // N >= 0
  double correlation;  // x in [0, 1]
};

struct ValidityReport {
  bool paper_condition;  // G symmetric and PSD
  bool cp_condition;     // G + (i/2)(Omega - A Omega A^T) PSD
  double g_min_eig;
  double cp_min_eig;
};

GaussianState apply(const GaussianChannel& c, const GaussianState& s);

/// Channel equivalent to applying `first`, then `second`.
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);

GaussianChannel identity_channel(int n);
GaussianChannel amplifier(double eta);
GaussianChannel attenuator(double eta);
GaussianChannel classical_noise(const Matrix& g);

/// Two-mode channel with A = I and G = gamma_N.
GaussianChannel memory_channel(const MemoryNoiseSpec& spec);
Matrix memory_noise_covariance(const MemoryNoiseSpec& spec);

ValidityReport validate(const GaussianChannel& c);

}  // namespace gfid
