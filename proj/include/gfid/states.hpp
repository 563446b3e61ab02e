#pragma once

#include <complex>
#include <vector>

#include "gfid/phase_space.hpp"

namespace gfid {

/// Gaussian state in covariance-matrix form (hbar = 1, vacuum covariance I/2,
/// interleaved quadrature ordering).
class GaussianState {
 public:
  /// Checks shapes and symmetry of the covariance; physicality is not
  /// enforced here so that callers can inspect arbitrary (Gamma, D) pairs.
  GaussianState(Matrix covariance, Vector displacement);

  int modes() const { return static_cast<int>(covariance_.rows() / 2); }
  const Matrix& covariance() const { return covariance_; }
  const Vector& displacement() const { return displacement_; }

  /// min eigenvalue of Gamma + (i/2) Omega, the uncertainty-principle check.
  double physicality_margin() const;
  bool is_physical() const;

 private:
  Matrix covariance_;
  Vector displacement_;
};

GaussianState vacuum(int n);

/// Product of coherent states; D = sqrt(2) (Re a1, Im a1, ..., Re an, Im an).
GaussianState coherent(const std::vector<std::complex<double>>& amplitudes);

/// Two-mode squeezed vacuum with squeeze parameter r.
GaussianState two_mode_squeezed(double r);

/// Single-mode squeezed vacuum, Gamma = diag(e^{-2r}, e^{2r}) / 2.
GaussianState squeezed_vacuum(double r);

/// 1 / sqrt(det(2 Gamma)). Throws InvalidState for non-physical states.
double purity(const GaussianState& s);

/// exp(-1/2 eps Gamma eps^T + i D . eps)
std::complex<double> char_function(const GaussianState& s, const Vector& eps);

}  // namespace gfid
