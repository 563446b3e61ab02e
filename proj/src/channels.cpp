#include "gfid/channels.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <algorithm>

#include "gfid/errors.hpp"

namespace gfid {

GaussianChannel::GaussianChannel(Matrix a, Matrix g) : a_(std::move(a)), g_(std::move(g)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0 || a_.rows() % 2 != 0) {
    throw InvalidArgument("GaussianChannel: A must be a non-empty 2n x 2n matrix");
  }
  if (g_.rows() != a_.rows() || g_.cols() != a_.cols()) {
    throw InvalidArgument("GaussianChannel: A and G must have the same shape");
  }
  if (!a_.allFinite() || !g_.allFinite()) throw InvalidArgument("GaussianChannel: non-finite entries");
}

GaussianState apply(const GaussianChannel& c, const GaussianState& s) {
  if (c.modes() != s.modes()) {
    throw InvalidArgument("apply: channel acts on " + std::to_string(c.modes()) + " modes, state has " +
                          std::to_string(s.modes()));
  }
  return {c.a() * s.covariance() * c.a().transpose() + c.g(), c.a() * s.displacement()};
}

GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first) {
  if (second.modes() != first.modes()) throw InvalidArgument("compose: mode counts differ");
  return {second.a() * first.a(), second.a() * first.g() * second.a().transpose() + second.g()};
}

GaussianChannel identity_channel(int n) {
  if (n < 1) throw InvalidArgument("identity_channel: mode count must be >= 1");
  return {Matrix::Identity(2 * n, 2 * n), Matrix::Zero(2 * n, 2 * n)};
}

GaussianChannel amplifier(double eta) {
  if (!(eta >= 1.0) || !std::isfinite(eta)) {
    throw InvalidArgument("amplifier: gain must satisfy eta >= 1 (use attenuator for eta < 1)");
  }
  return {std::sqrt(eta) * Matrix::Identity(2, 2), (eta - 1.0) * Matrix::Identity(2, 2)};
}

GaussianChannel attenuator(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("attenuator: transmissivity must lie in [0, 1]");
  return {std::sqrt(eta) * Matrix::Identity(2, 2), 0.5 * (1.0 - eta) * Matrix::Identity(2, 2)};
}

GaussianChannel classical_noise(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0 || g.rows() % 2 != 0) {
    throw InvalidArgument("classical_noise: G must be a non-empty 2n x 2n matrix");
  }
  if (!is_symmetric(g)) throw InvalidArgument("classical_noise: G is not symmetric");
  if (!is_psd(g)) throw InvalidArgument("classical_noise: G is not positive semidefinite");
  return {Matrix::Identity(g.rows(), g.cols()), g};
}

Matrix memory_noise_covariance(const MemoryNoiseSpec& spec) {
  const double n = spec.noise;
  const double x = spec.correlation;
  if (!(n >= 0.0) || !std::isfinite(n)) throw InvalidArgument("memory_channel: noise variance N must be >= 0");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("memory_channel: correlation x must lie in [0, 1]");
  const double xn = x * n;
  Matrix g(4, 4);
  // clang-format off
  g <<   n,  0, -xn,  0,
         0,  n,   0, xn,
       -xn,  0,   n,  0,
         0, xn,   0,  n;
  // clang-format on
  return g;
}

GaussianChannel memory_channel(const MemoryNoiseSpec& spec) {
  return {Matrix::Identity(4, 4), memory_noise_covariance(spec)};
}

ValidityReport validate(const GaussianChannel& c) {
  ValidityReport report{};
  const bool symmetric = is_symmetric(c.g());
  const Matrix g_sym = 0.5 * (c.g() + c.g().transpose());
  report.g_min_eig = min_eig_symmetric(g_sym);
  report.paper_condition = symmetric && is_psd(g_sym);

  const Matrix omega = symplectic_form(c.modes());
  const Matrix skew = omega - c.a() * omega * c.a().transpose();
  const ComplexMatrix h =
      g_sym.cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * skew.cast<std::complex<double>>();
  // h is Hermitian by construction once G is symmetrized.
  report.cp_min_eig = min_eig_hermitian(0.5 * (h + h.adjoint()));
  const double scale = std::max(1.0, spectral_norm_symmetric(g_sym) + 0.5 * skew.norm());
  report.cp_condition = symmetric && report.cp_min_eig >= -kPsdTol * scale;
  return report;
}

}  // namespace gfid
