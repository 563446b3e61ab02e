#include "gfid/states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gfid/errors.hpp"

namespace gfid {

GaussianState::GaussianState(Matrix covariance, Vector displacement)
    : covariance_(std::move(covariance)), displacement_(std::move(displacement)) {
  if (covariance_.rows() != covariance_.cols() || covariance_.rows() == 0 || covariance_.rows() % 2 != 0) {
    throw InvalidArgument("GaussianState: covariance must be a non-empty 2n x 2n matrix");
  }
  if (displacement_.size() != covariance_.rows()) {
    throw InvalidArgument("GaussianState: displacement length " + std::to_string(displacement_.size()) +
                          " does not match covariance dimension " + std::to_string(covariance_.rows()));
  }
  if (!covariance_.allFinite() || !displacement_.allFinite()) {
    throw InvalidArgument("GaussianState: non-finite entries");
  }
  if (!is_symmetric(covariance_)) throw InvalidArgument("GaussianState: covariance is not symmetric");
}

double GaussianState::physicality_margin() const {
  const ComplexMatrix h = covariance_.cast<std::complex<double>>() +
                          std::complex<double>(0.0, 0.5) * symplectic_form(modes()).cast<std::complex<double>>();
  return min_eig_hermitian(h);
}

bool GaussianState::is_physical() const { return physicality_margin() >= -kPsdTol; }

GaussianState vacuum(int n) {
  if (n < 1) throw InvalidArgument("vacuum: mode count must be >= 1");
  return {0.5 * Matrix::Identity(2 * n, 2 * n), Vector::Zero(2 * n)};
}

GaussianState coherent(const std::vector<std::complex<double>>& amplitudes) {
  if (amplitudes.empty()) throw InvalidArgument("coherent: at least one amplitude is required");
  const auto n = static_cast<int>(amplitudes.size());
  Vector d(2 * n);
  for (int i = 0; i < n; ++i) {
    d(2 * i) = std::sqrt(2.0) * amplitudes[static_cast<std::size_t>(i)].real();
    d(2 * i + 1) = std::sqrt(2.0) * amplitudes[static_cast<std::size_t>(i)].imag();
  }
  return {0.5 * Matrix::Identity(2 * n, 2 * n), std::move(d)};
}

GaussianState two_mode_squeezed(double r) {
  if (!std::isfinite(r)) throw InvalidArgument("two_mode_squeezed: r must be finite");
  const double c = 0.5 * std::cosh(2.0 * r);
  const double s = 0.5 * std::sinh(2.0 * r);
  Matrix g(4, 4);
  // clang-format off
  g <<  c, 0, -s, 0,
        0, c,  0, s,
       -s, 0,  c, 0,
        0, s,  0, c;
  // clang-format on
  return {std::move(g), Vector::Zero(4)};
}

GaussianState squeezed_vacuum(double r) {
  if (!std::isfinite(r)) throw InvalidArgument("squeezed_vacuum: r must be finite");
  Matrix g = Matrix::Zero(2, 2);
  g(0, 0) = 0.5 * std::exp(-2.0 * r);
  g(1, 1) = 0.5 * std::exp(2.0 * r);
  return {std::move(g), Vector::Zero(2)};
}

double purity(const GaussianState& s) {
  if (!s.is_physical()) throw InvalidState("purity: state violates the uncertainty relation");
  try {
    return 1.0 / sqrt_det(2.0 * s.covariance());
  } catch (const SingularMatrix& e) {
    throw InvalidState(std::string("purity: ") + e.what());
  }
}

std::complex<double> char_function(const GaussianState& s, const Vector& eps) {
  if (eps.size() != s.covariance().rows()) throw InvalidArgument("char_function: dimension mismatch");
  const double quad = eps.dot(s.covariance() * eps);
  const double phase = s.displacement().dot(eps);
  return std::exp(std::complex<double>(-0.5 * quad, phase));
}

}  // namespace gfid
