#include "gfid/fidelity.hpp"

#include <cmath>
#include <string>

#include "gfid/errors.hpp"

namespace gfid {
namespace {

void check_memory_domain(double noise, double correlation, const char* what) {
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw InvalidArgument(std::string(what) + ": N must be >= 0");
  if (!(correlation >= 0.0 && correlation <= 1.0)) {
    throw InvalidArgument(std::string(what) + ": x must lie in [0, 1]");
  }
}

}  // namespace

double overlap(const GaussianState& s1, const GaussianState& s2) {
  if (s1.modes() != s2.modes()) throw InvalidArgument("overlap: mode counts differ");
  const Matrix sum = s1.covariance() + s2.covariance();
  const Vector delta = s1.displacement() - s2.displacement();
  const double quad = delta.dot(spd_solve(sum, delta));
  return std::exp(-0.5 * quad) / sqrt_det(sum);
}

FidelityResult channel_fidelity(const GaussianChannel& c, const GaussianState& s) {
  if (c.modes() != s.modes()) throw InvalidArgument("channel_fidelity: mode counts differ");
  double p = 0.0;
  try {
    p = purity(s);
  } catch (const InvalidState& e) {
    throw PreconditionError(std::string("channel_fidelity: input state is not physical: ") + e.what());
  }
  if (p < 1.0 - kPurityTol) {
    throw PreconditionError("channel_fidelity: input state must be pure (purity " + std::to_string(p) + ")");
  }

  const Matrix& gamma = s.covariance();
  const Matrix m = c.a() * gamma * c.a().transpose() + gamma + c.g();
  const Vector delta = c.a() * s.displacement() - s.displacement();

  FidelityResult r{};
  r.det_factor = 1.0 / sqrt_det(m);
  r.disp_factor = delta.isZero(0.0) ? 1.0 : std::exp(-0.5 * delta.dot(spd_solve(m, delta)));
  r.value = r.det_factor * r.disp_factor;
  r.matrix_condition = condition_number(m);
  return r;
}

double closed_form_memory(double noise, double correlation) {
  check_memory_domain(noise, correlation, "closed_form_memory");
  const double np1 = noise + 1.0;
  const double nx = noise * correlation;
  return 1.0 / (np1 * np1 - nx * nx);
}

FidelityBounds memory_bounds(double noise) {
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw InvalidArgument("memory_bounds: N must be >= 0");
  return {closed_form_memory(noise, 0.0), closed_form_memory(noise, 1.0)};
}

double closed_form_entangled(double noise, double correlation, double r) {
  check_memory_domain(noise, correlation, "closed_form_entangled");
  if (!std::isfinite(r)) throw InvalidArgument("closed_form_entangled: r must be finite");
  const double n = noise;
  const double x = correlation;
  const double denom =
      1.0 + n * n + 2.0 * n * std::cosh(2.0 * r) - x * x * n * n - 2.0 * x * n * std::sinh(2.0 * r);
  return 1.0 / denom;
}

double amplifier_max_fidelity(double eta) {
  if (!(eta >= 1.0) || !std::isfinite(eta)) throw InvalidArgument("amplifier_max_fidelity: eta must be >= 1");
  return 2.0 / (3.0 * eta - 1.0);
}

}  // namespace gfid
