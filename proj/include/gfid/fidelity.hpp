#pragma once

#include "gfid/channels.hpp"
#include "gfid/states.hpp"

namespace gfid {

/// Input-output fidelity split into its determinant and displacement parts.
struct FidelityResult {
  double value;
  double det_factor;        // 1 / sqrt(det M),  M = A Gamma A^T + Gamma + G
  double disp_factor;       // exp(-1/2 delta M^{-1} delta^T),  delta = D A^T - D
  double matrix_condition;  // condition number of M
};

/// Purity below 1 - kPurityTol is rejected by channel_fidelity.
inline constexpr double kPurityTol = 1e-6;

/// Tr(rho1 rho2) for two Gaussian states.
double overlap(const GaussianState& s1, const GaussianState& s2);

/// Tr(rho_in T(rho_in)) for a pure Gaussian input, evaluated in closed form.
/// Throws PreconditionError for mixed inputs, SingularMatrix if M is not SPD.
FidelityResult channel_fidelity(const GaussianChannel& c, const GaussianState& s);

/// Product coherent input through the two-mode memory channel:
/// 1 / ((N+1)^2 - N^2 x^2).
double closed_form_memory(double noise, double correlation);

struct FidelityBounds {
  double lower;
  double upper;
};

/// Extremes of closed_form_memory over x in [0, 1]: lower = 1/(N+1)^2 at
/// x = 0, upper = 1/(2N+1) at x = 1.
FidelityBounds memory_bounds(double noise);

/// Two-mode squeezed input through the memory channel:
/// 1 / (1 + N^2 + 2N cosh 2r - x^2 N^2 - 2xN sinh 2r).
double closed_form_entangled(double noise, double correlation, double r);

/// 2 / (3 eta - 1), attained by the vacuum input.
double amplifier_max_fidelity(double eta);

}  // namespace gfid
