#pragma once

#include "grp/gas_model.hpp"

namespace grp {

enum class WaveKind { Shock, Rarefaction };

/// Star-pressure iteration controls. Newton from the two-rarefaction guess
/// with a bisection fallback; tol is relative on the pressure update.
struct SolveControls {
  double tol = 1e-12;
  int max_iter = 100;
};

/// Full structure of the associated Riemann solution R^A(x/t; u_L, u_R).
///
/// For a left rarefaction, left_head = u_L - c_L <= left_tail = u* - c_1*.
/// For a left shock both equal sigma_L. The right wave mirrors this with
/// right_tail <= right_head (head is the outermost speed).
struct RiemannFan {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_1star = 0.0;  // density left of the contact
  double rho_2star = 0.0;  // density right of the contact
  double c_1star = 0.0;
  double c_2star = 0.0;
  WaveKind left_kind = WaveKind::Rarefaction;
  WaveKind right_kind = WaveKind::Rarefaction;
  double left_head = 0.0;
  double left_tail = 0.0;
  double right_tail = 0.0;
  double right_head = 0.0;
};

struct WaveSpeeds {
  double left_head, left_tail;   // or sigma_L twice for a left shock
  double contact;                // u_star
  double right_tail, right_head; // or sigma_R twice for a right shock
};

/// Post-shock density H(p; behind) from the Hugoniot relation; H(p_b) = rho_b.
double hugoniot_density(double p, const PrimitiveState& behind, const GasModel& gas);

/// Analytic partials of H at (p; behind): H1 = dH/dp, H2 = dH/dp_behind,
/// H3 = dH/drho_behind.
struct HugoniotDerivatives {
  double dp;
  double dp_behind;
  double drho_behind;
};
HugoniotDerivatives hugoniot_density_derivatives(double p, const PrimitiveState& behind,
                                                 const GasModel& gas);

/// Velocity jump magnitude Phi(p; behind) = sqrt((rho-rho_b)(p-p_b)/(rho rho_b))
/// across a shock of strength p (with rho = H(p; behind)).
double shock_velocity_jump(double p, const PrimitiveState& behind, const GasModel& gas);

/// Analytic partials of Phi at (p; behind).
struct PhiDerivatives {
  double dp;
  double dp_behind;
  double drho_behind;
};
PhiDerivatives shock_velocity_jump_derivatives(double p, const PrimitiveState& behind,
                                               const GasModel& gas);

/// Signed velocity change across a rarefaction to pressure p <= p_behind,
/// in the u-matching convention u* = u_L - f_L(p*) = u_R + f_R(p*):
/// (2 c_b/(gamma-1)) ((p/p_b)^((gamma-1)/(2 gamma)) - 1).
double rarefaction_velocity_jump(double p, const PrimitiveState& behind, const GasModel& gas);

/// Exact star state of the associated Riemann problem.
/// Throws VacuumFormation when the data opens a vacuum and NoConvergence when
/// the pressure iteration exceeds its budget.
RiemannFan solve_star(const PrimitiveState& left, const PrimitiveState& right,
                      const GasModel& gas, const SolveControls& controls = {});

/// Self-similar sampling of the solved fan at xi = x/t.
PrimitiveState sample(const RiemannFan& fan, const PrimitiveState& left,
                      const PrimitiveState& right, const GasModel& gas, double xi);

WaveSpeeds wave_speeds(const RiemannFan& fan);

}  // namespace grp
