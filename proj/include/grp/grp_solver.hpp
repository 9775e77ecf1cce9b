#pragma once

#include <utility>

#include "grp/riemann_exact.hpp"

namespace grp {

/// Piecewise-linear interface data: limit values and one-sided slopes.
struct GrpInput {
  PrimitiveState left;
  SlopeState left_slope;
  PrimitiveState right;
  SlopeState right_slope;
};

/// Instantaneous interface time derivatives feeding the second-order flux.
/// The material derivatives (D0/Dt following the fluid at the interface) are
/// populated on the nonlinear path and satisfy
///   du_dt = mat_du_dt + u* mat_dp_dt/(rho* c*^2),
///   dp_dt = mat_dp_dt + u* rho* mat_du_dt.
struct GrpDerivatives {
  double du_dt = 0.0;
  double dp_dt = 0.0;
  double drho_dt = 0.0;
  double mat_du_dt = 0.0;
  double mat_dp_dt = 0.0;
  bool has_material = false;
};

/// One linear side relation a (D0u/Dt)* + b (D0p/Dt)* = d.
struct SideCoefficients {
  double a;
  double b;
  double d;
};

enum class GrpPath {
  UpwindLeft,
  UpwindRight,
  SonicLeft,
  SonicRight,
  Acoustic,
  Nonlinear,
  FallbackAcoustic,
  FallbackGodunov,
};

struct GrpConfig {
  /// Acoustic path when max(|dp|/min p, |du|/min c, |drho|/min rho) < this.
  double acoustic_threshold = 0.01;
  SolveControls riemann{};
  /// Never take the nonlinear branch (the acoustic one-stage scheme).
  bool force_acoustic = false;
};

struct GrpResult {
  PrimitiveState star;
  GrpDerivatives deriv;
  GrpPath path;
};

/// Expansion factor Theta(beta)/Theta(beta_L) = (c_beta/c_L)^(1/(2 mu^2))
/// of a polytropic fan; 1 at the fan head.
double theta_ratio(double c_beta, double c_left, const GasModel& gas);

/// Entropy-gradient damping (T s_x)(0,beta) / (T_L s'_L) = theta^(1/mu^2 + 1)
/// across a polytropic fan; 1 at the fan head.
double entropy_rate_ratio(double theta, const GasModel& gas);

/// Rarefaction-side relation (a_L, b_L, d_L) for a left fan, evaluated at the
/// 1* state. Throws WrongWaveKind when the left wave is a shock.
SideCoefficients rarefaction_side_coefficients(const PrimitiveState& left,
                                               const SlopeState& left_slope,
                                               const RiemannFan& fan, const GasModel& gas);

/// Shock-side relation (a_R, b_R, d_R) for a right shock, evaluated at the
/// 2* state. Throws WrongWaveKind when the right wave is a rarefaction.
SideCoefficients shock_side_coefficients(const PrimitiveState& right,
                                         const SlopeState& right_slope,
                                         const RiemannFan& fan, const GasModel& gas);

/// Exact 2x2 solve of the two side relations for ((D0u/Dt)*, (D0p/Dt)*).
/// Throws SingularSystem when the determinant degenerates.
std::pair<double, double> solve_material_derivatives(const SideCoefficients& left,
                                                     const SideCoefficients& right);

/// Convert material to temporal derivatives with the smooth-region equations,
/// using the star state on the interface side.
std::pair<double, double> material_to_temporal(double mat_du, double mat_dp,
                                               const PrimitiveState& star,
                                               const GasModel& gas);

/// (d rho/dt)* once the other derivatives are known: entropy advection through
/// the fan when the interface-side wave is a rarefaction, the shock-tracking
/// relation when it is a shock.
double density_time_derivative(const RiemannFan& fan, const GrpInput& input,
                               const GrpDerivatives& so_far, const GasModel& gas);

/// Linearized (acoustic) derivatives; central formulas when
/// u*-c* < 0 < u*+c*, one-sided upwind evaluation otherwise.
GrpDerivatives acoustic_grp(const GrpInput& input, const GasModel& gas);

/// Nonlinear derivatives assembled from the side relations of the solved fan.
GrpDerivatives nonlinear_grp(const GrpInput& input, const RiemannFan& fan,
                             const GasModel& gas);

/// Full interface solver: upwind / sonic / acoustic / nonlinear dispatch with
/// the fallback ladder nonlinear -> acoustic -> zero derivatives.
GrpResult grp_interface_dispatch(const GrpInput& input, const GasModel& gas,
                                 const GrpConfig& config = {});

/// Second-order numerical flux f(u* + dt/2 (du/dt)*). Throws NonPhysicalState
/// when the midpoint state loses positivity (dt too large).
FluxVector grp_flux(const GrpInput& input, const GasModel& gas, double dt,
                    const GrpConfig& config = {});

/// Midpoint-state flux from an already-dispatched interface.
FluxVector midpoint_flux(const PrimitiveState& star, const GrpDerivatives& deriv,
                         double dt, const GasModel& gas);

/// Scale factor in (0,1] keeping the extrapolation star + tau*deriv within a
/// trust fraction of the star state itself; 1 wherever the flow resolves the
/// data (the linearization's own validity region).
double derivative_trust(const PrimitiveState& star, const GrpDerivatives& deriv, double tau,
                        const GasModel& gas);

GrpInput mirror(const GrpInput& input);
GrpDerivatives mirror(const GrpDerivatives& d);

}  // namespace grp
