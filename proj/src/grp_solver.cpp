#include "grp/grp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace grp {

namespace {

RiemannFan mirror_fan(const RiemannFan& fan) {
  RiemannFan m;
  m.p_star = fan.p_star;
  m.u_star = -fan.u_star;
  m.rho_1star = fan.rho_2star;
  m.rho_2star = fan.rho_1star;
  m.c_1star = fan.c_2star;
  m.c_2star = fan.c_1star;
  m.left_kind = fan.right_kind;
  m.right_kind = fan.left_kind;
  m.left_head = -fan.right_head;
  m.left_tail = -fan.right_tail;
  m.right_tail = -fan.left_tail;
  m.right_head = -fan.left_head;
  return m;
}

// Smooth one-sided (Lax-Wendroff) evaluation: time derivatives from the
// primitive-form Euler equations at a single state with its slopes.
GrpDerivatives one_sided_lw(const PrimitiveState& s, const SlopeState& d,
                            const GasModel& gas) {
  const double c2 = gas.gamma() * s.p / s.rho;
  GrpDerivatives out;
  out.drho_dt = -(s.u * d.drho + s.rho * d.du);
  out.du_dt = -(s.u * d.du + d.dp / s.rho);
  out.dp_dt = -(s.u * d.dp + s.rho * c2 * d.du);
  out.mat_du_dt = -d.dp / s.rho;
  out.mat_dp_dt = -s.rho * c2 * d.du;
  out.has_material = true;
  return out;
}

// Central acoustic formulas at a given star state; valid for
// u*-c* <= 0 <= u*+c*. Density branch selected by the sign of u*.
GrpDerivatives acoustic_at_state(const PrimitiveState& star, const SlopeState& dl,
                                 const SlopeState& dr, const GasModel& gas) {
  const double c = sound_speed(star, gas);
  const double rc = star.rho * c;
  const double a = dl.du + dl.dp / rc;
  const double b = dr.du - dr.dp / rc;
  GrpDerivatives out;
  out.du_dt = -0.5 * ((star.u + c) * a + (star.u - c) * b);
  out.dp_dt = -0.5 * rc * ((star.u + c) * a - (star.u - c) * b);
  const SlopeState& up = star.u >= 0.0 ? dl : dr;
  out.drho_dt = (out.dp_dt + star.u * (up.dp - c * c * up.drho)) / (c * c);
  return out;
}

double relative_jump(const GrpInput& in, const GasModel& gas) {
  const double cl = sound_speed(in.left, gas);
  const double cr = sound_speed(in.right, gas);
  const double jp = std::abs(in.left.p - in.right.p) / std::min(in.left.p, in.right.p);
  const double ju = std::abs(in.left.u - in.right.u) / std::min(cl, cr);
  const double jr = std::abs(in.left.rho - in.right.rho) / std::min(in.left.rho, in.right.rho);
  return std::max({jp, ju, jr});
}

PrimitiveState interface_star(const RiemannFan& fan) {
  if (fan.u_star >= 0.0) return {fan.rho_1star, fan.u_star, fan.p_star};
  return {fan.rho_2star, fan.u_star, fan.p_star};
}

// (drho/dt)* from the equation of state dp = c^2 drho + p_s ds, with the
// interface entropy advection rate ds/dt = -u* s' (c_side/c*) Pi^-2.
// Written in T-weighted form: (dp/ds)(ds/dt) = -(g-1) rho* u* (T s') rate.
// The same expression serves the mirrored (right-fan) side with that side's
// T s' and the unmirrored u*.
double rarefaction_density_rate(double star_rho, double star_c, double u_star,
                                double ts_prime, double theta, double dp_dt,
                                const GasModel& gas) {
  const double rate = entropy_rate_ratio(theta, gas);
  const double entropy_term = (gas.gamma() - 1.0) * star_rho * u_star * ts_prime * rate;
  return (dp_dt + entropy_term) / (star_c * star_c);
}

// Shock-tracking relation of the right shock: g_rho (drho/dt)* =
// u* h_R - g_p (Dp/Dt)* - g_u (Du/Dt)*. rho_t is mirror-invariant, so the
// left-shock case feeds mirrored inputs and uses the result directly.
double shock_density_rate(const PrimitiveState& right, const SlopeState& dr,
                          const RiemannFan& fan, double mat_du, double mat_dp,
                          const GasModel& gas) {
  const double sigma = fan.right_head;
  const double u_star = fan.u_star;
  const double c2s2 = fan.c_2star * fan.c_2star;
  const auto h = hugoniot_density_derivatives(fan.p_star, right, gas);
  const double cr2 = gas.gamma() * right.p / right.rho;

  const double g_rho = u_star - sigma;  // negative: sigma > u* across the shock
  const double g_p = sigma / c2s2 - u_star * h.dp;
  const double g_u = u_star * fan.rho_2star * (sigma - u_star) * h.dp;
  const double h_r = (sigma - right.u) * h.dp_behind * dr.dp +
                     (sigma - right.u) * h.drho_behind * dr.drho -
                     right.rho * (h.dp_behind * cr2 + h.drho_behind) * dr.du;
  return (u_star * h_r - g_p * mat_dp - g_u * mat_du) / g_rho;
}

bool all_finite(const GrpDerivatives& d) {
  return std::isfinite(d.du_dt) && std::isfinite(d.dp_dt) && std::isfinite(d.drho_dt);
}

}  // namespace

double theta_ratio(double c_beta, double c_left, const GasModel& gas) {
  return std::pow(c_beta / c_left, 1.0 / (2.0 * gas.mu2()));
}

double entropy_rate_ratio(double theta, const GasModel& gas) {
  return std::pow(theta, 1.0 / gas.mu2() + 1.0);
}

SideCoefficients rarefaction_side_coefficients(const PrimitiveState& left,
                                               const SlopeState& left_slope,
                                               const RiemannFan& fan, const GasModel& gas) {
  if (fan.left_kind != WaveKind::Rarefaction) {
    throw WrongWaveKind("left wave is a shock; rarefaction-side relation does not apply");
  }
  const double mu2 = gas.mu2();
  const double cl = sound_speed(left, gas);
  const double theta = fan.c_1star / cl;
  const double tr = theta_ratio(fan.c_1star, cl, gas);
  const double ts = initial_entropy_gradient(left, left_slope, gas);
  const double psi = psi_gradient(left, left_slope, gas);

  const double entropy_coef = (1.0 + mu2) / (1.0 + 2.0 * mu2) * tr +
                              mu2 / (1.0 + 2.0 * mu2) * std::pow(theta, (1.0 + mu2) / mu2);
  SideCoefficients out;
  out.a = 1.0;
  out.b = 1.0 / (fan.rho_1star * fan.c_1star);
  out.d = entropy_coef * ts - cl * tr * psi;
  return out;
}

SideCoefficients shock_side_coefficients(const PrimitiveState& right,
                                         const SlopeState& right_slope,
                                         const RiemannFan& fan, const GasModel& gas) {
  if (fan.right_kind != WaveKind::Shock) {
    throw WrongWaveKind("right wave is a rarefaction; shock-side relation does not apply");
  }
  const double sigma = fan.right_head;
  const auto phi = shock_velocity_jump_derivatives(fan.p_star, right, gas);
  const double cr2 = gas.gamma() * right.p / right.rho;

  SideCoefficients out;
  out.a = 1.0 + fan.rho_2star * (sigma - fan.u_star) * phi.dp;
  out.b = -((sigma - fan.u_star) / (fan.rho_2star * fan.c_2star * fan.c_2star) + phi.dp);
  const double l_p = -1.0 / right.rho + (sigma - right.u) * phi.dp_behind;
  const double l_u =
      sigma - right.u - right.rho * cr2 * phi.dp_behind - right.rho * phi.drho_behind;
  const double l_rho = (sigma - right.u) * phi.drho_behind;
  out.d = l_p * right_slope.dp + l_u * right_slope.du + l_rho * right_slope.drho;
  return out;
}

std::pair<double, double> solve_material_derivatives(const SideCoefficients& left,
                                                     const SideCoefficients& right) {
  const double det = left.a * right.b - right.a * left.b;
  const double scale =
      std::max(std::abs(left.a * right.b), std::abs(right.a * left.b));
  if (std::abs(det) < 1e-14 * std::max(scale, std::numeric_limits<double>::min())) {
    throw SingularSystem("kinematic-thermodynamic side relations are parallel");
  }
  const double mat_du = (left.d * right.b - right.d * left.b) / det;
  const double mat_dp = (left.a * right.d - right.a * left.d) / det;
  return {mat_du, mat_dp};
}

std::pair<double, double> material_to_temporal(double mat_du, double mat_dp,
                                               const PrimitiveState& star,
                                               const GasModel& gas) {
  const double c2 = gas.gamma() * star.p / star.rho;
  const double du_dt = mat_du + star.u * mat_dp / (star.rho * c2);
  const double dp_dt = mat_dp + star.u * star.rho * mat_du;
  return {du_dt, dp_dt};
}

double density_time_derivative(const RiemannFan& fan, const GrpInput& input,
                               const GrpDerivatives& so_far, const GasModel& gas) {
  if (fan.u_star >= 0.0) {
    if (fan.left_kind == WaveKind::Rarefaction) {
      const double cl = sound_speed(input.left, gas);
      const double ts = initial_entropy_gradient(input.left, input.left_slope, gas);
      return rarefaction_density_rate(fan.rho_1star, fan.c_1star, fan.u_star, ts,
                                      fan.c_1star / cl, so_far.dp_dt, gas);
    }
    return shock_density_rate(mirror(input.left), mirror(input.left_slope), mirror_fan(fan),
                              -so_far.mat_du_dt, so_far.mat_dp_dt, gas);
  }
  if (fan.right_kind == WaveKind::Shock) {
    return shock_density_rate(input.right, input.right_slope, fan, so_far.mat_du_dt,
                              so_far.mat_dp_dt, gas);
  }
  const double cr = sound_speed(input.right, gas);
  const double ts = initial_entropy_gradient(input.right, input.right_slope, gas);
  return rarefaction_density_rate(fan.rho_2star, fan.c_2star, fan.u_star, ts,
                                  fan.c_2star / cr, so_far.dp_dt, gas);
}

GrpDerivatives acoustic_grp(const GrpInput& input, const GasModel& gas) {
  const PrimitiveState star{0.5 * (input.left.rho + input.right.rho),
                            0.5 * (input.left.u + input.right.u),
                            0.5 * (input.left.p + input.right.p)};
  const double c = sound_speed(star, gas);
  if (star.u - c >= 0.0) return one_sided_lw(input.left, input.left_slope, gas);
  if (star.u + c <= 0.0) return one_sided_lw(input.right, input.right_slope, gas);
  return acoustic_at_state(star, input.left_slope, input.right_slope, gas);
}

GrpDerivatives nonlinear_grp(const GrpInput& input, const RiemannFan& fan,
                             const GasModel& gas) {
  SideCoefficients cl;
  if (fan.left_kind == WaveKind::Rarefaction) {
    cl = rarefaction_side_coefficients(input.left, input.left_slope, fan, gas);
  } else {
    const SideCoefficients m = shock_side_coefficients(
        mirror(input.left), mirror(input.left_slope), mirror_fan(fan), gas);
    cl = {-m.a, m.b, m.d};
  }
  SideCoefficients cr;
  if (fan.right_kind == WaveKind::Shock) {
    cr = shock_side_coefficients(input.right, input.right_slope, fan, gas);
  } else {
    const SideCoefficients m = rarefaction_side_coefficients(
        mirror(input.right), mirror(input.right_slope), mirror_fan(fan), gas);
    cr = {-m.a, m.b, m.d};
  }
  const auto [mat_du, mat_dp] = solve_material_derivatives(cl, cr);

  GrpDerivatives out;
  out.mat_du_dt = mat_du;
  out.mat_dp_dt = mat_dp;
  out.has_material = true;
  const PrimitiveState star = interface_star(fan);
  std::tie(out.du_dt, out.dp_dt) = material_to_temporal(mat_du, mat_dp, star, gas);
  out.drho_dt = density_time_derivative(fan, input, out, gas);
  return out;
}

GrpResult grp_interface_dispatch(const GrpInput& input, const GasModel& gas,
                                 const GrpConfig& config) {
  const RiemannFan fan = solve_star(input.left, input.right, gas, config.riemann);

  if (fan.left_head >= 0.0) {
    return {input.left, one_sided_lw(input.left, input.left_slope, gas), GrpPath::UpwindLeft};
  }
  if (fan.right_head <= 0.0) {
    return {input.right, one_sided_lw(input.right, input.right_slope, gas),
            GrpPath::UpwindRight};
  }
  if (fan.left_kind == WaveKind::Rarefaction && fan.left_head < 0.0 && fan.left_tail > 0.0) {
    const PrimitiveState sonic = sample(fan, input.left, input.right, gas, 0.0);
    return {sonic, acoustic_at_state(sonic, input.left_slope, input.left_slope, gas),
            GrpPath::SonicLeft};
  }
  if (fan.right_kind == WaveKind::Rarefaction && fan.right_tail < 0.0 &&
      fan.right_head > 0.0) {
    const PrimitiveState sonic = sample(fan, input.left, input.right, gas, 0.0);
    return {sonic, acoustic_at_state(sonic, input.right_slope, input.right_slope, gas),
            GrpPath::SonicRight};
  }

  const PrimitiveState star = interface_star(fan);
  if (config.force_acoustic || relative_jump(input, gas) < config.acoustic_threshold) {
    return {star, acoustic_at_state(star, input.left_slope, input.right_slope, gas),
            GrpPath::Acoustic};
  }
  try {
    GrpDerivatives d = nonlinear_grp(input, fan, gas);
    if (!all_finite(d)) {
      return {star, GrpDerivatives{}, GrpPath::FallbackGodunov};
    }
    return {star, d, GrpPath::Nonlinear};
  } catch (const SingularSystem&) {
    GrpDerivatives d = acoustic_at_state(star, input.left_slope, input.right_slope, gas);
    if (!all_finite(d)) {
      return {star, GrpDerivatives{}, GrpPath::FallbackGodunov};
    }
    return {star, d, GrpPath::FallbackAcoustic};
  }
}

double derivative_trust(const PrimitiveState& star, const GrpDerivatives& deriv, double tau,
                        const GasModel& gas) {
  // the linear time extrapolation holds while the state change stays a small
  // fraction of the state itself; beyond that, scale toward the Godunov value
  constexpr double kappa = 0.25;
  const double c = sound_speed(star, gas);
  const double change = std::max({std::abs(tau * deriv.drho_dt) / star.rho,
                                  std::abs(tau * deriv.dp_dt) / star.p,
                                  std::abs(tau * deriv.du_dt) / c});
  return change <= kappa ? 1.0 : kappa / change;
}

FluxVector midpoint_flux(const PrimitiveState& star, const GrpDerivatives& deriv, double dt,
                         const GasModel& gas) {
  const PrimitiveState mid{star.rho + 0.5 * dt * deriv.drho_dt,
                           star.u + 0.5 * dt * deriv.du_dt,
                           star.p + 0.5 * dt * deriv.dp_dt};
  if (!(mid.rho > 0.0) || !(mid.p > 0.0)) {
    throw NonPhysicalState("flux midpoint state lost positivity; reduce dt");
  }
  return euler_flux(mid, gas);
}

FluxVector grp_flux(const GrpInput& input, const GasModel& gas, double dt,
                    const GrpConfig& config) {
  if (!(dt > 0.0)) {
    throw ValidationError("dt", "time step must be positive");
  }
  const GrpResult res = grp_interface_dispatch(input, gas, config);
  return midpoint_flux(res.star, res.deriv, dt, gas);
}

GrpInput mirror(const GrpInput& input) {
  return {mirror(input.right), mirror(input.right_slope), mirror(input.left),
          mirror(input.left_slope)};
}

GrpDerivatives mirror(const GrpDerivatives& d) {
  GrpDerivatives m = d;
  m.du_dt = -d.du_dt;
  m.mat_du_dt = -d.mat_du_dt;
  return m;
}

}  // namespace grp
