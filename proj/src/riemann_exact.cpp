#include "grp/riemann_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace grp {

namespace {

// Pressure function of one side and its p-derivative: the velocity change a
// wave of strength p induces on that side, shock branch for p > p_side and
// rarefaction branch otherwise. u* solves f_L(p) + f_R(p) + u_R - u_L = 0.
std::pair<double, double> pressure_function(double p, const PrimitiveState& s,
                                            const GasModel& gas) {
  const double g = gas.gamma();
  if (p > s.p) {
    const double a = 2.0 / ((g + 1.0) * s.rho);
    const double b = gas.mu2() * s.p;
    const double root = std::sqrt(a / (p + b));
    const double f = (p - s.p) * root;
    const double df = root * (1.0 - 0.5 * (p - s.p) / (p + b));
    return {f, df};
  }
  const double c = sound_speed(s, gas);
  const double z = (g - 1.0) / (2.0 * g);
  const double f = 2.0 * c / (g - 1.0) * (std::pow(p / s.p, z) - 1.0);
  const double df = std::pow(p / s.p, -(g + 1.0) / (2.0 * g)) / (s.rho * c);
  return {f, df};
}

double two_rarefaction_guess(const PrimitiveState& l, const PrimitiveState& r,
                             const GasModel& gas) {
  const double g = gas.gamma();
  const double z = (g - 1.0) / (2.0 * g);
  const double cl = sound_speed(l, gas);
  const double cr = sound_speed(r, gas);
  const double num = cl + cr - 0.5 * (g - 1.0) * (r.u - l.u);
  const double den = cl / std::pow(l.p, z) + cr / std::pow(r.p, z);
  return std::pow(num / den, 1.0 / z);
}

struct SideResult {
  double rho;
  double c;
  WaveKind kind;
  double head;  // outermost speed (sigma for a shock)
  double tail;  // innermost speed (sigma again for a shock)
};

// Right-side wave structure for a solved p*, u*. The left side is obtained
// through the mirror map, so the shock formulas exist in one orientation only.
SideResult solve_side_right(double p_star, double u_star, const PrimitiveState& s,
                            const GasModel& gas) {
  const double g = gas.gamma();
  const double c = sound_speed(s, gas);
  SideResult out{};
  if (p_star > s.p) {
    out.kind = WaveKind::Shock;
    out.rho = gas.hugoniot_density(p_star, s.p, s.rho);
    out.c = gas.sound_speed(out.rho, p_star);
    const double sigma =
        s.u + c * std::sqrt((g + 1.0) / (2.0 * g) * p_star / s.p + (g - 1.0) / (2.0 * g));
    out.head = sigma;
    out.tail = sigma;
  } else {
    out.kind = WaveKind::Rarefaction;
    out.rho = s.rho * std::pow(p_star / s.p, 1.0 / g);
    out.c = gas.sound_speed(out.rho, p_star);
    out.head = s.u + c;
    out.tail = u_star + out.c;
  }
  return out;
}

// Left side of a left fan / shock / star region for xi <= u_star.
PrimitiveState sample_left(const RiemannFan& fan, const PrimitiveState& left,
                           const GasModel& gas, double xi) {
  if (fan.left_kind == WaveKind::Shock) {
    if (xi < fan.left_head) return left;
    return {fan.rho_1star, fan.u_star, fan.p_star};
  }
  if (xi <= fan.left_head) return left;
  if (xi >= fan.left_tail) return {fan.rho_1star, fan.u_star, fan.p_star};
  // inside the fan: u - c = xi and the left Riemann invariant is constant
  const double g = gas.gamma();
  const double cl = sound_speed(left, gas);
  const double psi_l = left.u + 2.0 * cl / (g - 1.0);
  const double c = gas.mu2() * (psi_l - xi);
  const double rho = left.rho * std::pow(c / cl, 2.0 / (g - 1.0));
  const double p = left.p * std::pow(c / cl, 2.0 * g / (g - 1.0));
  return {rho, xi + c, p};
}

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

}  // namespace

double hugoniot_density(double p, const PrimitiveState& behind, const GasModel& gas) {
  return gas.hugoniot_density(p, behind.p, behind.rho);
}

HugoniotDerivatives hugoniot_density_derivatives(double p, const PrimitiveState& behind,
                                                 const GasModel& gas) {
  const double mu2 = gas.mu2();
  const double den = mu2 * p + behind.p;
  const double one_minus_mu4 = 1.0 - mu2 * mu2;
  HugoniotDerivatives d;
  d.dp = behind.rho * behind.p * one_minus_mu4 / (den * den);
  d.dp_behind = -behind.rho * p * one_minus_mu4 / (den * den);
  d.drho_behind = (p + mu2 * behind.p) / den;
  return d;
}

double shock_velocity_jump(double p, const PrimitiveState& behind, const GasModel& gas) {
  const double mu2 = gas.mu2();
  const double a = (1.0 - mu2) / behind.rho;
  return (p - behind.p) * std::sqrt(a / (p + mu2 * behind.p));
}

PhiDerivatives shock_velocity_jump_derivatives(double p, const PrimitiveState& behind,
                                               const GasModel& gas) {
  const double mu2 = gas.mu2();
  const double a = (1.0 - mu2) / behind.rho;
  const double den = p + mu2 * behind.p;
  const double root = std::sqrt(a / den);
  PhiDerivatives d;
  d.dp = root * (p + (1.0 + 2.0 * mu2) * behind.p) / (2.0 * den);
  d.dp_behind = -root * ((2.0 + mu2) * p + mu2 * behind.p) / (2.0 * den);
  d.drho_behind = -(p - behind.p) * root / (2.0 * behind.rho);
  return d;
}

double rarefaction_velocity_jump(double p, const PrimitiveState& behind, const GasModel& gas) {
  const double g = gas.gamma();
  const double c = sound_speed(behind, gas);
  return 2.0 * c / (g - 1.0) * (std::pow(p / behind.p, (g - 1.0) / (2.0 * g)) - 1.0);
}

RiemannFan solve_star(const PrimitiveState& left, const PrimitiveState& right,
                      const GasModel& gas, const SolveControls& controls) {
  if (!is_valid(left) || !is_valid(right)) {
    throw NonPhysicalState("Riemann data is not a valid gas state");
  }
  const double g = gas.gamma();
  const double cl = sound_speed(left, gas);
  const double cr = sound_speed(right, gas);
  const double du = right.u - left.u;
  if (2.0 * (cl + cr) / (g - 1.0) <= du) {
    throw VacuumFormation("Riemann data opens a vacuum region");
  }

  auto eval = [&](double p) {
    const auto [fl, dfl] = pressure_function(p, left, gas);
    const auto [fr, dfr] = pressure_function(p, right, gas);
    return std::pair<double, double>{fl + fr + du, dfl + dfr};
  };

  // Bracket the root. g(0+) < 0 by the vacuum check; g grows without bound.
  double lo = std::min(left.p, right.p);
  while (eval(lo).first > 0.0) lo *= 0.125;
  double hi = std::max(left.p, right.p);
  while (eval(hi).first < 0.0) hi *= 8.0;

  double p = std::clamp(two_rarefaction_guess(left, right, gas), lo, hi);
  bool converged = false;
  for (int it = 0; it < controls.max_iter; ++it) {
    const auto [f, df] = eval(p);
    if (f > 0.0) {
      hi = p;
    } else {
      lo = p;
    }
    double next = p - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double change = std::abs(next - p) / (0.5 * (next + p));
    p = next;
    if (change < controls.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("star-pressure iteration did not reach tolerance");
  }

  RiemannFan fan;
  fan.p_star = p;
  const auto [fl, dfl] = pressure_function(p, left, gas);
  const auto [fr, dfr] = pressure_function(p, right, gas);
  fan.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);

  const SideResult rs = solve_side_right(p, fan.u_star, right, gas);
  fan.rho_2star = rs.rho;
  fan.c_2star = rs.c;
  fan.right_kind = rs.kind;
  fan.right_head = rs.head;
  fan.right_tail = rs.tail;

  const SideResult ls = solve_side_right(p, -fan.u_star, mirror(left), gas);
  fan.rho_1star = ls.rho;
  fan.c_1star = ls.c;
  fan.left_kind = ls.kind;
  fan.left_head = -ls.head;
  fan.left_tail = -ls.tail;
  return fan;
}

PrimitiveState sample(const RiemannFan& fan, const PrimitiveState& left,
                      const PrimitiveState& right, const GasModel& gas, double xi) {
  if (xi < fan.u_star) {
    return sample_left(fan, left, gas, xi);
  }
  return mirror(sample_left(mirror_fan(fan), mirror(right), gas, -xi));
}

WaveSpeeds wave_speeds(const RiemannFan& fan) {
  return {fan.left_head, fan.left_tail, fan.u_star, fan.right_tail, fan.right_head};
}

}  // namespace grp
