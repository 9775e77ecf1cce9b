#include "grp/gas_model.hpp"

#include <cmath>

namespace grp {

GasModel::GasModel(double gamma) : gamma_(gamma), mu2_((gamma - 1.0) / (gamma + 1.0)) {
  if (!(gamma > 1.0)) {
    throw ValidationError("gamma", "polytropic index must exceed 1");
  }
}

double GasModel::sound_speed(double rho, double p) const {
  return std::sqrt(gamma_ * p / rho);
}

double GasModel::internal_energy(double rho, double p) const {
  return p / ((gamma_ - 1.0) * rho);
}

double GasModel::entropy_indicator(double rho, double p) const {
  return p / std::pow(rho, gamma_);
}

double GasModel::hugoniot_density(double p, double p_behind, double rho_behind) const {
  const double ratio = p / p_behind;
  return rho_behind * (ratio + mu2_) / (mu2_ * ratio + 1.0);
}

bool is_valid(const PrimitiveState& s) {
  return s.rho > 0.0 && s.p > 0.0 && std::isfinite(s.rho) && std::isfinite(s.u) &&
         std::isfinite(s.p);
}

double sound_speed(const PrimitiveState& s, const GasModel& gas) {
  return gas.sound_speed(s.rho, s.p);
}

ConservedState primitive_to_conserved(const PrimitiveState& s, const GasModel& gas) {
  const double e = gas.internal_energy(s.rho, s.p);
  return {s.rho, s.rho * s.u, s.rho * (0.5 * s.u * s.u + e)};
}

PrimitiveState conserved_to_primitive(const ConservedState& c, const GasModel& gas) {
  if (!(c.rho > 0.0)) {
    throw NonPhysicalState("conserved state has non-positive density");
  }
  const double u = c.mom / c.rho;
  const double internal = c.ene - 0.5 * c.mom * c.mom / c.rho;
  const double p = (gas.gamma() - 1.0) * internal;
  if (!(p > 0.0)) {
    throw NonPhysicalState("conserved state has non-positive pressure");
  }
  return {c.rho, u, p};
}

double entropy_indicator(const PrimitiveState& s, const GasModel& gas) {
  return gas.entropy_indicator(s.rho, s.p);
}

double initial_entropy_gradient(const PrimitiveState& s, const SlopeState& d,
                                const GasModel& gas) {
  const double gm1 = gas.gamma() - 1.0;
  return d.dp / (gm1 * s.rho) - gas.gamma() * s.p * d.drho / (gm1 * s.rho * s.rho);
}

double psi_gradient(const PrimitiveState& s, const SlopeState& d, const GasModel& gas) {
  const double c = sound_speed(s, gas);
  const double dc = 0.5 * c * (d.dp / s.p - d.drho / s.rho);
  return d.du + 2.0 / (gas.gamma() - 1.0) * dc;
}

FluxVector euler_flux(const PrimitiveState& s, const GasModel& gas) {
  const double rho_e_total = s.p / (gas.gamma() - 1.0) + 0.5 * s.rho * s.u * s.u;
  return {s.rho * s.u, s.rho * s.u * s.u + s.p, s.u * (rho_e_total + s.p)};
}

PrimitiveState mirror(const PrimitiveState& s) { return {s.rho, -s.u, s.p}; }

SlopeState mirror(const SlopeState& d) { return {-d.drho, d.du, -d.dp}; }

}  // namespace grp
