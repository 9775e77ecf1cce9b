#pragma once

#include <array>

#include "grp/errors.hpp"

namespace grp {

/// Pointwise fluid state in primitive variables. Vacuum (rho <= 0 or
/// p <= 0) is rejected by the constructors of derived quantities, not
/// represented.
struct PrimitiveState {
  double rho = 0.0;  // density
  double u = 0.0;    // velocity
  double p = 0.0;    // pressure
};

/// Cell-average vector (rho, rho*u, rho*E) with E = u^2/2 + e.
struct ConservedState {
  double rho = 0.0;
  double mom = 0.0;
  double ene = 0.0;
};

/// One-sided spatial derivatives of the primitive variables at an interface.
struct SlopeState {
  double drho = 0.0;
  double du = 0.0;
  double dp = 0.0;
};

/// Conserved flux vector (rho*u, rho*u^2 + p, u*(rho*E + p)).
using FluxVector = std::array<double, 3>;

/// Equation-of-state interface. Only the polytropic gas ships; the surface
/// is what the solver layers consume: sound speed, internal energy, an
/// entropy indicator and the Hugoniot density function.
class EquationOfState {
 public:
  virtual ~EquationOfState() = default;
  virtual double sound_speed(double rho, double p) const = 0;
  virtual double internal_energy(double rho, double p) const = 0;
  virtual double entropy_indicator(double rho, double p) const = 0;
  virtual double hugoniot_density(double p, double p_behind, double rho_behind) const = 0;
};

/// Polytropic (ideal) gas with index gamma > 1.
class GasModel final : public EquationOfState {
 public:
  explicit GasModel(double gamma);

  double gamma() const { return gamma_; }
  /// mu^2 = (gamma - 1)/(gamma + 1).
  double mu2() const { return mu2_; }

  double sound_speed(double rho, double p) const override;
  /// e = p / ((gamma - 1) rho).
  double internal_energy(double rho, double p) const override;
  /// Monotone indicator p / rho^gamma; constant along isentropes, strictly
  /// increasing across admissible shocks.
  double entropy_indicator(double rho, double p) const override;
  /// Post-shock density H(p; p_behind, rho_behind), closed form
  /// rho_b * (p/p_b + mu^2) / (mu^2 p/p_b + 1).
  double hugoniot_density(double p, double p_behind, double rho_behind) const override;

 private:
  double gamma_;
  double mu2_;
};

bool is_valid(const PrimitiveState& s);

double sound_speed(const PrimitiveState& s, const GasModel& gas);

ConservedState primitive_to_conserved(const PrimitiveState& s, const GasModel& gas);

/// Throws NonPhysicalState when the recovered density or pressure is
/// non-positive.
PrimitiveState conserved_to_primitive(const ConservedState& c, const GasModel& gas);

double entropy_indicator(const PrimitiveState& s, const GasModel& gas);

/// Gibbs-relation evaluation of the initial entropy gradient,
/// T s' = e' - (p/rho^2) rho'; polytropic closed form
/// p'/((g-1)rho) - g p rho'/((g-1)rho^2).
double initial_entropy_gradient(const PrimitiveState& s, const SlopeState& d, const GasModel& gas);

/// Spatial derivative of the kinematic-thermodynamic variable
/// psi = u + 2c/(gamma-1): psi' = u' + (2/(g-1)) c' with
/// c' = (c/2)(p'/p - rho'/rho).
double psi_gradient(const PrimitiveState& s, const SlopeState& d, const GasModel& gas);

/// Conserved flux f(u) evaluated from a primitive state.
FluxVector euler_flux(const PrimitiveState& s, const GasModel& gas);

/// Reflection x -> -x: negates velocity.
PrimitiveState mirror(const PrimitiveState& s);
/// Reflection x -> -x on slopes: negates drho and dp, keeps du.
SlopeState mirror(const SlopeState& d);

}  // namespace grp
