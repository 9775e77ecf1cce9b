#include "grp/fv_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace grp {

namespace {

PrimitiveState edge_state(const PrimitiveState& w, const SlopeState& s, double half_dx) {
  return {w.rho + half_dx * s.drho, w.u + half_dx * s.du, w.p + half_dx * s.dp};
}

bool positive(const PrimitiveState& w) { return w.rho > 0.0 && w.p > 0.0; }

struct InterfaceEval {
  FluxVector flux;
  PrimitiveState star{};
  GrpDerivatives deriv{};
  GrpPath path = GrpPath::Acoustic;
  bool is_grp = false;
};

InterfaceEval evaluate_interface(const GrpInput& in, const SchemeSpec& spec,
                                 const GasModel& gas, double dt, bool trust_guard) {
  InterfaceEval out;
  switch (spec.flux_solver) {
    case FluxSolver::ExactGodunov: {
      const RiemannFan fan = solve_star(in.left, in.right, gas, spec.grp.riemann);
      out.star = sample(fan, in.left, in.right, gas, 0.0);
      out.flux = euler_flux(out.star, gas);
      return out;
    }
    case FluxSolver::Hllc:
      out.flux = hllc_flux(in.left, in.right, gas);
      return out;
    case FluxSolver::RoeEfix:
      out.flux = roe_flux(in.left, in.right, gas, spec.efix_delta);
      return out;
    case FluxSolver::GrpAcoustic:
    case FluxSolver::GrpNonlinear: {
      GrpConfig cfg = spec.grp;
      cfg.force_acoustic = spec.flux_solver == FluxSolver::GrpAcoustic;
      const GrpResult res = grp_interface_dispatch(in, gas, cfg);
      out.star = res.star;
      out.deriv = res.deriv;
      out.path = res.path;
      out.is_grp = true;
      if (trust_guard) {
        // one-step driver: cap the extrapolated state change at violently
        // evolving faces (the linearization's validity bound)
        const double s = derivative_trust(out.star, out.deriv, dt, gas);
        out.deriv.du_dt *= s;
        out.deriv.dp_dt *= s;
        out.deriv.drho_dt *= s;
        out.deriv.mat_du_dt *= s;
        out.deriv.mat_dp_dt *= s;
      }
      out.flux = midpoint_flux(out.star, out.deriv, dt, gas);
      return out;
    }
  }
  throw ValidationError("flux", "unknown flux solver");
}

void update_averages(CellField& field, const std::vector<InterfaceEval>& faces, double dt) {
  const double lam = dt / field.grid.dx();
  for (int j = field.begin(); j < field.end(); ++j) {
    const int i = j - field.begin();
    field.cons[j].rho -= lam * (faces[i + 1].flux[0] - faces[i].flux[0]);
    field.cons[j].mom -= lam * (faces[i + 1].flux[1] - faces[i].flux[1]);
    field.cons[j].ene -= lam * (faces[i + 1].flux[2] - faces[i].flux[2]);
  }
}

void euler_stage(CellField& field, const SchemeSpec& spec, const GasModel& gas, double dt,
                 BoundaryPolicy policy, StepStats* stats) {
  boundary_fill(field, policy);
  if (spec.reconstruction == Reconstruction::Muscl) {
    compute_slopes(field, spec.limiter, gas);
  } else {
    zero_slopes(field);
  }
  const auto inputs = interface_inputs(field, gas);
  std::vector<InterfaceEval> faces(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      faces[i] = evaluate_interface(inputs[i], spec, gas, dt, false);
    } catch (const NonPhysicalState& err) {
      throw NonPhysicalState(std::string(err.what()) + " (interface " + std::to_string(i) +
                                 ")",
                             static_cast<std::ptrdiff_t>(i));
    }
    if (stats != nullptr && faces[i].is_grp) {
      ++stats->interfaces;
      stats->record(faces[i].path);
    }
  }
  update_averages(field, faces, dt);
  refresh_primitives(field, gas);
}

void grp_onestep_stage(CellField& field, const SchemeSpec& spec, const GasModel& gas,
                       double dt, BoundaryPolicy policy, StepStats* stats) {
  boundary_fill(field, policy);
  const auto inputs = interface_inputs(field, gas);
  std::vector<InterfaceEval> faces(inputs.size());
  std::vector<PrimitiveState> advanced(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      faces[i] = evaluate_interface(inputs[i], spec, gas, dt, true);
    } catch (const NonPhysicalState& err) {
      throw NonPhysicalState(std::string(err.what()) + " (interface " + std::to_string(i) +
                                 ")",
                             static_cast<std::ptrdiff_t>(i));
    }
    const PrimitiveState& s = faces[i].star;
    const GrpDerivatives& d = faces[i].deriv;  // trust-scaled by evaluate_interface
    advanced[i] = {s.rho + dt * d.drho_dt, s.u + dt * d.du_dt, s.p + dt * d.dp_dt};
    if (stats != nullptr) {
      ++stats->interfaces;
      stats->record(faces[i].path);
    }
  }
  update_averages(field, faces, dt);
  refresh_primitives(field, gas);
  boundary_fill(field, policy);
  project_slopes(field, advanced, gas);
}

}  // namespace

void SchemeSpec::validate() const {
  const bool grp_flux =
      flux_solver == FluxSolver::GrpAcoustic || flux_solver == FluxSolver::GrpNonlinear;
  if (time_integrator == TimeIntegrator::GrpOnestep && !grp_flux) {
    throw ValidationError("time", "grp-onestep requires a grp flux solver");
  }
  if (grp_flux && reconstruction != Reconstruction::Muscl) {
    throw ValidationError("reconstruction", "grp flux solvers require muscl slopes");
  }
  if (!(cfl > 0.0 && cfl < 1.0)) {
    throw ValidationError("cfl", "cfl must lie in (0,1)");
  }
}

void StepStats::record(GrpPath path) {
  switch (path) {
    case GrpPath::UpwindLeft:
    case GrpPath::UpwindRight: ++upwind; break;
    case GrpPath::SonicLeft:
    case GrpPath::SonicRight: ++sonic; break;
    case GrpPath::Acoustic: ++acoustic; break;
    case GrpPath::Nonlinear: ++nonlinear; break;
    case GrpPath::FallbackAcoustic: ++fallback_acoustic; break;
    case GrpPath::FallbackGodunov: ++fallback_godunov; break;
  }
}

StepStats& StepStats::operator+=(const StepStats& other) {
  interfaces += other.interfaces;
  upwind += other.upwind;
  sonic += other.sonic;
  acoustic += other.acoustic;
  nonlinear += other.nonlinear;
  fallback_acoustic += other.fallback_acoustic;
  fallback_godunov += other.fallback_godunov;
  return *this;
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

double vanleer(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return 2.0 * a * b / (a + b);
}

double limited_slope(double a, double b, Limiter limiter) {
  return limiter == Limiter::Minmod ? minmod(a, b) : vanleer(a, b);
}

void refresh_primitives(CellField& field, const GasModel& gas) {
  for (int j = field.begin(); j < field.end(); ++j) {
    try {
      field.prim[j] = conserved_to_primitive(field.cons[j], gas);
    } catch (const NonPhysicalState& err) {
      throw NonPhysicalState(std::string(err.what()) + " (cell " +
                                 std::to_string(j - field.begin()) + ")",
                             j - field.begin());
    }
  }
}

void boundary_fill(CellField& field, BoundaryPolicy policy) {
  const int g = field.grid.ghost_width;
  const int lo = field.begin();
  const int hi = field.end() - 1;
  for (int k = 1; k <= g; ++k) {
    if (policy == BoundaryPolicy::Transmissive) {
      field.cons[lo - k] = field.cons[lo];
      field.prim[lo - k] = field.prim[lo];
      field.slope[lo - k] = field.slope[lo];
      field.cons[hi + k] = field.cons[hi];
      field.prim[hi + k] = field.prim[hi];
      field.slope[hi + k] = field.slope[hi];
    } else {
      const int li = lo + k - 1;  // interior mirror images
      const int ri = hi - k + 1;
      field.prim[lo - k] = mirror(field.prim[li]);
      field.slope[lo - k] = mirror(field.slope[li]);
      field.cons[lo - k] = {field.cons[li].rho, -field.cons[li].mom, field.cons[li].ene};
      field.prim[hi + k] = mirror(field.prim[ri]);
      field.slope[hi + k] = mirror(field.slope[ri]);
      field.cons[hi + k] = {field.cons[ri].rho, -field.cons[ri].mom, field.cons[ri].ene};
    }
  }
}

void compute_slopes(CellField& field, Limiter limiter, const GasModel& gas) {
  const double inv_dx = 1.0 / field.grid.dx();
  for (int j = field.begin() - 1; j < field.end() + 1; ++j) {
    const PrimitiveState& wm = field.prim[j - 1];
    const PrimitiveState& w0 = field.prim[j];
    const PrimitiveState& wp = field.prim[j + 1];
    field.slope[j].drho =
        limited_slope((w0.rho - wm.rho) * inv_dx, (wp.rho - w0.rho) * inv_dx, limiter);
    field.slope[j].du =
        limited_slope((w0.u - wm.u) * inv_dx, (wp.u - w0.u) * inv_dx, limiter);
    field.slope[j].dp =
        limited_slope((w0.p - wm.p) * inv_dx, (wp.p - w0.p) * inv_dx, limiter);
  }
  (void)gas;
}

void zero_slopes(CellField& field) {
  std::fill(field.slope.begin(), field.slope.end(), SlopeState{});
}

std::vector<GrpInput> interface_inputs(CellField& field, const GasModel& gas) {
  (void)gas;
  const double half = 0.5 * field.grid.dx();
  // positivity guard: flatten a cell's slopes when either edge leaves the
  // physical region
  for (int j = field.begin() - 1; j < field.end() + 1; ++j) {
    if (!positive(edge_state(field.prim[j], field.slope[j], half)) ||
        !positive(edge_state(field.prim[j], field.slope[j], -half))) {
      field.slope[j] = SlopeState{};
    }
  }
  std::vector<GrpInput> out(field.grid.n_cells + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int jl = field.begin() - 1 + static_cast<int>(i);
    const int jr = jl + 1;
    out[i].left = edge_state(field.prim[jl], field.slope[jl], half);
    out[i].left_slope = field.slope[jl];
    out[i].right = edge_state(field.prim[jr], field.slope[jr], -half);
    out[i].right_slope = field.slope[jr];
  }
  return out;
}

double cfl_timestep(const CellField& field, const GasModel& gas, double cfl) {
  double speed = 0.0;
  for (int j = field.begin(); j < field.end(); ++j) {
    const PrimitiveState& w = field.prim[j];
    speed = std::max(speed, std::abs(w.u) + sound_speed(w, gas));
  }
  return cfl * field.grid.dx() / speed;
}

void step(CellField& field, const SchemeSpec& spec, const GasModel& gas, double dt,
          BoundaryPolicy policy, StepStats* stats) {
  switch (spec.time_integrator) {
    case TimeIntegrator::Euler:
      euler_stage(field, spec, gas, dt, policy, stats);
      return;
    case TimeIntegrator::Rk2: {
      // Heun: average of the initial state and two Euler stages
      std::vector<ConservedState> u0(field.cons.begin() + field.begin(),
                                     field.cons.begin() + field.end());
      euler_stage(field, spec, gas, dt, policy, stats);
      euler_stage(field, spec, gas, dt, policy, stats);
      for (int j = field.begin(); j < field.end(); ++j) {
        const ConservedState& a = u0[j - field.begin()];
        field.cons[j].rho = 0.5 * (a.rho + field.cons[j].rho);
        field.cons[j].mom = 0.5 * (a.mom + field.cons[j].mom);
        field.cons[j].ene = 0.5 * (a.ene + field.cons[j].ene);
      }
      refresh_primitives(field, gas);
      return;
    }
    case TimeIntegrator::GrpOnestep:
      grp_onestep_stage(field, spec, gas, dt, policy, stats);
      return;
  }
}

void project_slopes(CellField& field, const std::vector<PrimitiveState>& advanced,
                    const GasModel& gas) {
  (void)gas;
  const double inv_dx = 1.0 / field.grid.dx();
  for (int j = field.begin(); j < field.end(); ++j) {
    const int i = j - field.begin();
    const PrimitiveState& wl = advanced[i];
    const PrimitiveState& wr = advanced[i + 1];
    const PrimitiveState& wm = field.prim[j - 1];
    const PrimitiveState& w0 = field.prim[j];
    const PrimitiveState& wp = field.prim[j + 1];
    // monotone bound: sign-gated, at most twice the smaller neighbor difference
    const auto project = [&](double prov, double dm, double dp) {
      return minmod(prov, minmod(2.0 * dm, 2.0 * dp));
    };
    field.slope[j].drho = project((wr.rho - wl.rho) * inv_dx, (w0.rho - wm.rho) * inv_dx,
                                  (wp.rho - w0.rho) * inv_dx);
    field.slope[j].du =
        project((wr.u - wl.u) * inv_dx, (w0.u - wm.u) * inv_dx, (wp.u - w0.u) * inv_dx);
    field.slope[j].dp =
        project((wr.p - wl.p) * inv_dx, (w0.p - wm.p) * inv_dx, (wp.p - w0.p) * inv_dx);
  }
}

FluxVector hllc_flux(const PrimitiveState& left, const PrimitiveState& right,
                     const GasModel& gas) {
  const double cl = sound_speed(left, gas);
  const double cr = sound_speed(right, gas);
  const double sl = std::min(left.u - cl, right.u - cr);
  const double sr = std::max(left.u + cl, right.u + cr);
  if (sl >= 0.0) return euler_flux(left, gas);
  if (sr <= 0.0) return euler_flux(right, gas);

  const double ml = left.rho * (sl - left.u);
  const double mr = right.rho * (sr - right.u);
  const double s_star = (right.p - left.p + ml * left.u - mr * right.u) / (ml - mr);

  const PrimitiveState& k = s_star >= 0.0 ? left : right;
  const double sk = s_star >= 0.0 ? sl : sr;
  const ConservedState uk = primitive_to_conserved(k, gas);
  const FluxVector fk = euler_flux(k, gas);
  const double factor = k.rho * (sk - k.u) / (sk - s_star);
  const double e_star =
      uk.ene / k.rho + (s_star - k.u) * (s_star + k.p / (k.rho * (sk - k.u)));
  const double us[3] = {factor, factor * s_star, factor * e_star};
  const double uu[3] = {uk.rho, uk.mom, uk.ene};
  FluxVector f;
  for (int m = 0; m < 3; ++m) f[m] = fk[m] + sk * (us[m] - uu[m]);
  return f;
}

RoeLinearization roe_linearize(const PrimitiveState& left, const PrimitiveState& right,
                               const GasModel& gas) {
  const double g = gas.gamma();
  const double wl = std::sqrt(left.rho);
  const double wr = std::sqrt(right.rho);
  const ConservedState ul = primitive_to_conserved(left, gas);
  const ConservedState ur = primitive_to_conserved(right, gas);
  const double hl = (ul.ene + left.p) / left.rho;
  const double hr = (ur.ene + right.p) / right.rho;

  RoeLinearization lin;
  lin.u = (wl * left.u + wr * right.u) / (wl + wr);
  lin.enthalpy = (wl * hl + wr * hr) / (wl + wr);
  lin.c = std::sqrt((g - 1.0) * (lin.enthalpy - 0.5 * lin.u * lin.u));

  const double d_rho = right.rho - left.rho;
  const double d_mom = ur.mom - ul.mom;
  const double d_ene = ur.ene - ul.ene;
  const double c = lin.c;
  lin.alpha[1] = (g - 1.0) / (c * c) *
                 (d_rho * (lin.enthalpy - lin.u * lin.u) + lin.u * d_mom - d_ene);
  lin.alpha[0] = (d_rho * (lin.u + c) - d_mom - c * lin.alpha[1]) / (2.0 * c);
  lin.alpha[2] = d_rho - lin.alpha[0] - lin.alpha[1];
  lin.lambda[0] = lin.u - c;
  lin.lambda[1] = lin.u;
  lin.lambda[2] = lin.u + c;

  const double k0[3] = {1.0, lin.u - c, lin.enthalpy - lin.u * c};
  const double k1[3] = {1.0, lin.u, 0.5 * lin.u * lin.u};
  const double k2[3] = {1.0, lin.u + c, lin.enthalpy + lin.u * c};
  for (int m = 0; m < 3; ++m) {
    lin.eigvec[0][m] = k0[m];
    lin.eigvec[1][m] = k1[m];
    lin.eigvec[2][m] = k2[m];
  }
  return lin;
}

FluxVector roe_flux(const PrimitiveState& left, const PrimitiveState& right,
                    const GasModel& gas, double efix_delta) {
  const RoeLinearization lin = roe_linearize(left, right, gas);
  const FluxVector fl = euler_flux(left, gas);
  const FluxVector fr = euler_flux(right, gas);
  const double delta = efix_delta * lin.c;

  double q[3];
  for (int k = 0; k < 3; ++k) {
    q[k] = std::abs(lin.lambda[k]);
    // Harten smoothing on the nonlinear fields only
    if (k != 1 && delta > 0.0 && q[k] < delta) {
      q[k] = 0.5 * (lin.lambda[k] * lin.lambda[k] + delta * delta) / delta;
    }
  }
  FluxVector f;
  for (int m = 0; m < 3; ++m) {
    double diss = 0.0;
    for (int k = 0; k < 3; ++k) diss += lin.alpha[k] * q[k] * lin.eigvec[k][m];
    f[m] = 0.5 * (fl[m] + fr[m]) - 0.5 * diss;
  }
  return f;
}

}  // namespace grp
