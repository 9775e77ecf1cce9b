#include "grp/problems.hpp"

#include <cmath>
#include <numbers>

namespace grp {

namespace {

double simple_wave_u0(const SimpleWaveInit& w, double x) {
  if (x <= w.support_lo || x >= w.support_hi) return 0.0;
  const double s = (x - w.support_lo) / (w.support_hi - w.support_lo);
  const double sn = std::sin(std::numbers::pi * s);
  return w.amplitude * sn * sn * sn * sn;
}

PrimitiveState simple_wave_state(const SimpleWaveInit& w, const GasModel& gas, double u) {
  const double g = gas.gamma();
  const double c0 = gas.sound_speed(w.rho0, w.p0);
  const double c = c0 + 0.5 * (g - 1.0) * u;
  const double rho = w.rho0 * std::pow(c / c0, 2.0 / (g - 1.0));
  const double p = w.p0 * std::pow(c / c0, 2.0 * g / (g - 1.0));
  return {rho, u, p};
}

PrimitiveState initial_state(const ProblemSpec& problem, const GasModel& gas, double x) {
  if (problem.riemann_type()) {
    const auto& r = std::get<RiemannInit>(problem.init);
    return x < r.x0 ? r.left : r.right;
  }
  const auto& w = std::get<SimpleWaveInit>(problem.init);
  return simple_wave_state(w, gas, simple_wave_u0(w, x));
}

// Solve x = xi + (u0(xi) + c0(xi)) t for the launch point xi of the
// characteristic through (x, t); unique before steepening.
double characteristic_foot(const SimpleWaveInit& w, const GasModel& gas, double x,
                           double t) {
  const double g = gas.gamma();
  const double c0 = gas.sound_speed(w.rho0, w.p0);
  auto speed = [&](double xi) { return c0 + 0.5 * (g + 1.0) * simple_wave_u0(w, xi); };
  double lo = x - (c0 + 0.5 * (g + 1.0) * std::abs(w.amplitude)) * t - 1e-12;
  double hi = x - c0 * t + 1e-12;
  if (w.amplitude < 0.0) std::swap(lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid + speed(mid) * t < x) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * (1.0 + std::abs(x))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ProblemSpec make_problem(const std::string& name) {
  if (name == "sod") {
    ProblemSpec p;
    p.name = name;
    p.x_min = 0.0;
    p.x_max = 1.0;
    p.init = RiemannInit{{1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.5};
    p.gamma = 1.4;
    p.t_end = 0.25;
    return p;
  }
  if (name == "leblanc_tangliu") {
    ProblemSpec p;
    p.name = name;
    p.x_min = -10.0;
    p.x_max = 10.0;
    p.init = RiemannInit{{1.0e4, 0.0, 1.0e4}, {1.0, 0.0, 1.0}, 0.0};
    p.gamma = 1.4;
    p.t_end = 0.0;  // shock-travel rule
    return p;
  }
  if (name == "simple_wave") {
    ProblemSpec p;
    p.name = name;
    p.x_min = -0.5;
    p.x_max = 2.5;
    p.init = SimpleWaveInit{};
    p.gamma = 1.4;
    p.t_end = 0.5;
    return p;
  }
  throw ValidationError("problem", "unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() { return {"sod", "leblanc_tangliu", "simple_wave"}; }

double resolve_t_end(const ProblemSpec& problem, const GasModel& gas) {
  if (problem.t_end > 0.0) return problem.t_end;
  if (!problem.riemann_type()) {
    throw ValidationError("tend", "auto t_end needs a Riemann-type problem");
  }
  const auto& r = std::get<RiemannInit>(problem.init);
  const RiemannFan fan = solve_star(r.left, r.right, gas);
  const double shock_speed = fan.right_head;
  if (!(shock_speed > 0.0)) {
    throw ValidationError("tend", "auto t_end needs a right-going shock");
  }
  return 0.6 * (problem.x_max - r.x0) / shock_speed;
}

CellField initialize(const ProblemSpec& problem, const Grid& grid, const GasModel& gas,
                     Limiter limiter) {
  CellField field(grid);
  const double dx = grid.dx();
  for (int j = 0; j < grid.n_cells; ++j) {
    const double a = grid.interface(j);
    const double b = grid.interface(j + 1);
    ConservedState avg;
    if (problem.riemann_type()) {
      const auto& r = std::get<RiemannInit>(problem.init);
      const ConservedState cl = primitive_to_conserved(r.left, gas);
      const ConservedState cr = primitive_to_conserved(r.right, gas);
      const double wl = std::clamp((r.x0 - a) / dx, 0.0, 1.0);
      avg = {wl * cl.rho + (1.0 - wl) * cr.rho, wl * cl.mom + (1.0 - wl) * cr.mom,
             wl * cl.ene + (1.0 - wl) * cr.ene};
    } else {
      // Simpson cell average of the smooth profile
      const ConservedState ca = primitive_to_conserved(initial_state(problem, gas, a), gas);
      const ConservedState cm = primitive_to_conserved(
          initial_state(problem, gas, 0.5 * (a + b)), gas);
      const ConservedState cb = primitive_to_conserved(initial_state(problem, gas, b), gas);
      avg = {(ca.rho + 4.0 * cm.rho + cb.rho) / 6.0, (ca.mom + 4.0 * cm.mom + cb.mom) / 6.0,
             (ca.ene + 4.0 * cm.ene + cb.ene) / 6.0};
    }
    field.cons[field.begin() + j] = avg;
  }
  refresh_primitives(field, gas);
  boundary_fill(field, problem.boundary);
  compute_slopes(field, limiter, gas);
  return field;
}

bool has_exact(const ProblemSpec& problem) {
  (void)problem;  // every registry problem carries an exact reference
  return true;
}

std::vector<PrimitiveState> exact_reference(const ProblemSpec& problem, const GasModel& gas,
                                            std::span<const double> x, double t) {
  std::vector<PrimitiveState> out(x.size());
  if (t <= 0.0) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = initial_state(problem, gas, x[i]);
    return out;
  }
  if (problem.riemann_type()) {
    const auto& r = std::get<RiemannInit>(problem.init);
    const RiemannFan fan = solve_star(r.left, r.right, gas);
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = sample(fan, r.left, r.right, gas, (x[i] - r.x0) / t);
    }
    return out;
  }
  const auto& w = std::get<SimpleWaveInit>(problem.init);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = characteristic_foot(w, gas, x[i], t);
    out[i] = simple_wave_state(w, gas, simple_wave_u0(w, xi));
  }
  return out;
}

PrimitiveState exact_state(const ProblemSpec& problem, const GasModel& gas, double x,
                           double t) {
  return exact_reference(problem, gas, std::span<const double>(&x, 1), t)[0];
}

}  // namespace grp
