#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "grp/fv_scheme.hpp"

namespace grp {

struct RiemannInit {
  PrimitiveState left;
  PrimitiveState right;
  double x0 = 0.0;
};

/// Right-moving simple wave: u0 = amplitude * sin^4(pi s) on the support
/// (s the normalized coordinate), zero outside; rho and p follow from the
/// constant left Riemann invariant and the isentrope through (rho0, p0).
/// Exact evolution by characteristics while the wave has not steepened.
struct SimpleWaveInit {
  double rho0 = 1.0;
  double p0 = 1.0;
  double amplitude = 0.1;
  double support_lo = 0.0;
  double support_hi = 1.0;
};

struct ProblemSpec {
  std::string name;
  double x_min = 0.0;
  double x_max = 1.0;
  std::variant<RiemannInit, SimpleWaveInit> init;
  double gamma = 1.4;
  /// <= 0 requests the auto rule: the exact right-going shock traverses 60%
  /// of the right half-domain.
  double t_end = 0.0;
  BoundaryPolicy boundary = BoundaryPolicy::Transmissive;

  bool riemann_type() const { return std::holds_alternative<RiemannInit>(init); }
};

/// Registry: "sod", "leblanc_tangliu", "simple_wave".
ProblemSpec make_problem(const std::string& name);
std::vector<std::string> problem_names();

/// Resolves a non-positive t_end through the shock-travel rule.
double resolve_t_end(const ProblemSpec& problem, const GasModel& gas);

/// Exact initial cell averages (conserved); Simpson for smooth data, split
/// cells exactly for Riemann data. Slopes initialized with the limiter.
CellField initialize(const ProblemSpec& problem, const Grid& grid, const GasModel& gas,
                     Limiter limiter);

bool has_exact(const ProblemSpec& problem);

/// Pointwise exact solution at positions x, time t.
std::vector<PrimitiveState> exact_reference(const ProblemSpec& problem, const GasModel& gas,
                                            std::span<const double> x, double t);

PrimitiveState exact_state(const ProblemSpec& problem, const GasModel& gas, double x,
                           double t);

}  // namespace grp
