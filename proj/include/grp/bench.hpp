#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grp/problems.hpp"

namespace grp {

/// L1 (integral) and Linf error per primitive variable.
struct ErrorNorms {
  double l1_rho = 0.0, l1_u = 0.0, l1_p = 0.0;
  double linf_rho = 0.0, linf_u = 0.0, linf_p = 0.0;
};

struct RunResult {
  std::string problem;
  std::string scheme_name;
  int n_cells = 0;
  double gamma = 0.0;
  double cfl = 0.0;
  double t_end = 0.0;
  std::vector<double> x;
  std::vector<PrimitiveState> numerical;
  std::vector<double> internal_energy;
  std::vector<double> entropy;
  std::vector<PrimitiveState> exact;  // empty when no reference is available
  ErrorNorms errors;
  double wall_seconds = 0.0;
  long steps = 0;
  StepStats stats;
  bool failed = false;
  std::string failure;
};

/// Named scheme presets: godunov | hllc | roe-efix (first order, cfl 0.5),
/// muscl-* | rk2-* (MUSCL variants), grp-acoustic | grp-nonlinear
/// (one-step GRP, cfl 0.32).
SchemeSpec make_scheme(const std::string& name);
std::vector<std::string> scheme_names();

/// Sum |a - b| dx per variable plus the max norms.
ErrorNorms compute_errors(std::span<const PrimitiveState> numerical,
                          std::span<const PrimitiveState> reference, double dx);

double l1_density_error(std::span<const PrimitiveState> numerical,
                        std::span<const PrimitiveState> reference, double dx);

/// Advance the problem to t_end and attach the exact reference and error
/// norms. Numerical failures propagate as exceptions.
RunResult run(const ProblemSpec& problem, const SchemeSpec& scheme, int n_cells,
              const std::string& scheme_name = "");

struct SweepResult {
  std::vector<RunResult> runs;  // failures recorded in place, sweep continues
};

SweepResult sweep(const ProblemSpec& problem, const std::vector<std::string>& schemes,
                  const std::vector<int>& cells_list);

/// Shock locator: the rightmost face whose relative pressure jump is within
/// `fraction` of the global maximum, refined to the maximum density gradient
/// in its neighborhood. Raw density gradients cannot work on the
/// extreme-ratio benchmark (the fan and the contact both dominate the shock),
/// but pressure is continuous across the contact and smooth in the fan.
double locate_shock(std::span<const double> x, std::span<const PrimitiveState> w,
                    double fraction = 0.25);

}  // namespace grp
