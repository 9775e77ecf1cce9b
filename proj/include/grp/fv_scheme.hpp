#pragma once

#include <vector>

#include "grp/grp_solver.hpp"

namespace grp {

struct Grid {
  int n_cells = 0;
  double x_min = 0.0;
  double x_max = 1.0;
  int ghost_width = 2;

  double dx() const { return (x_max - x_min) / n_cells; }
  /// Center of interior cell j, j in [0, n_cells).
  double center(int j) const { return x_min + (j + 0.5) * dx(); }
  /// Position of interface j-1/2, j in [0, n_cells].
  double interface(int j) const { return x_min + j * dx(); }
};

/// Cell-average conserved states plus per-cell primitive slopes, padded with
/// ghost cells on both sides. The primitive cache mirrors cons and is kept
/// fresh by refresh_primitives / boundary_fill.
struct CellField {
  explicit CellField(const Grid& g)
      : grid(g),
        cons(g.n_cells + 2 * g.ghost_width),
        prim(g.n_cells + 2 * g.ghost_width),
        slope(g.n_cells + 2 * g.ghost_width) {}

  Grid grid;
  std::vector<ConservedState> cons;
  std::vector<PrimitiveState> prim;
  std::vector<SlopeState> slope;

  /// First interior array index.
  int begin() const { return grid.ghost_width; }
  /// One past the last interior array index.
  int end() const { return grid.ghost_width + grid.n_cells; }
};

enum class FluxSolver { ExactGodunov, Hllc, RoeEfix, GrpAcoustic, GrpNonlinear };
enum class Reconstruction { None, Muscl };
enum class TimeIntegrator { Euler, Rk2, GrpOnestep };
enum class Limiter { Minmod, VanLeer };
enum class BoundaryPolicy { Transmissive, Reflective };

struct SchemeSpec {
  FluxSolver flux_solver = FluxSolver::ExactGodunov;
  Reconstruction reconstruction = Reconstruction::None;
  TimeIntegrator time_integrator = TimeIntegrator::Euler;
  Limiter limiter = Limiter::Minmod;
  double cfl = 0.5;
  GrpConfig grp{};
  /// Roe entropy-fix delta as a fraction of the Roe-average sound speed.
  double efix_delta = 0.1;

  /// Throws ValidationError on inconsistent combinations: grp-onestep needs a
  /// grp flux, grp fluxes need MUSCL slopes, cfl in (0,1).
  void validate() const;
};

/// Per-step dispatch counters (fallback events surface in run results).
struct StepStats {
  long interfaces = 0;
  long upwind = 0;
  long sonic = 0;
  long acoustic = 0;
  long nonlinear = 0;
  long fallback_acoustic = 0;
  long fallback_godunov = 0;

  void record(GrpPath path);
  StepStats& operator+=(const StepStats& other);
};

double minmod(double a, double b);
double vanleer(double a, double b);
double limited_slope(double a, double b, Limiter limiter);

/// Convert interior cell averages to the primitive cache; throws
/// NonPhysicalState with the failing cell index.
void refresh_primitives(CellField& field, const GasModel& gas);

/// Fill ghost cells (cons, prim, slope). Transmissive copies the edge cell
/// outward, reflective mirrors it with u negated.
void boundary_fill(CellField& field, BoundaryPolicy policy);

/// Limited primitive slopes for all cells with both neighbors available,
/// with the positivity guard (slopes flatten when an edge state would lose
/// positivity).
void compute_slopes(CellField& field, Limiter limiter, const GasModel& gas);

void zero_slopes(CellField& field);

/// Per-interface piecewise-linear data: n_cells + 1 entries, interface i
/// between cells i-1 and i. Applies the positivity guard to the stored
/// slopes before assembling edge values.
std::vector<GrpInput> interface_inputs(CellField& field, const GasModel& gas);

/// dt = cfl dx / max_j(|u_j| + c_j) over interior cells.
double cfl_timestep(const CellField& field, const GasModel& gas, double cfl);

/// Advance one time step with the chosen scheme. Throws NonPhysicalState
/// identifying the first failing cell.
void step(CellField& field, const SchemeSpec& spec, const GasModel& gas, double dt,
          BoundaryPolicy policy, StepStats* stats = nullptr);

/// GRP slope projection: provisional slopes from time-advanced interface
/// values (u* + dt (du/dt)*), limited against neighboring cell-average
/// differences (minmod with the standard factor-2 monotone bound). advanced
/// has n_cells + 1 entries. Expects interior primitives fresh and ghosts
/// filled.
void project_slopes(CellField& field, const std::vector<PrimitiveState>& advanced,
                    const GasModel& gas);

/// HLLC flux with Davis wave-speed estimates.
FluxVector hllc_flux(const PrimitiveState& left, const PrimitiveState& right,
                     const GasModel& gas);

/// Roe linearization pieces, exposed for the flux and its property tests.
struct RoeLinearization {
  double u, enthalpy, c;
  double lambda[3];
  double alpha[3];
  double eigvec[3][3];
};
RoeLinearization roe_linearize(const PrimitiveState& left, const PrimitiveState& right,
                               const GasModel& gas);

/// Roe flux with the Harten entropy fix on the nonlinear fields,
/// delta = efix_delta * (Roe-average c).
FluxVector roe_flux(const PrimitiveState& left, const PrimitiveState& right,
                    const GasModel& gas, double efix_delta);

}  // namespace grp
