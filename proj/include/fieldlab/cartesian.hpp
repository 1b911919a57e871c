#pragma once

#include <vector>

#include "fieldlab/grid.hpp"
#include "fieldlab/solver.hpp"

namespace fieldlab {

/// Stencil value for interior node (i,j) of the variable-permittivity
/// Poisson equation on a square-cell grid:
///
///   phi = (phiE + phiW + phiN + phiS + kappa*rho*h^2/eps) / 4
///       + [(epsE - epsW)(phiE - phiW) + (epsN - epsS)(phiN - phiS)] / (16 eps)
///
/// kappa is the charge-to-volts scale (1 reproduces the bundled scenes;
/// SI users supply 1/eps0). Throws on boundary indices or eps <= 0.
double update_node_2d(const ScalarField& phi, const ScalarField& eps,
                      const ScalarField& rho, int i, int j, double h, double kappa);

/// One in-place Gauss-Seidel pass over all interior, non-pinned nodes in the
/// given traversal order. Each update sees the freshest neighbor values.
void sweep(ScalarField& phi, const ScalarField& eps, const ScalarField& rho,
           const FixedMask& mask, SweepDirection direction, double kappa = 1.0);

/// Relaxation solve of the 2D Cartesian problem. Each iteration runs the
/// configured sweep schedule, re-imposing boundary conditions before every
/// pass; stops when the max node change per iteration drops below tolerance.
SolveResult solve_2d(const RasterizedScene& raster, const SolveConfig& config);

/// 1D profile solve result: the converged potential plus intermediate
/// profiles captured every report_every iterations.
struct Solve1DResult {
    SolveResult solve;                    // potential is a 1 x n field
    std::vector<ScalarField> snapshots;
};

/// Degenerate 1D form of the same relaxation: per-node permittivity and
/// charge, Dirichlet values at both ends.
Solve1DResult solve_1d(const std::vector<double>& eps, const std::vector<double>& rho,
                       double left_volts, double right_volts, const SolveConfig& config,
                       double h = 1.0, double kappa = 1.0);

}  // namespace fieldlab
