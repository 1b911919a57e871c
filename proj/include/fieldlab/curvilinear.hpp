#pragma once

#include "fieldlab/grid.hpp"
#include "fieldlab/solver.hpp"

namespace fieldlab {

/// Poisson problem on an annular sector: radial node i at r = r0 + i*h1,
/// angular node j at alpha = j*h2. Permittivity is uniform. The angular
/// edges behave as ghost mirrors when Neumann: every angular column is an
/// active node and the missing neighbor reflects the edge value.
struct PolarProblem {
    GridSpec spec;          // system == Polar
    double eps = 1.0;
    ScalarField rho;        // empty -> treated as zero charge
    FixedMask mask;
    BoundarySpec bc;        // low1/high1 = inner/outer arc, low2/high2 = rays
    double kappa = 1.0;
};

/// Axisymmetric (r,z) problem: radial node i at r = h*i, axial node k.
/// Column i = 0 is the symmetry axis (Neumann). The stencil regularizes
/// the radius as r = h*i + r_guard.
struct AxisymProblem {
    GridSpec spec;          // system == Axisymmetric
    double eps = 1.0;
    ScalarField rho;        // empty -> zero
    FixedMask mask;
    BoundarySpec bc;
    double kappa = 1.0;
    double r_guard = -1.0;  // < 0 -> default 0.001*h
};

/// Stencil value for the polar Poisson equation at interior node (i,j):
///   2 (1/(r^2 dal^2) + 1/dr^2) phi =
///     (phiE - phiW)/(2 r dr) + (phiE + phiW)/dr^2
///     + (phiN + phiS)/(r^2 dal^2) + kappa*q/eps,   r = r0 + i*dr.
double update_node_polar(const ScalarField& phi, const ScalarField& rho, int i, int j,
                         double r0, double dr, double dal, double eps, double kappa);

/// Stencil value for the axisymmetric equation at interior node (i,k):
///   phi = h (phiE - phiW)/(8r) + (phiW + phiE + phiS + phiN)/4
///       + kappa*rho*h^2/(4 eps),   r = h*i + r_guard.
double update_node_axisym(const ScalarField& phi, const ScalarField& rho, int i, int k,
                          double h, double eps, double kappa, double r_guard = -1.0);

SolveResult solve_polar(const PolarProblem& problem, const SolveConfig& config);
SolveResult solve_axisym(const AxisymProblem& problem, const SolveConfig& config);

}  // namespace fieldlab
