#include "fieldlab/cartesian.hpp"

#include <cmath>
#include <stdexcept>

#include "relax.hpp"

namespace fieldlab {

namespace {

inline double stencil_2d(const ScalarField& phi, const ScalarField& eps,
                         const ScalarField& rho, int i, int j, double h, double kappa) {
    const double e = eps(i, j);
    const double pe = phi(i + 1, j), pw = phi(i - 1, j);
    const double pn = phi(i, j + 1), ps = phi(i, j - 1);
    const double cross = (eps(i + 1, j) - eps(i - 1, j)) * (pe - pw) +
                         (eps(i, j + 1) - eps(i, j - 1)) * (pn - ps);
    return (pe + pw + pn + ps + kappa * rho(i, j) * h * h / e) * 0.25 +
           cross / (16.0 * e);
}

inline double stencil_1d(const ScalarField& phi, const ScalarField& eps,
                         const ScalarField& rho, int j, double h, double kappa) {
    const double e = eps(0, j);
    const double pr = phi(0, j + 1), pl = phi(0, j - 1);
    return (pr + pl + kappa * rho(0, j) * h * h / e) * 0.5 +
           (eps(0, j + 1) - eps(0, j - 1)) * (pr - pl) / (8.0 * e);
}

void require_co_registered(const RasterizedScene& r) {
    if (!r.eps.same_shape(r.rho) || r.eps.n1() != r.spec.n1 || r.eps.n2() != r.spec.n2 ||
        r.mask.n1() != r.spec.n1 || r.mask.n2() != r.spec.n2) {
        throw std::invalid_argument("solve: eps/rho/mask grids are not co-registered");
    }
    for (double e : r.eps.values()) {
        if (!(e > 0.0)) {
            throw std::invalid_argument("solve: permittivity must be positive everywhere");
        }
    }
}

}  // namespace

double update_node_2d(const ScalarField& phi, const ScalarField& eps,
                      const ScalarField& rho, int i, int j, double h, double kappa) {
    if (i < 1 || i > phi.n1() - 2 || j < 1 || j > phi.n2() - 2) {
        throw std::out_of_range("update_node_2d: node must be strictly interior");
    }
    if (!phi.same_shape(eps) || !phi.same_shape(rho)) {
        throw std::invalid_argument("update_node_2d: field shapes differ");
    }
    if (!(eps(i, j) > 0.0)) {
        throw std::domain_error("update_node_2d: eps must be positive at the node");
    }
    return stencil_2d(phi, eps, rho, i, j, h, kappa);
}

void sweep(ScalarField& phi, const ScalarField& eps, const ScalarField& rho,
           const FixedMask& mask, SweepDirection direction, double kappa) {
    if (!phi.same_shape(eps) || !phi.same_shape(rho) ||
        mask.n1() != phi.n1() || mask.n2() != phi.n2()) {
        throw std::invalid_argument("sweep: field shapes differ");
    }
    const double h = phi.spec().h1;
    const detail::SweepBounds bounds{1, phi.n1() - 2, 1, phi.n2() - 2};
    detail::for_nodes(bounds, direction, [&](int i, int j) {
        if (mask.pinned(i, j)) return;
        phi(i, j) = stencil_2d(phi, eps, rho, i, j, h, kappa);
    });
}

SolveResult solve_2d(const RasterizedScene& raster, const SolveConfig& config) {
    raster.spec.validate();
    if (raster.spec.system != CoordSystem::Cartesian2D) {
        throw std::invalid_argument("solve_2d: grid system must be cartesian");
    }
    if (raster.spec.h1 != raster.spec.h2) {
        throw std::invalid_argument("solve_2d: requires square cells (h1 == h2)");
    }
    require_co_registered(raster);

    const double h = raster.spec.h1;
    const double kappa = raster.kappa;
    const detail::SweepBounds bounds{1, raster.spec.n1 - 2, 1, raster.spec.n2 - 2};

    return detail::relax_loop(
        ScalarField(raster.spec, 0.0), raster.mask, config, bounds,
        [&](ScalarField& f) { apply_boundaries(f, raster.bc, raster.mask); },
        [&](const ScalarField& f, int i, int j) {
            return stencil_2d(f, raster.eps, raster.rho, i, j, h, kappa);
        });
}

Solve1DResult solve_1d(const std::vector<double>& eps, const std::vector<double>& rho,
                       double left_volts, double right_volts, const SolveConfig& config,
                       double h, double kappa) {
    const int n = static_cast<int>(eps.size());
    if (n < 3) {
        throw std::invalid_argument("solve_1d: need at least 3 nodes");
    }
    if (rho.size() != eps.size()) {
        throw std::invalid_argument("solve_1d: eps and rho lengths differ");
    }
    for (double e : eps) {
        if (!(e > 0.0)) {
            throw std::invalid_argument("solve_1d: permittivity must be positive");
        }
    }

    GridSpec spec{1, n, h, h, CoordSystem::Cartesian1D, 0.0};
    ScalarField eps_field(spec, 0.0), rho_field(spec, 0.0);
    for (int j = 0; j < n; ++j) {
        eps_field(0, j) = eps[static_cast<std::size_t>(j)];
        rho_field(0, j) = rho[static_cast<std::size_t>(j)];
    }
    FixedMask mask(1, n);

    Solve1DResult out;
    const detail::SweepBounds bounds{0, 0, 1, n - 2};
    out.solve = detail::relax_loop(
        ScalarField(spec, 0.0), mask, config, bounds,
        [&](ScalarField& f) {
            f(0, 0) = left_volts;
            f(0, n - 1) = right_volts;
        },
        [&](const ScalarField& f, int, int j) {
            return stencil_1d(f, eps_field, rho_field, j, h, kappa);
        },
        [&](int, const ScalarField& f) { out.snapshots.push_back(f); });
    return out;
}

}  // namespace fieldlab
