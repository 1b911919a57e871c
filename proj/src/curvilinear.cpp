#include "fieldlab/curvilinear.hpp"

#include <cmath>
#include <stdexcept>

#include "relax.hpp"

namespace fieldlab {

namespace {

inline double polar_stencil(const ScalarField& f, const ScalarField* q, int i, int jm,
                            int j, int jp, double r, double dr, double dal, double eps,
                            double kappa) {
    const double rr = r * r * dal * dal;
    const double charge = q ? kappa * (*q)(i, j) / eps : 0.0;
    const double rhs = (f(i + 1, j) - f(i - 1, j)) / (2.0 * r * dr) +
                       (f(i + 1, j) + f(i - 1, j)) / (dr * dr) +
                       (f(i, jp) + f(i, jm)) / rr + charge;
    return rhs / (2.0 * (1.0 / rr + 1.0 / (dr * dr)));
}

inline double axisym_stencil(const ScalarField& f, const ScalarField* rho, int i, int k,
                             double h, double eps, double kappa, double guard) {
    const double r = h * i + guard;
    const double charge = rho ? kappa * (*rho)(i, k) * h * h / (4.0 * eps) : 0.0;
    return h * (f(i + 1, k) - f(i - 1, k)) / (8.0 * r) +
           (f(i - 1, k) + f(i + 1, k) + f(i, k - 1) + f(i, k + 1)) * 0.25 + charge;
}

const ScalarField* charge_or_null(const ScalarField& rho, const GridSpec& spec) {
    if (rho.values().empty()) return nullptr;
    if (rho.n1() != spec.n1 || rho.n2() != spec.n2) {
        throw std::invalid_argument("solve: charge grid is not co-registered");
    }
    return &rho;
}

void require_mask(const FixedMask& mask, const GridSpec& spec) {
    if (mask.n1() != spec.n1 || mask.n2() != spec.n2) {
        throw std::invalid_argument("solve: mask shape does not match grid");
    }
}

}  // namespace

double update_node_polar(const ScalarField& phi, const ScalarField& rho, int i, int j,
                         double r0, double dr, double dal, double eps, double kappa) {
    if (i < 1 || i > phi.n1() - 2 || j < 1 || j > phi.n2() - 2) {
        throw std::out_of_range("update_node_polar: node must be strictly interior");
    }
    const double r = r0 + i * dr;
    if (!(r > 0.0)) {
        throw std::domain_error("update_node_polar: radius must be positive");
    }
    const ScalarField* q = rho.values().empty() ? nullptr : &rho;
    return polar_stencil(phi, q, i, j - 1, j, j + 1, r, dr, dal, eps, kappa);
}

double update_node_axisym(const ScalarField& phi, const ScalarField& rho, int i, int k,
                          double h, double eps, double kappa, double r_guard) {
    if (i < 1 || i > phi.n1() - 2 || k < 1 || k > phi.n2() - 2) {
        throw std::out_of_range("update_node_axisym: node must be strictly interior");
    }
    const double guard = r_guard < 0.0 ? 0.001 * h : r_guard;
    const ScalarField* q = rho.values().empty() ? nullptr : &rho;
    return axisym_stencil(phi, q, i, k, h, eps, kappa, guard);
}

SolveResult solve_polar(const PolarProblem& problem, const SolveConfig& config) {
    const GridSpec& spec = problem.spec;
    spec.validate();
    if (spec.system != CoordSystem::Polar) {
        throw std::invalid_argument("solve_polar: grid system must be polar");
    }
    if (!(problem.eps > 0.0)) {
        throw std::invalid_argument("solve_polar: permittivity must be positive");
    }
    require_mask(problem.mask, spec);
    const ScalarField* q = charge_or_null(problem.rho, spec);

    const double dr = spec.h1, dal = spec.h2;
    const int n2 = spec.n2;
    const bool low_ray_mirror = std::holds_alternative<Neumann>(problem.bc.low2);
    const bool high_ray_mirror = std::holds_alternative<Neumann>(problem.bc.high2);

    // Neumann rays are active columns with mirror ghosts, so they are swept
    // rather than overwritten by the boundary pass.
    const detail::SweepBounds bounds{1, spec.n1 - 2, low_ray_mirror ? 0 : 1,
                                     high_ray_mirror ? n2 - 1 : n2 - 2};

    auto impose = [&](ScalarField& f) {
        apply_edge(f, Edge::Low1, problem.bc.low1);
        apply_edge(f, Edge::High1, problem.bc.high1);
        if (!low_ray_mirror) apply_edge(f, Edge::Low2, problem.bc.low2);
        if (!high_ray_mirror) apply_edge(f, Edge::High2, problem.bc.high2);
        apply_mask(f, problem.mask);
    };
    auto update = [&](const ScalarField& f, int i, int j) {
        const int jm = (j == 0) ? 0 : j - 1;
        const int jp = (j == n2 - 1) ? n2 - 1 : j + 1;
        return polar_stencil(f, q, i, jm, j, jp, spec.radius_at(i), dr, dal,
                             problem.eps, problem.kappa);
    };

    return detail::relax_loop(ScalarField(spec, 0.0), problem.mask, config, bounds,
                              impose, update);
}

SolveResult solve_axisym(const AxisymProblem& problem, const SolveConfig& config) {
    const GridSpec& spec = problem.spec;
    spec.validate();
    if (spec.system != CoordSystem::Axisymmetric) {
        throw std::invalid_argument("solve_axisym: grid system must be axisym");
    }
    if (spec.h1 != spec.h2) {
        throw std::invalid_argument("solve_axisym: requires square cells (h1 == h2)");
    }
    if (!(problem.eps > 0.0)) {
        throw std::invalid_argument("solve_axisym: permittivity must be positive");
    }
    require_mask(problem.mask, spec);
    const ScalarField* q = charge_or_null(problem.rho, spec);

    const double h = spec.h1;
    const double guard = problem.r_guard < 0.0 ? 0.001 * h : problem.r_guard;
    const detail::SweepBounds bounds{1, spec.n1 - 2, 1, spec.n2 - 2};

    return detail::relax_loop(
        ScalarField(spec, 0.0), problem.mask, config, bounds,
        [&](ScalarField& f) { apply_boundaries(f, problem.bc, problem.mask); },
        [&](const ScalarField& f, int i, int k) {
            return axisym_stencil(f, q, i, k, h, problem.eps, problem.kappa, guard);
        });
}

}  // namespace fieldlab
