// Internal relaxation loop shared by the Cartesian and curvilinear solvers.
#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "fieldlab/solver.hpp"

namespace fieldlab::detail {

/// Inclusive index ranges of the nodes a pass updates.
struct SweepBounds {
    int i_lo, i_hi, j_lo, j_hi;
};

template <class Fn>
void for_nodes(const SweepBounds& b, SweepDirection d, Fn&& fn) {
    switch (d) {
        case SweepDirection::Forward12:
            for (int i = b.i_lo; i <= b.i_hi; ++i)
                for (int j = b.j_lo; j <= b.j_hi; ++j) fn(i, j);
            break;
        case SweepDirection::Reverse12:
            for (int i = b.i_hi; i >= b.i_lo; --i)
                for (int j = b.j_hi; j >= b.j_lo; --j) fn(i, j);
            break;
        case SweepDirection::Forward21:
            for (int j = b.j_lo; j <= b.j_hi; ++j)
                for (int i = b.i_lo; i <= b.i_hi; ++i) fn(i, j);
            break;
        case SweepDirection::Reverse21:
            for (int j = b.j_hi; j >= b.j_lo; --j)
                for (int i = b.i_hi; i >= b.i_lo; --i) fn(i, j);
            break;
    }
}

/// Runs the relaxation protocol: each iteration re-imposes boundaries before
/// every pass, sweeps the scheduled directions (or one Jacobi pass when
/// double-buffered), and stops when the max node change per iteration drops
/// below tolerance. `update(src, i, j)` returns the stencil value for a node;
/// in-place passes read the field being written, Jacobi passes read the
/// previous iterate. The observer, when set, is called on the report stride.
template <class Update, class Impose>
SolveResult relax_loop(ScalarField phi, const FixedMask& mask, const SolveConfig& cfg,
                       const SweepBounds& bounds, Impose&& impose, Update&& update,
                       const std::function<void(int, const ScalarField&)>& observer = {}) {
    cfg.validate();

    SolveResult result;
    ScalarField prev = phi;
    ScalarField buffer;
    const bool has_mask = mask.n1() > 0;

    auto pass_in_place = [&](SweepDirection dir) {
        for_nodes(bounds, dir, [&](int i, int j) {
            if (has_mask && mask.pinned(i, j)) return;
            phi(i, j) = update(phi, i, j);
        });
    };
    auto pass_jacobi = [&]() {
        buffer = phi;
        for_nodes(bounds, SweepDirection::Forward12, [&](int i, int j) {
            if (has_mask && mask.pinned(i, j)) return;
            buffer(i, j) = update(phi, i, j);
        });
        phi.values().swap(buffer.values());
    };

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        prev.values() = phi.values();

        if (cfg.double_buffered) {
            impose(phi);
            pass_jacobi();
        } else {
            for (SweepDirection dir : cfg.sweep_schedule) {
                impose(phi);
                pass_in_place(dir);
            }
        }

        double change = 0.0;
        bool finite = true;
        {
            const auto& a = phi.values();
            const auto& b = prev.values();
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double d = std::abs(a[k] - b[k]);
                if (!(d <= change)) change = d;  // NaN-aware: NaN falls through
                if (!std::isfinite(a[k])) finite = false;
            }
        }
        if (!finite || !std::isfinite(change)) {
            throw DivergenceError(iter);
        }

        result.iterations_run = iter;
        const bool converged = change < cfg.tolerance;
        const bool last = iter == cfg.max_iterations;
        if (iter % cfg.report_every == 0 || converged || last) {
            result.residual_history.emplace_back(iter, change);
            if (observer) observer(iter, phi);
        }
        if (converged) {
            result.converged = true;
            break;
        }
    }

    impose(phi);  // result satisfies the boundary conditions exactly
    result.potential = std::move(phi);
    return result;
}

}  // namespace fieldlab::detail
