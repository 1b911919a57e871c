#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fieldlab/grid.hpp"

namespace fieldlab {

/// Traversal orders for one relaxation pass. "12" means axis 1 is the outer
/// loop, "21" means axis 2 is; Forward ascends both indices, Reverse
/// descends both.
enum class SweepDirection { Forward12, Reverse12, Forward21, Reverse21 };

std::string to_string(SweepDirection d);
SweepDirection sweep_direction_from_string(const std::string& s);

/// The four-direction cycle that alternates every traversal order.
std::vector<SweepDirection> default_sweep_schedule();

struct SolveConfig {
    int max_iterations = 50000;
    double tolerance = 1e-6;  // stop when max node change per iteration < tolerance
    std::vector<SweepDirection> sweep_schedule = default_sweep_schedule();
    int report_every = 100;  // residual-history sampling stride
    bool double_buffered = false;  // Jacobi-style passes instead of in-place

    void validate() const {
        if (max_iterations < 1) {
            throw std::invalid_argument("SolveConfig: max_iterations must be >= 1");
        }
        if (tolerance < 0.0) {
            throw std::invalid_argument("SolveConfig: tolerance must be >= 0");
        }
        if (sweep_schedule.empty()) {
            throw std::invalid_argument("SolveConfig: sweep_schedule must be non-empty");
        }
        if (report_every < 1) {
            throw std::invalid_argument("SolveConfig: report_every must be >= 1");
        }
    }

    bool operator==(const SolveConfig&) const = default;
};

struct SolveResult {
    ScalarField potential;
    int iterations_run = 0;
    bool converged = false;
    std::vector<std::pair<int, double>> residual_history;  // (iteration, max change)

    [[nodiscard]] double final_residual() const {
        return residual_history.empty() ? 0.0 : residual_history.back().second;
    }
};

/// Raised when a non-finite node value appears mid-solve.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(int iteration)
        : std::runtime_error("solver diverged: non-finite node value at iteration " +
                             std::to_string(iteration)),
          iteration_(iteration) {}
    [[nodiscard]] int iteration() const { return iteration_; }

private:
    int iteration_;
};

}  // namespace fieldlab
