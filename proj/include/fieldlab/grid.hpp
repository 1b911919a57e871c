#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fieldlab {

enum class CoordSystem { Cartesian2D, Cartesian1D, Polar, Axisymmetric };

std::string to_string(CoordSystem s);
CoordSystem coord_system_from_string(const std::string& s);

/// Uniform structured grid: n1 x n2 nodes with spacings h1/h2.
/// Axis 1 is x (Cartesian) or r (Polar/Axisymmetric); axis 2 is y, the
/// angle, or z. r0 offsets the radial coordinate: node i sits at
/// r = r0 + i*h1.
struct GridSpec {
    int n1 = 0;
    int n2 = 0;
    double h1 = 1.0;
    double h2 = 1.0;
    CoordSystem system = CoordSystem::Cartesian2D;
    double r0 = 0.0;

    /// Throws std::invalid_argument when the spec cannot host a solve
    /// (too few nodes, non-positive spacing, bad radial offset).
    void validate() const;

    [[nodiscard]] double radius_at(int i) const { return r0 + h1 * i; }

    bool operator==(const GridSpec&) const = default;
};

/// Dense node-centered scalar grid (potential, permittivity, charge).
/// Row-major over axis 1: value(i, j) = values[i*n2 + j].
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(const GridSpec& spec, double init)
        : spec_(spec),
          values_(static_cast<std::size_t>(spec.n1) * static_cast<std::size_t>(spec.n2), init) {
        if (spec.n1 < 1 || spec.n2 < 1) {
            throw std::invalid_argument("ScalarField: grid dimensions must be positive");
        }
    }

    [[nodiscard]] int n1() const { return spec_.n1; }
    [[nodiscard]] int n2() const { return spec_.n2; }
    [[nodiscard]] const GridSpec& spec() const { return spec_; }

    double& operator()(int i, int j) { return values_[index(i, j)]; }
    const double& operator()(int i, int j) const { return values_[index(i, j)]; }

    double& at(int i, int j) {
        check(i, j);
        return values_[index(i, j)];
    }
    [[nodiscard]] const double& at(int i, int j) const {
        check(i, j);
        return values_[index(i, j)];
    }

    [[nodiscard]] std::vector<double>& values() { return values_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }

    [[nodiscard]] bool same_shape(const ScalarField& other) const {
        return spec_.n1 == other.spec_.n1 && spec_.n2 == other.spec_.n2;
    }

    [[nodiscard]] bool all_finite() const;
    [[nodiscard]] double min_value() const;
    [[nodiscard]] double max_value() const;

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(spec_.n2) +
               static_cast<std::size_t>(j);
    }
    void check(int i, int j) const {
        if (i < 0 || i >= spec_.n1 || j < 0 || j >= spec_.n2) {
            throw std::out_of_range("ScalarField: index out of range");
        }
    }

    GridSpec spec_;
    std::vector<double> values_;
};

/// Validates the spec and returns a field with every node set to init.
ScalarField new_field(const GridSpec& spec, double init);

/// Max over nodes of |a - b|. Throws std::invalid_argument on shape mismatch.
double max_abs_diff(const ScalarField& a, const ScalarField& b);

// --- Boundary conditions -------------------------------------------------

enum class Edge { Low1, High1, Low2, High2 };

struct Neumann {
    bool operator==(const Neumann&) const = default;
};
struct Dirichlet {
    double value = 0.0;
    bool operator==(const Dirichlet&) const = default;
};
struct DirichletProfile {
    std::vector<double> values;  // one entry per edge node
    bool operator==(const DirichletProfile&) const = default;
};

using EdgeCondition = std::variant<Neumann, Dirichlet, DirichletProfile>;

/// Per-edge boundary conditions. Low1/High1 are the i = 0 / i = n1-1 lines,
/// Low2/High2 the j = 0 / j = n2-1 lines. Defaults to Neumann everywhere.
struct BoundarySpec {
    EdgeCondition low1;
    EdgeCondition high1;
    EdgeCondition low2;
    EdgeCondition high2;

    [[nodiscard]] const EdgeCondition& at(Edge e) const;
    bool operator==(const BoundarySpec&) const = default;
};

/// Nodes whose potential is held fixed every pass (electrodes, conductors,
/// pinned interior points).
class FixedMask {
public:
    FixedMask() = default;
    FixedMask(int n1, int n2)
        : n1_(n1), n2_(n2),
          pinned_(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2), 0),
          value_(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2), 0.0) {}

    void pin(int i, int j, double volts) {
        pinned_[index(i, j)] = 1;
        value_[index(i, j)] = volts;
    }
    [[nodiscard]] bool pinned(int i, int j) const { return pinned_[index(i, j)] != 0; }
    [[nodiscard]] double value(int i, int j) const { return value_[index(i, j)]; }
    [[nodiscard]] bool empty() const {
        for (auto p : pinned_)
            if (p) return false;
        return true;
    }
    [[nodiscard]] int n1() const { return n1_; }
    [[nodiscard]] int n2() const { return n2_; }

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n2_) +
               static_cast<std::size_t>(j);
    }

    int n1_ = 0;
    int n2_ = 0;
    std::vector<std::uint8_t> pinned_;
    std::vector<double> value_;
};

/// Writes one edge's condition onto the field. Neumann copies the adjacent
/// interior line; Dirichlet/DirichletProfile overwrite the edge line.
void apply_edge(ScalarField& field, Edge edge, const EdgeCondition& cond);

/// Overwrites every pinned node with its pinned value.
void apply_mask(ScalarField& field, const FixedMask& mask);

/// Re-imposes all boundary conditions, edges in the order low1, high1,
/// low2, high2 (later edges win corners), then the mask (pins win
/// everything). Idempotent; never touches interior non-pinned nodes.
/// For 1-row grids (Cartesian1D) the axis-1 edges are skipped.
void apply_boundaries(ScalarField& field, const BoundarySpec& bc, const FixedMask& mask);

/// Grids a solver consumes: co-registered permittivity and charge fields,
/// pinned nodes, edge conditions and the charge-to-volts scale kappa.
struct RasterizedScene {
    GridSpec spec;
    ScalarField eps;
    ScalarField rho;
    FixedMask mask;
    BoundarySpec bc;
    double kappa = 1.0;
};

}  // namespace fieldlab
