#include "fieldlab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace fieldlab {

std::string to_string(CoordSystem s) {
    switch (s) {
        case CoordSystem::Cartesian2D: return "cartesian";
        case CoordSystem::Cartesian1D: return "cartesian1d";
        case CoordSystem::Polar: return "polar";
        case CoordSystem::Axisymmetric: return "axisym";
    }
    return "cartesian";
}

CoordSystem coord_system_from_string(const std::string& s) {
    if (s == "cartesian") return CoordSystem::Cartesian2D;
    if (s == "cartesian1d") return CoordSystem::Cartesian1D;
    if (s == "polar") return CoordSystem::Polar;
    if (s == "axisym") return CoordSystem::Axisymmetric;
    throw std::invalid_argument("unknown coordinate system '" + s + "'");
}

void GridSpec::validate() const {
    if (h1 <= 0.0 || h2 <= 0.0) {
        throw std::invalid_argument("GridSpec: spacings must be positive");
    }
    if (system == CoordSystem::Cartesian1D) {
        if (n1 != 1 || n2 < 3) {
            throw std::invalid_argument(
                "GridSpec: 1D grids are 1 x n2 with n2 >= 3");
        }
        return;
    }
    if (n1 < 3 || n2 < 3) {
        throw std::invalid_argument("GridSpec: need at least 3 nodes per axis");
    }
    if (system == CoordSystem::Polar) {
        if (r0 <= 0.0) {
            throw std::invalid_argument("GridSpec: polar grids need r0 > 0");
        }
        if (h2 * n2 > 2.0 * 3.14159265358979323846 + 1e-12) {
            throw std::invalid_argument("GridSpec: angular span exceeds 2*pi");
        }
    }
    if (system == CoordSystem::Axisymmetric && r0 < 0.0) {
        throw std::invalid_argument("GridSpec: axisymmetric grids need r0 >= 0");
    }
}

bool ScalarField::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

double ScalarField::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

ScalarField new_field(const GridSpec& spec, double init) {
    spec.validate();
    return ScalarField(spec, init);
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("max_abs_diff: field shapes differ");
    }
    double m = 0.0;
    const auto& va = a.values();
    const auto& vb = b.values();
    for (std::size_t k = 0; k < va.size(); ++k) {
        m = std::max(m, std::abs(va[k] - vb[k]));
    }
    return m;
}

const EdgeCondition& BoundarySpec::at(Edge e) const {
    switch (e) {
        case Edge::Low1: return low1;
        case Edge::High1: return high1;
        case Edge::Low2: return low2;
        case Edge::High2: return high2;
    }
    return low1;
}

namespace {

int edge_length(const ScalarField& f, Edge e) {
    return (e == Edge::Low1 || e == Edge::High1) ? f.n2() : f.n1();
}

void set_edge_node(ScalarField& f, Edge e, int k, double v) {
    switch (e) {
        case Edge::Low1: f(0, k) = v; break;
        case Edge::High1: f(f.n1() - 1, k) = v; break;
        case Edge::Low2: f(k, 0) = v; break;
        case Edge::High2: f(k, f.n2() - 1) = v; break;
    }
}

double interior_neighbor(const ScalarField& f, Edge e, int k) {
    switch (e) {
        case Edge::Low1: return f(1, k);
        case Edge::High1: return f(f.n1() - 2, k);
        case Edge::Low2: return f(k, 1);
        case Edge::High2: return f(k, f.n2() - 2);
    }
    return 0.0;
}

}  // namespace

void apply_edge(ScalarField& field, Edge edge, const EdgeCondition& cond) {
    const int len = edge_length(field, edge);
    if (std::holds_alternative<Neumann>(cond)) {
        for (int k = 0; k < len; ++k) {
            set_edge_node(field, edge, k, interior_neighbor(field, edge, k));
        }
    } else if (const auto* d = std::get_if<Dirichlet>(&cond)) {
        for (int k = 0; k < len; ++k) {
            set_edge_node(field, edge, k, d->value);
        }
    } else {
        const auto& profile = std::get<DirichletProfile>(cond);
        if (static_cast<int>(profile.values.size()) != len) {
            throw std::invalid_argument(
                "apply_edge: profile length does not match edge node count");
        }
        for (int k = 0; k < len; ++k) {
            set_edge_node(field, edge, k, profile.values[k]);
        }
    }
}

void apply_mask(ScalarField& field, const FixedMask& mask) {
    if (mask.n1() == 0 && mask.n2() == 0) return;  // empty mask is a no-op
    if (mask.n1() != field.n1() || mask.n2() != field.n2()) {
        throw std::invalid_argument("apply_mask: mask shape does not match field");
    }
    for (int i = 0; i < field.n1(); ++i) {
        for (int j = 0; j < field.n2(); ++j) {
            if (mask.pinned(i, j)) field(i, j) = mask.value(i, j);
        }
    }
}

void apply_boundaries(ScalarField& field, const BoundarySpec& bc, const FixedMask& mask) {
    const bool one_row = field.n1() < 2 || field.spec().system == CoordSystem::Cartesian1D;
    if (!one_row) {
        apply_edge(field, Edge::Low1, bc.low1);
        apply_edge(field, Edge::High1, bc.high1);
    }
    apply_edge(field, Edge::Low2, bc.low2);
    apply_edge(field, Edge::High2, bc.high2);
    apply_mask(field, mask);
}

}  // namespace fieldlab
