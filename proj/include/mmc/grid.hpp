/// @file grid.hpp
/// @brief Periodic staggered-grid containers: cell-centered and face-centered fields.
///
/// Grid layout (uniform square, period L in both directions, N cells per side):
///   - cell centers   at ((i+1/2)h, (j+1/2)h), 0-based i,j; h = L/N
///   - east-west faces at ((i+1)h, (j+1/2)h): x_values[i][j] holds position (i+1/2, j)
///     in half-index notation, i.e. the "plus" face of cell (i,j)
///   - north-south faces analogously in y
/// All index arithmetic is modulo N in both directions.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mmc {

struct GridSpec {
    int n = 0;           ///< cells per side
    double length = 0.0; ///< domain side L
    double h = 0.0;      ///< mesh size L/n

    static GridSpec make(int n, double length) {
        if (n < 4) throw std::invalid_argument("GridSpec: n must be >= 4");
        if (!(length > 0.0)) throw std::invalid_argument("GridSpec: length must be positive");
        return GridSpec{n, length, length / n};
    }

    /// x-coordinate of the center of cell i (same formula in y).
    double cell_center(int i) const { return (i + 0.5) * h; }
    /// x-coordinate of the plus face of cell i.
    double face_center(int i) const { return (i + 1.0) * h; }

    double cell_area() const { return h * h; }
    double domain_area() const { return length * length; }
    std::size_t cells() const { return static_cast<std::size_t>(n) * n; }

    bool operator==(const GridSpec& o) const { return n == o.n && length == o.length; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

/// Cell-centered scalar field, row-major with the x index major: values[i*n + j].
struct CellField {
    GridSpec grid;
    std::vector<double> values;

    CellField() = default;
    explicit CellField(GridSpec g, double fill = 0.0) : grid(g), values(g.cells(), fill) {}

    double& operator()(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n + j]; }
    double operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n + j]; }

    double* data() { return values.data(); }
    const double* data() const { return values.data(); }
    std::size_t size() const { return values.size(); }
};

/// Face-centered vector field; x_values[i*n + j] lives at (i+1/2, j),
/// y_values[i*n + j] at (i, j+1/2) in half-index notation.
struct EdgeField {
    GridSpec grid;
    std::vector<double> x_values;
    std::vector<double> y_values;

    EdgeField() = default;
    explicit EdgeField(GridSpec g, double fill = 0.0)
        : grid(g), x_values(g.cells(), fill), y_values(g.cells(), fill) {}

    double& x(int i, int j) { return x_values[static_cast<std::size_t>(i) * grid.n + j]; }
    double x(int i, int j) const { return x_values[static_cast<std::size_t>(i) * grid.n + j]; }
    double& y(int i, int j) { return y_values[static_cast<std::size_t>(i) * grid.n + j]; }
    double y(int i, int j) const { return y_values[static_cast<std::size_t>(i) * grid.n + j]; }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": mismatched grids");
}

} // namespace mmc
