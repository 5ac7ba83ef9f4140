#pragma once

#include <string>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

/// Uniform Cartesian grid on [xmin,xmax] x [ymin,ymax]. Boundary points
/// carry Dirichlet data; fields live on the nx * ny interior points.
struct Grid2D {
    double xmin, xmax, ymin, ymax;
    double h1, h2;
    int nx, ny; // interior point counts

    double x(int ix) const { return xmin + (ix + 1) * h1; } // ix in [0, nx)
    double y(int iy) const { return ymin + (iy + 1) * h2; }
    int size() const { return nx * ny; }
    int index(int ix, int iy) const { return iy * nx + ix; }

    /// Interior index of the gridpoint nearest to (px, py); throws if the
    /// point is not a gridpoint (1e-9 relative) or not interior.
    int locate(double px, double py) const;

    bool has_origin() const;
};

/// Builds a grid with h2 = c * h1. Bounds must be integer multiples of the
/// mesh widths (1e-12 relative) so that (0,0) type anchor points can lie
/// exactly on the grid.
Grid2D build_grid(double xmin, double xmax, double ymin, double ymax, double h1,
                  double c);

/// Real-valued function on the interior gridpoints, row-major with the
/// x-index fastest.
struct GridField {
    const Grid2D* grid = nullptr;
    std::vector<double> values;

    GridField() = default;
    explicit GridField(const Grid2D& g) : grid(&g), values(g.size(), 0.0) {}

    double& operator()(int ix, int iy) { return values[grid->index(ix, iy)]; }
    double operator()(int ix, int iy) const { return values[grid->index(ix, iy)]; }
};

/// Discrete Dirac delta: 1/(h1 h2) at the origin gridpoint, zero elsewhere.
GridField dirac_initial(const Grid2D& grid);

/// Two-asset cash-or-nothing payoff 1{s1 >= K1} 1{s2 >= K2} on a grid in
/// price coordinates ("greater or equal" at the strike).
GridField cash_or_nothing_initial(const Grid2D& grid, const BSParams& bs);

/// delta(s1 - K1) delta(s2 - K2): 1/(h1 h2) at the strike gridpoint.
GridField cross_gamma_dirac_initial(const Grid2D& grid, const BSParams& bs);

/// CSV serialization, header "x,y,value", 17 significant digits.
void write_field_csv(const GridField& f, const std::string& path);

} // namespace mcs
