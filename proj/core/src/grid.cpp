#include "mcs/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mcs {

namespace {

// Checks that span/h is an integer to 1e-12 relative; returns the count.
long check_divisible(double span, double h, const char* what) {
    const double q = span / h;
    const double r = std::round(q);
    if (r < 1.0 || std::abs(q - r) > 1e-12 * std::max(1.0, std::abs(q)))
        throw std::invalid_argument(std::string("build_grid: ") + what +
                                    " not divisible by mesh width");
    return static_cast<long>(r);
}

bool on_grid(double v, double lo, double h) {
    const double q = (v - lo) / h;
    return std::abs(q - std::round(q)) <= 1e-9 * std::max(1.0, std::abs(q));
}

} // namespace

int Grid2D::locate(double px, double py) const {
    if (!on_grid(px, xmin, h1) || !on_grid(py, ymin, h2))
        throw std::invalid_argument("Grid2D::locate: point is not a gridpoint");
    const int ix = static_cast<int>(std::round((px - xmin) / h1)) - 1;
    const int iy = static_cast<int>(std::round((py - ymin) / h2)) - 1;
    if (ix < 0 || ix >= nx || iy < 0 || iy >= ny)
        throw std::invalid_argument("Grid2D::locate: point is not interior");
    return index(ix, iy);
}

bool Grid2D::has_origin() const {
    return on_grid(0.0, xmin, h1) && on_grid(0.0, ymin, h2);
}

Grid2D build_grid(double xmin, double xmax, double ymin, double ymax, double h1,
                  double c) {
    if (!(h1 > 0.0) || !(c > 0.0))
        throw std::invalid_argument("build_grid: h1 and c must be positive");
    const double h2 = c * h1;
    Grid2D g;
    g.xmin = xmin;
    g.xmax = xmax;
    g.ymin = ymin;
    g.ymax = ymax;
    g.h1 = h1;
    g.h2 = h2;
    g.nx = static_cast<int>(check_divisible(xmax - xmin, h1, "x bounds")) - 1;
    g.ny = static_cast<int>(check_divisible(ymax - ymin, h2, "y bounds")) - 1;
    if (g.nx < 1 || g.ny < 1)
        throw std::invalid_argument("build_grid: grid has no interior points");
    return g;
}

GridField dirac_initial(const Grid2D& grid) {
    if (!grid.has_origin())
        throw std::invalid_argument("dirac_initial: (0,0) is not a gridpoint");
    GridField f(grid);
    f.values[grid.locate(0.0, 0.0)] = 1.0 / (grid.h1 * grid.h2);
    return f;
}

GridField cash_or_nothing_initial(const Grid2D& grid, const BSParams& bs) {
    GridField f(grid);
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix)
            f(ix, iy) = (grid.x(ix) >= bs.K1 && grid.y(iy) >= bs.K2) ? 1.0 : 0.0;
    return f;
}

GridField cross_gamma_dirac_initial(const Grid2D& grid, const BSParams& bs) {
    GridField f(grid);
    f.values[grid.locate(bs.K1, bs.K2)] = 1.0 / (grid.h1 * grid.h2);
    return f;
}

void write_field_csv(const GridField& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_field_csv: cannot open " + path);
    out << "x,y,value\n";
    char buf[128];
    const Grid2D& g = *f.grid;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", g.x(ix),
                          g.y(iy), f(ix, iy));
            out << buf;
        }
}

} // namespace mcs
