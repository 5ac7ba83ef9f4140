#include "mcs/stencil.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

void StencilOperators::check(const GridField& u) const {
    if (u.grid != grid_ || static_cast<int>(u.values.size()) != grid_->size())
        throw std::invalid_argument("StencilOperators: field grid mismatch");
}

StencilOperators StencilOperators::model_problem(const Grid2D& grid,
                                                 const ModelParams& p) {
    StencilOperators s;
    s.grid_ = &grid;
    const int n = grid.size();
    const double ih1 = 1.0 / (grid.h1 * grid.h1);
    const double ih2 = 1.0 / (grid.h2 * grid.h2);
    const double cx = p.a1 / (2.0 * grid.h1);
    const double cy = p.a2 / (2.0 * grid.h2);
    s.l1_.assign(n, ih1 - cx);
    s.d1_.assign(n, -2.0 * ih1);
    s.r1_.assign(n, ih1 + cx);
    s.l2_.assign(n, ih2 - cy);
    s.d2_.assign(n, -2.0 * ih2);
    s.r2_.assign(n, ih2 + cy);
    s.c0_.assign(n, p.rho / (2.0 * grid.h1 * grid.h2));
    s.ring_.assign((grid.nx + 2) * (grid.ny + 2), 0.0);
    s.bsrc_ = GridField(grid);
    s.has_boundary_ = false;
    return s;
}

StencilOperators StencilOperators::black_scholes_value(const Grid2D& grid,
                                                       const BSParams& bs) {
    StencilOperators s;
    s.grid_ = &grid;
    const int n = grid.size();
    s.l1_.resize(n);
    s.d1_.resize(n);
    s.r1_.resize(n);
    s.l2_.resize(n);
    s.d2_.resize(n);
    s.r2_.resize(n);
    s.c0_.resize(n);
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double s2 = grid.y(iy);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double s1 = grid.x(ix);
            const int i = grid.index(ix, iy);
            const double diff1 = 0.5 * bs.sigma1 * bs.sigma1 * s1 * s1;
            const double diff2 = 0.5 * bs.sigma2 * bs.sigma2 * s2 * s2;
            const double dr1 = bs.r * s1;
            const double dr2 = bs.r * s2;
            const double ih1 = 1.0 / (grid.h1 * grid.h1);
            const double ih2 = 1.0 / (grid.h2 * grid.h2);
            s.l1_[i] = diff1 * ih1 - dr1 / (2.0 * grid.h1);
            s.d1_[i] = -2.0 * diff1 * ih1 - 0.5 * bs.r;
            s.r1_[i] = diff1 * ih1 + dr1 / (2.0 * grid.h1);
            s.l2_[i] = diff2 * ih2 - dr2 / (2.0 * grid.h2);
            s.d2_[i] = -2.0 * diff2 * ih2 - 0.5 * bs.r;
            s.r2_[i] = diff2 * ih2 + dr2 / (2.0 * grid.h2);
            s.c0_[i] = bs.rho * bs.sigma1 * bs.sigma2 * s1 * s2 /
                       (4.0 * grid.h1 * grid.h2);
        }
    }
    // payoff-valued Dirichlet ring
    s.ring_.assign((grid.nx + 2) * (grid.ny + 2), 0.0);
    auto payoff = [&](double p1, double p2) {
        return (p1 >= bs.K1 && p2 >= bs.K2) ? 1.0 : 0.0;
    };
    for (int px = 0; px <= grid.nx + 1; ++px) {
        const double p1 = grid.xmin + px * grid.h1;
        s.ring(px, 0) = payoff(p1, grid.ymin);
        s.ring(px, grid.ny + 1) = payoff(p1, grid.ymax);
    }
    for (int py = 0; py <= grid.ny + 1; ++py) {
        const double p2 = grid.ymin + py * grid.h2;
        s.ring(0, py) = payoff(grid.xmin, p2);
        s.ring(grid.nx + 1, py) = payoff(grid.xmax, p2);
    }
    s.has_boundary_ = true;
    s.compute_boundary_source();
    return s;
}

StencilOperators StencilOperators::black_scholes_cross_gamma(const Grid2D& grid,
                                                             const BSParams& bs) {
    StencilOperators s;
    s.grid_ = &grid;
    const int n = grid.size();
    s.l1_.resize(n);
    s.d1_.resize(n);
    s.r1_.resize(n);
    s.l2_.resize(n);
    s.d2_.resize(n);
    s.r2_.resize(n);
    s.c0_.resize(n);
    const double react = bs.r + bs.rho * bs.sigma1 * bs.sigma2;
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double s2 = grid.y(iy);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double s1 = grid.x(ix);
            const int i = grid.index(ix, iy);
            const double diff1 = 0.5 * bs.sigma1 * bs.sigma1 * s1 * s1;
            const double diff2 = 0.5 * bs.sigma2 * bs.sigma2 * s2 * s2;
            const double dr1 =
                (bs.r + bs.sigma1 * bs.sigma1 + bs.rho * bs.sigma1 * bs.sigma2) * s1;
            const double dr2 =
                (bs.r + bs.sigma2 * bs.sigma2 + bs.rho * bs.sigma1 * bs.sigma2) * s2;
            const double ih1 = 1.0 / (grid.h1 * grid.h1);
            const double ih2 = 1.0 / (grid.h2 * grid.h2);
            s.l1_[i] = diff1 * ih1 - dr1 / (2.0 * grid.h1);
            s.d1_[i] = -2.0 * diff1 * ih1 + 0.5 * react;
            s.r1_[i] = diff1 * ih1 + dr1 / (2.0 * grid.h1);
            s.l2_[i] = diff2 * ih2 - dr2 / (2.0 * grid.h2);
            s.d2_[i] = -2.0 * diff2 * ih2 + 0.5 * react;
            s.r2_[i] = diff2 * ih2 + dr2 / (2.0 * grid.h2);
            s.c0_[i] = bs.rho * bs.sigma1 * bs.sigma2 * s1 * s2 /
                       (4.0 * grid.h1 * grid.h2);
        }
    }
    s.ring_.assign((grid.nx + 2) * (grid.ny + 2), 0.0);
    s.bsrc_ = GridField(grid);
    s.has_boundary_ = false;
    return s;
}

void StencilOperators::apply_A1(const GridField& u, GridField& out) const {
    check(u);
    const Grid2D& g = *grid_;
    for (int iy = 0; iy < g.ny; ++iy) {
        const int row = iy * g.nx;
        const double* v = u.values.data() + row;
        double* o = out.values.data() + row;
        for (int ix = 0; ix < g.nx; ++ix) {
            const double left = (ix > 0) ? v[ix - 1] : 0.0;
            const double right = (ix + 1 < g.nx) ? v[ix + 1] : 0.0;
            o[ix] = l1_[row + ix] * left + d1_[row + ix] * v[ix] +
                    r1_[row + ix] * right;
        }
    }
}

void StencilOperators::apply_A2(const GridField& u, GridField& out) const {
    check(u);
    const Grid2D& g = *grid_;
    for (int iy = 0; iy < g.ny; ++iy) {
        const int row = iy * g.nx;
        const double* down = (iy > 0) ? u.values.data() + row - g.nx : nullptr;
        const double* up = (iy + 1 < g.ny) ? u.values.data() + row + g.nx : nullptr;
        const double* v = u.values.data() + row;
        double* o = out.values.data() + row;
        for (int ix = 0; ix < g.nx; ++ix) {
            const double lo = down ? down[ix] : 0.0;
            const double hi = up ? up[ix] : 0.0;
            o[ix] = l2_[row + ix] * lo + d2_[row + ix] * v[ix] + r2_[row + ix] * hi;
        }
    }
}

void StencilOperators::apply_A0(const GridField& u, GridField& out) const {
    check(u);
    const Grid2D& g = *grid_;
    auto val = [&](int ix, int iy) -> double {
        if (ix < 0 || ix >= g.nx || iy < 0 || iy >= g.ny) return 0.0;
        return u.values[iy * g.nx + ix];
    };
    for (int iy = 0; iy < g.ny; ++iy) {
        const int row = iy * g.nx;
        double* o = out.values.data() + row;
        if (iy > 0 && iy + 1 < g.ny) {
            const double* dn = u.values.data() + row - g.nx;
            const double* up = u.values.data() + row + g.nx;
            o[0] = c0_[row] * (up[1] - dn[1]); // left edge: west neighbours are 0
            for (int ix = 1; ix + 1 < g.nx; ++ix)
                o[ix] = c0_[row + ix] *
                        (up[ix + 1] + dn[ix - 1] - dn[ix + 1] - up[ix - 1]);
            const int e = g.nx - 1;
            o[e] = c0_[row + e] * (dn[e - 1] - up[e - 1]);
        } else {
            for (int ix = 0; ix < g.nx; ++ix)
                o[ix] = c0_[row + ix] *
                        (val(ix + 1, iy + 1) + val(ix - 1, iy - 1) -
                         val(ix + 1, iy - 1) - val(ix - 1, iy + 1));
        }
    }
}

void StencilOperators::apply_A(const GridField& u, GridField& out) const {
    check(u);
    const Grid2D& g = *grid_;
    auto val = [&](int ix, int iy) -> double {
        if (ix < 0 || ix >= g.nx || iy < 0 || iy >= g.ny) return 0.0;
        return u.values[iy * g.nx + ix];
    };
    for (int iy = 0; iy < g.ny; ++iy) {
        const int row = iy * g.nx;
        double* o = out.values.data() + row;
        if (iy > 0 && iy + 1 < g.ny) {
            const double* dn = u.values.data() + row - g.nx;
            const double* md = u.values.data() + row;
            const double* up = u.values.data() + row + g.nx;
            for (int ix = 0; ix < g.nx; ++ix) {
                const int i = row + ix;
                const double w = (ix > 0) ? md[ix - 1] : 0.0;
                const double e = (ix + 1 < g.nx) ? md[ix + 1] : 0.0;
                const double sw = (ix > 0) ? dn[ix - 1] : 0.0;
                const double se = (ix + 1 < g.nx) ? dn[ix + 1] : 0.0;
                const double nw = (ix > 0) ? up[ix - 1] : 0.0;
                const double ne = (ix + 1 < g.nx) ? up[ix + 1] : 0.0;
                o[ix] = l1_[i] * w + (d1_[i] + d2_[i]) * md[ix] + r1_[i] * e +
                        l2_[i] * dn[ix] + r2_[i] * up[ix] +
                        c0_[i] * (ne + sw - se - nw);
            }
        } else {
            for (int ix = 0; ix < g.nx; ++ix) {
                const int i = row + ix;
                o[ix] = l1_[i] * val(ix - 1, iy) + (d1_[i] + d2_[i]) * val(ix, iy) +
                        r1_[i] * val(ix + 1, iy) + l2_[i] * val(ix, iy - 1) +
                        r2_[i] * val(ix, iy + 1) +
                        c0_[i] * (val(ix + 1, iy + 1) + val(ix - 1, iy - 1) -
                                  val(ix + 1, iy - 1) - val(ix - 1, iy + 1));
            }
        }
    }
}

GridField StencilOperators::apply_A0(const GridField& u) const {
    GridField out(*grid_);
    apply_A0(u, out);
    return out;
}
GridField StencilOperators::apply_A1(const GridField& u) const {
    GridField out(*grid_);
    apply_A1(u, out);
    return out;
}
GridField StencilOperators::apply_A2(const GridField& u) const {
    GridField out(*grid_);
    apply_A2(u, out);
    return out;
}
GridField StencilOperators::apply_A(const GridField& u) const {
    GridField out(*grid_);
    apply_A(u, out);
    return out;
}

void StencilOperators::compute_boundary_source() {
    const Grid2D& g = *grid_;
    bsrc_ = GridField(g);
    // ring(px,py) uses padded indices; interior point (ix,iy) sits at padded
    // (ix+1, iy+1). Only points adjacent to the ring receive contributions.
    auto rv = [&](int ix, int iy) -> double { // interior coordinates, ring value
        if (ix >= 0 && ix < g.nx && iy >= 0 && iy < g.ny) return 0.0;
        return ring(ix + 1, iy + 1);
    };
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            if (ix > 0 && ix + 1 < g.nx && iy > 0 && iy + 1 < g.ny) continue;
            const int i = g.index(ix, iy);
            bsrc_.values[i] =
                l1_[i] * rv(ix - 1, iy) + r1_[i] * rv(ix + 1, iy) +
                l2_[i] * rv(ix, iy - 1) + r2_[i] * rv(ix, iy + 1) +
                c0_[i] * (rv(ix + 1, iy + 1) + rv(ix - 1, iy - 1) -
                          rv(ix + 1, iy - 1) - rv(ix - 1, iy + 1));
        }
}

} // namespace mcs
