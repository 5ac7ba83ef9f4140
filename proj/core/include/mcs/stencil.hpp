#pragma once

#include "mcs/grid.hpp"
#include "mcs/model.hpp"

namespace mcs {

/// The three stencil operators of the semidiscrete system A = A0 + A1 + A2:
/// A0 the 4-point cross stencil of the mixed derivative, A1/A2 the 3-point
/// per-direction stencils. Coefficients may vary per point (Black-Scholes
/// demo); the model problem uses constant coefficients.
///
/// All apply_* calls treat values outside the interior as given by the
/// stored Dirichlet ring; the homogeneous part (ring = 0) and the constant
/// boundary source are kept separate so that time steppers can cancel
/// boundary terms exactly where the scheme algebra does.
class StencilOperators {
public:
    /// Model problem: A0 = rho/(2 h1 h2) d2x d2y,
    /// A1 = dxx/h1^2 + a1 d2x/(2 h1), A2 = dyy/h2^2 + a2 d2y/(2 h2),
    /// homogeneous Dirichlet ring.
    static StencilOperators model_problem(const Grid2D& grid, const ModelParams& p);

    /// Two-dimensional Black-Scholes operator in price coordinates with
    /// payoff-valued Dirichlet boundary; the -r u reaction is split evenly
    /// between A1 and A2.
    static StencilOperators black_scholes_value(const Grid2D& grid,
                                                const BSParams& bs);

    /// Cross-gamma PDE: same diffusion, drifts (r + sigma_i^2 + rho s1 s2)
    /// and reaction +(r + rho sigma1 sigma2), zero Dirichlet boundary.
    static StencilOperators black_scholes_cross_gamma(const Grid2D& grid,
                                                      const BSParams& bs);

    const Grid2D& grid() const { return *grid_; }

    // Homogeneous stencil applications (Dirichlet ring treated as zero).
    void apply_A0(const GridField& u, GridField& out) const;
    void apply_A1(const GridField& u, GridField& out) const;
    void apply_A2(const GridField& u, GridField& out) const;
    void apply_A(const GridField& u, GridField& out) const; // A0+A1+A2

    GridField apply_A0(const GridField& u) const;
    GridField apply_A1(const GridField& u) const;
    GridField apply_A2(const GridField& u) const;
    GridField apply_A(const GridField& u) const;

    /// Constant contribution of the Dirichlet ring: A applied to the field
    /// that is zero inside and equals the boundary data on the ring.
    const GridField& boundary_source() const { return bsrc_; }
    bool has_boundary_data() const { return has_boundary_; }

    // Per-point line coefficients, exposed for the tridiagonal stages.
    // A1 u at (ix,iy) = l1 u(ix-1,iy) + d1 u(ix,iy) + r1 u(ix+1,iy); same
    // pattern for A2 along y.
    const std::vector<double>& l1() const { return l1_; }
    const std::vector<double>& d1() const { return d1_; }
    const std::vector<double>& r1() const { return r1_; }
    const std::vector<double>& l2() const { return l2_; }
    const std::vector<double>& d2() const { return d2_; }
    const std::vector<double>& r2() const { return r2_; }
    /// A0 u = c0 * (u_NE + u_SW - u_SE - u_NW)
    const std::vector<double>& c0() const { return c0_; }

private:
    StencilOperators() = default;
    void check(const GridField& u) const;
    void compute_boundary_source();

    const Grid2D* grid_ = nullptr;
    std::vector<double> l1_, d1_, r1_;
    std::vector<double> l2_, d2_, r2_;
    std::vector<double> c0_;

    // Dirichlet ring, stored as a padded (nx+2) x (ny+2) frame whose
    // interior entries are zero.
    std::vector<double> ring_;
    bool has_boundary_ = false;
    GridField bsrc_;

    double ring(int px, int py) const { // padded indices 0..nx+1, 0..ny+1
        return ring_[py * (grid_->nx + 2) + px];
    }
    double& ring(int px, int py) {
        return ring_[py * (grid_->nx + 2) + px];
    }
};

} // namespace mcs
