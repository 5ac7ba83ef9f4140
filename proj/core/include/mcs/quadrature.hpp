#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mcs {

/// Composite Gauss-Legendre quadrature controls. Refinement doubles the
/// panel count until two successive estimates agree to rel_tol; the final
/// delta is reported alongside the value.
struct QuadratureSpec {
    int gl_order = 16;
    int init_panels = 4;
    int max_panels = 1 << 16;
    double rel_tol = 1e-8;
    // Refinement also stops once the delta falls below abs_tol. Oscillatory
    // integrands can cancel to far below their pointwise magnitude, in which
    // case a purely relative test stalls at roundoff level.
    double abs_tol = 0.0;
    double radius = 12.0; // truncation radius for unbounded Fourier inversions
};

struct QuadResult {
    double value = 0.0;
    double last_delta = 0.0; // |change| at the final refinement level
    int panels = 0;
    bool converged = false;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double last_delta = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});
QuadResultC integrate_c(const std::function<std::complex<double>(double)>& f,
                        double a, double b, const QuadratureSpec& spec = {});

/// Tensor-product 2D quadrature over [ax,bx] x [ay,by] with simultaneous
/// panel doubling in both directions.
QuadResult integrate2d(const std::function<double(double, double)>& f,
                       double ax, double bx, double ay, double by,
                       const QuadratureSpec& spec = {});
QuadResultC integrate2d_c(
    const std::function<std::complex<double>(double, double)>& f,
    double ax, double bx, double ay, double by, const QuadratureSpec& spec = {});

} // namespace mcs
