#pragma once

#include "mcs/fourier.hpp"
#include "mcs/model.hpp"
#include "mcs/quadrature.hpp"
#include "mcs/timestepper.hpp"

namespace mcs {

/// Pointwise error decomposition: e_low = h^2 C^low at (x_j, y_k),
/// e_high = h^(2N0-2) C^high at index (j,k), e_cs the CS-specific
/// O(h^(2N0-1)) term (zero unless theta = 1/2), total their sum.
struct ErrorEstimate {
    double e_low = 0.0;
    double e_high = 0.0;
    double e_cs = 0.0;
    double total = 0.0;
};

/// Error-constant evaluator. Caches the differential-operator form of
/// C^low (a polynomial in (d/dx, d/dy) applied to the shifted Gaussian)
/// so per-gridpoint evaluation is a single polynomial-table sweep.
class ErrorAnalysis {
public:
    ErrorAnalysis(const ModelParams& mp, const SchemeParams& sp, double c,
                  const QuadratureSpec& qs = {});

    /// Differential-operator route (fast, used for full grids).
    double c_low_series(double x, double y) const;
    /// Fourier-inversion quadrature route over |kappa|,|eta| <= radius.
    double c_low_quadrature(double x, double y) const;
    /// Both routes; throws if they disagree beyond 1e-6 relative (where
    /// the magnitude exceeds 1e-12). Returns the quadrature value.
    double c_low(double x, double y) const;

    /// Two-panel cosine integral of the high-wavenumber constant.
    double c_high(int j, int k) const;

    /// CS constants (theta = 1/2 only; throws otherwise).
    double c_cs_j(int j, double y_k) const;
    double c_cs_x(double x_j, int k) const;

    /// Assembles h^2 C^low + h^(2N0-2) C^high (+ CS terms with the
    /// (-1)^(N-N0) parity sign at theta = 1/2). Requires N = T/(lambda h)
    /// integral and consistent with the scheme.
    ErrorEstimate total_error_estimate(int j, int k, double h) const;

    const QuadratureSpec& quadrature() const { return qs_; }

private:
    ModelParams mp_;
    SchemeParams sp_;
    double c_;
    QuadratureSpec qs_;
    Poly2 dop_;            // C^low operator, coeff(n1,n2) of dx^n1 dy^n2
    PhiRhoDerivs derivs_; // phi_rho derivative table, orders <= 6
};

// One-off convenience wrappers with the same semantics.
double c_low(double x, double y, const ModelParams& mp, const SchemeParams& sp,
             double c);
double c_high(int j, int k, const ModelParams& mp, const SchemeParams& sp,
              double c);
double c_cs(int j, double y_k, const ModelParams& mp, const SchemeParams& sp,
            double c);
double c_cs_mirror(double x_j, int k, const ModelParams& mp,
                   const SchemeParams& sp, double c);
ErrorEstimate total_error_estimate(int j, int k, const ModelParams& mp,
                                   const SchemeParams& sp, double c, double h);

} // namespace mcs
