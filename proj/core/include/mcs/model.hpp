#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "mcs/poly2.hpp"

namespace mcs {

/// Coefficients of the constant-coefficient convection-diffusion model
///   u_t = u_xx + 2 rho u_xy + u_yy + a1 u_x + a2 u_y
struct ModelParams {
    double rho;
    double a1;
    double a2;

    ModelParams(double rho_, double a1_, double a2_);
};

/// Two-asset Black-Scholes parameters for the demo workload.
struct BSParams {
    double r;
    double sigma1;
    double sigma2;
    double rho;
    double K1;
    double K2;
    double T;

    BSParams(double r_, double sigma1_, double sigma2_, double rho_,
             double K1_, double K2_, double T_);
};

/// Closed-form solution of the model problem with Dirac initial data:
/// bivariate Gaussian with mean (-a1 t, -a2 t) and covariance 2t [[1,rho],[rho,1]].
double exact_solution(double x, double y, double t, const ModelParams& p);

/// Fourier transform of the exact solution,
/// exp(-(kappa^2 + 2 rho kappa eta + eta^2 - i a1 kappa - i a2 eta) t).
std::complex<double> exact_fourier(double kappa, double eta, double t,
                                   const ModelParams& p);

/// Standard bivariate normal density with correlation rho.
double phi_rho(double x, double y, const ModelParams& p);

/// Exact mixed partial derivative d^{n1+n2}/dx^{n1} dy^{n2} of phi_rho,
/// via the polynomial recursion d/dx (P phi) = (P' - P (x - rho y)/(1-rho^2)) phi.
/// Orders with n1 + n2 > 6 are rejected.
double phi_rho_partial(int n1, int n2, double x, double y, const ModelParams& p);

/// Coordinate transform x = sqrt(2) log(s1)/sigma1, y = sqrt(2) log(s2)/sigma2.
std::pair<double, double> bs_to_model(double s1, double s2, const BSParams& bs);
std::pair<double, double> model_to_bs(double x, double y, const BSParams& bs);

/// Cached table of the polynomial factors P_{n1,n2} with
/// d^{n1+n2} phi_rho / dx^{n1} dy^{n2} = P_{n1,n2}(x,y) phi_rho(x,y),
/// for all n1 + n2 <= max_order.
class PhiRhoDerivs {
public:
    PhiRhoDerivs(double rho, int max_order);

    int max_order() const { return max_order_; }
    const Poly2& poly(int n1, int n2) const;
    double eval(int n1, int n2, double x, double y, const ModelParams& p) const;

private:
    int max_order_;
    std::vector<std::vector<Poly2>> table_; // table_[n1][n2]
};

} // namespace mcs
