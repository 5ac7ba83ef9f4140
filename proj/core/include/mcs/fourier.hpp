#pragma once

#include <complex>

#include "mcs/model.hpp"
#include "mcs/timestepper.hpp"

namespace mcs {

/// Scaled wavenumbers theta_i = kappa h1 (resp. eta h2), both in [-pi, pi].
struct FourierPoint {
    double theta1 = 0.0;
    double theta2 = 0.0;

    static FourierPoint from_wavenumbers(double kappa, double eta, double h,
                                         double c) {
        return {kappa * h, eta * c * h};
    }
};

/// Symbols of the scaled operators dt*A0, dt*A1, dt*A2 at a Fourier point.
struct FourierSymbols {
    std::complex<double> z0, z1, z2;
    std::complex<double> z; // z0 + z1 + z2
    std::complex<double> p; // (1 - theta z1)(1 - theta z2)
};

enum class RegionLabel { R1, R2, R3, R4, R5 };

FourierSymbols symbols(const FourierPoint& fp, const ModelParams& mp,
                       const SchemeParams& sp, double c);

/// R = 1 + z/p + (theta z0 + (1/2 - theta) z) z / p^2
std::complex<double> amplification_R(const FourierSymbols& sym, double theta);

/// Transform of the numerical solution with U0_hat = 1:
/// R^(N-N0) * (1 - z/2)^(-2 N0), log-domain evaluation.
std::complex<double> numerical_fourier_UN(const FourierPoint& fp,
                                          const ModelParams& mp,
                                          const SchemeParams& sp, double c);

// Expansion coefficients of log(U_hat_N) around h = 0 (s1 vanishes). The
// complex-argument overloads evaluate the same polynomials on shifted
// integration contours.
std::complex<double> expansion_s0(double kappa, double eta, const ModelParams& mp);
std::complex<double> expansion_s2(double kappa, double eta, const ModelParams& mp,
                                  const SchemeParams& sp, double c = 1.0);
std::complex<double> expansion_N02(double kappa, double eta,
                                   const ModelParams& mp,
                                   const SchemeParams& sp);
std::complex<double> expansion_s0(std::complex<double> kappa,
                                  std::complex<double> eta,
                                  const ModelParams& mp);
std::complex<double> expansion_s2(std::complex<double> kappa,
                                  std::complex<double> eta,
                                  const ModelParams& mp, const SchemeParams& sp,
                                  double c = 1.0);
std::complex<double> expansion_N02(std::complex<double> kappa,
                                   std::complex<double> eta,
                                   const ModelParams& mp,
                                   const SchemeParams& sp);

/// iota = c^2 sin^2(t1/2) + 2 rho c cos(t1/2) sin(t1/2) cos(t2/2) sin(t2/2)
///        + sin^2(t2/2); positive off the axes for |rho| < 1.
double iota(double theta1, double theta2, double rho, double c);

/// Wavenumber-space partition with boundary exponents 1/3 and 1/2;
/// boundary points go to the lower-numbered region. Throws if
/// |kappa| h > pi or |c eta| h > pi.
RegionLabel classify_region(double kappa, double eta, double h, double c);

/// Von Neumann stability predicate for real limit symbols (z1t, z2t <= 0,
/// |z0t| <= 2|rho| sqrt(z1t z2t), not both zero). Throws if the
/// constraints are violated.
bool mcs_scalar_stable(double z0t, double z1t, double z2t, double theta,
                       double rho);

/// Limit modulus |(1+w)^2 th^2 - (2+w) th + 1/2| / ((1+w)^2 th^2) of the
/// amplification factor in the high-wavenumber corner, w = z22t.
double region4_modulus(double z22t, double theta);

/// theta >= 1/4 and theta > (1 + |rho|)/6.
bool theta_admissible(double theta, double rho);

} // namespace mcs
