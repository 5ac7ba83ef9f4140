#include "mcs/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcs {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

FourierSymbols symbols(const FourierPoint& fp, const ModelParams& mp,
                       const SchemeParams& sp, double c) {
    const double t1 = fp.theta1, t2 = fp.theta2;
    const double lam = sp.lambda;
    const double h = sp.dt / sp.lambda; // dt = lambda h
    const double s1 = std::sin(0.5 * t1), s2 = std::sin(0.5 * t2);
    FourierSymbols sy;
    sy.z0 = -(2.0 * mp.rho * lam / (c * h)) * std::sin(t1) * std::sin(t2);
    sy.z1 = -(4.0 * lam / h) * s1 * s1 + I * (mp.a1 * lam * std::sin(t1));
    sy.z2 = -(4.0 * lam / (c * c * h)) * s2 * s2 +
            I * (mp.a2 * (lam / c) * std::sin(t2));
    sy.z = sy.z0 + sy.z1 + sy.z2;
    sy.p = (1.0 - sp.theta * sy.z1) * (1.0 - sp.theta * sy.z2);
    return sy;
}

cd amplification_R(const FourierSymbols& sy, double theta) {
    return 1.0 + sy.z / sy.p +
           (theta * sy.z0 + (0.5 - theta) * sy.z) * sy.z / (sy.p * sy.p);
}

cd numerical_fourier_UN(const FourierPoint& fp, const ModelParams& mp,
                        const SchemeParams& sp, double c) {
    if (sp.n_rannacher > sp.n_steps)
        throw std::invalid_argument("numerical_fourier_UN: N0 > N");
    const FourierSymbols sy = symbols(fp, mp, sp, c);
    const cd R = amplification_R(sy, sp.theta);
    const int nm = sp.n_steps - sp.n_rannacher;
    if (R == 0.0 && nm > 0) return 0.0;
    // Principal logs are exact for integer powers: exp(n log w) = w^n.
    cd le = 0.0;
    if (nm > 0) le += static_cast<double>(nm) * std::log(R);
    if (sp.n_rannacher > 0)
        le -= 2.0 * sp.n_rannacher * std::log(1.0 - 0.5 * sy.z);
    return std::exp(le);
}

cd expansion_s0(cd kappa, cd eta, const ModelParams& mp) {
    return -kappa * kappa - 2.0 * mp.rho * kappa * eta - eta * eta +
           I * (mp.a1 * kappa + mp.a2 * eta);
}

cd expansion_s2(cd kappa, cd eta, const ModelParams& mp,
                const SchemeParams& sp, double c) {
    const double rho = mp.rho, a1 = mp.a1, a2 = mp.a2;
    const double lam = sp.lambda, th = sp.theta;
    const double cc = c * c;
    const cd s0 = expansion_s0(kappa, eta, mp);
    const cd k2 = kappa * kappa, e2 = eta * eta;
    cd out = k2 * k2 / 12.0 + (rho / 3.0) * (k2 + cc * e2) * kappa * eta +
             cc * e2 * e2 / 12.0 - I * (a1 * k2 * kappa / 6.0) -
             I * (a2 * cc * e2 * eta / 6.0);
    out -= lam * lam * th * th * (-k2 + I * (a1 * kappa)) *
           (-e2 + I * (a2 * eta)) * s0;
    out += (lam * lam / 12.0) * s0 * s0 * s0;
    const cd w = -rho * kappa * eta +
                 (0.5 - th) * (-k2 - e2 + I * (a1 * kappa + a2 * eta));
    out -= lam * lam * s0 * w * w;
    return out;
}

cd expansion_N02(cd kappa, cd eta, const ModelParams& mp,
                 const SchemeParams& sp) {
    const cd s0 = expansion_s0(kappa, eta, mp);
    return 0.25 * sp.n_rannacher * sp.lambda * sp.lambda * s0 * s0;
}

cd expansion_s0(double kappa, double eta, const ModelParams& mp) {
    return expansion_s0(cd(kappa), cd(eta), mp);
}

cd expansion_s2(double kappa, double eta, const ModelParams& mp,
                const SchemeParams& sp, double c) {
    return expansion_s2(cd(kappa), cd(eta), mp, sp, c);
}

cd expansion_N02(double kappa, double eta, const ModelParams& mp,
                 const SchemeParams& sp) {
    return expansion_N02(cd(kappa), cd(eta), mp, sp);
}

double iota(double theta1, double theta2, double rho, double c) {
    const double c1 = std::cos(0.5 * theta1), s1 = std::sin(0.5 * theta1);
    const double c2 = std::cos(0.5 * theta2), s2 = std::sin(0.5 * theta2);
    return c * c * s1 * s1 + 2.0 * rho * c * c1 * s1 * c2 * s2 + s2 * s2;
}

RegionLabel classify_region(double kappa, double eta, double h, double c) {
    const double pi = std::numbers::pi;
    const double u = std::abs(kappa), v = std::abs(c * eta);
    if (u * h > pi * (1.0 + 1e-12) || v * h > pi * (1.0 + 1e-12))
        throw std::invalid_argument("classify_region: point outside [-pi/h, pi/h]");
    const double lo = std::pow(h, -1.0 / 3.0);
    const double hi = std::pow(h, -0.5);
    // boundary points go to the lower-numbered region
    if (u <= lo && v <= lo) return RegionLabel::R1;
    if (u > hi && v > hi) return RegionLabel::R3;
    if (u > hi && v <= lo) return RegionLabel::R4;
    if (v > hi && u <= lo) return RegionLabel::R5;
    return RegionLabel::R2;
}

bool mcs_scalar_stable(double z0t, double z1t, double z2t, double theta,
                       double rho) {
    if (z1t > 0.0 || z2t > 0.0)
        throw std::invalid_argument("mcs_scalar_stable: z1t, z2t must be <= 0");
    if (z1t == 0.0 && z2t == 0.0)
        throw std::invalid_argument("mcs_scalar_stable: z1t or z2t must be < 0");
    const double bound = 2.0 * std::abs(rho) * std::sqrt(z1t * z2t);
    if (std::abs(z0t) > bound * (1.0 + 1e-12))
        throw std::invalid_argument(
            "mcs_scalar_stable: |z0t| exceeds 2|rho|sqrt(z1t z2t)");
    const double p = (1.0 - theta * z1t) * (1.0 - theta * z2t);
    const double zz = z0t + z1t + z2t;
    const double num =
        p * p + p * zz + theta * z0t * zz + (0.5 - theta) * zz * zz;
    return std::abs(num) / (p * p) < 1.0;
}

double region4_modulus(double z22t, double theta) {
    const double w = 1.0 + z22t;
    const double den = w * w * theta * theta;
    return std::abs(den - (2.0 + z22t) * theta + 0.5) / den;
}

bool theta_admissible(double theta, double rho) {
    return theta >= 0.25 && theta > (1.0 + std::abs(rho)) / 6.0;
}

} // namespace mcs
