#include "mcs/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcs {

namespace {
constexpr double kPi = std::numbers::pi;
}

ModelParams::ModelParams(double rho_, double a1_, double a2_)
    : rho(rho_), a1(a1_), a2(a2_) {
    if (!(std::abs(rho) < 1.0))
        throw std::invalid_argument("ModelParams: |rho| must be < 1");
}

BSParams::BSParams(double r_, double sigma1_, double sigma2_, double rho_,
                   double K1_, double K2_, double T_)
    : r(r_), sigma1(sigma1_), sigma2(sigma2_), rho(rho_), K1(K1_), K2(K2_), T(T_) {
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0))
        throw std::invalid_argument("BSParams: volatilities must be positive");
    if (!(std::abs(rho) < 1.0))
        throw std::invalid_argument("BSParams: |rho| must be < 1");
    if (!(K1 > 0.0) || !(K2 > 0.0))
        throw std::invalid_argument("BSParams: strikes must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("BSParams: maturity must be positive");
}

double exact_solution(double x, double y, double t, const ModelParams& p) {
    if (!(t > 0.0)) throw std::invalid_argument("exact_solution: t must be > 0");
    const double om = 1.0 - p.rho * p.rho;
    const double u = x + p.a1 * t;
    const double v = y + p.a2 * t;
    const double q = (u * u + v * v - 2.0 * p.rho * u * v) / (4.0 * t * om);
    return std::exp(-q) / (4.0 * kPi * t * std::sqrt(om));
}

std::complex<double> exact_fourier(double kappa, double eta, double t,
                                   const ModelParams& p) {
    const std::complex<double> expo(
        -(kappa * kappa + 2.0 * p.rho * kappa * eta + eta * eta) * t,
        (p.a1 * kappa + p.a2 * eta) * t);
    return std::exp(expo);
}

double phi_rho(double x, double y, const ModelParams& p) {
    const double om = 1.0 - p.rho * p.rho;
    const double q = (x * x - 2.0 * p.rho * x * y + y * y) / (2.0 * om);
    return std::exp(-q) / (2.0 * kPi * std::sqrt(om));
}

PhiRhoDerivs::PhiRhoDerivs(double rho, int max_order) : max_order_(max_order) {
    if (max_order < 0) throw std::invalid_argument("PhiRhoDerivs: negative order");
    const double om = 1.0 - rho * rho;
    // L_x = -(x - rho y)/(1-rho^2), L_y = -(y - rho x)/(1-rho^2)
    const Poly2 lx = Poly2::monomial(1, 0, -1.0 / om) + Poly2::monomial(0, 1, rho / om);
    const Poly2 ly = Poly2::monomial(0, 1, -1.0 / om) + Poly2::monomial(1, 0, rho / om);

    table_.assign(max_order + 1, {});
    // first build pure-x derivatives, then extend in y
    table_[0].resize(max_order + 1);
    table_[0][0] = Poly2::constant(1.0);
    for (int n2 = 1; n2 <= max_order; ++n2)
        table_[0][n2] = table_[0][n2 - 1].dy() + table_[0][n2 - 1] * ly;
    for (int n1 = 1; n1 <= max_order; ++n1) {
        table_[n1].resize(max_order - n1 + 1);
        table_[n1][0] = table_[n1 - 1][0].dx() + table_[n1 - 1][0] * lx;
        for (int n2 = 1; n2 <= max_order - n1; ++n2)
            table_[n1][n2] = table_[n1][n2 - 1].dy() + table_[n1][n2 - 1] * ly;
    }
}

const Poly2& PhiRhoDerivs::poly(int n1, int n2) const {
    if (n1 < 0 || n2 < 0 || n1 + n2 > max_order_)
        throw std::invalid_argument("PhiRhoDerivs: order out of range");
    return table_[n1][n2];
}

double PhiRhoDerivs::eval(int n1, int n2, double x, double y,
                          const ModelParams& p) const {
    return poly(n1, n2).eval(x, y) * phi_rho(x, y, p);
}

double phi_rho_partial(int n1, int n2, double x, double y, const ModelParams& p) {
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("phi_rho_partial: negative order");
    if (n1 + n2 > 6)
        throw std::invalid_argument("phi_rho_partial: total order above 6");
    thread_local double cached_rho = 2.0; // impossible value
    thread_local PhiRhoDerivs table(0.0, 0);
    if (cached_rho != p.rho) {
        table = PhiRhoDerivs(p.rho, 6);
        cached_rho = p.rho;
    }
    return table.eval(n1, n2, x, y, p);
}

std::pair<double, double> bs_to_model(double s1, double s2, const BSParams& bs) {
    if (!(s1 > 0.0) || !(s2 > 0.0))
        throw std::invalid_argument("bs_to_model: prices must be positive");
    const double rt2 = std::sqrt(2.0);
    return {rt2 * std::log(s1) / bs.sigma1, rt2 * std::log(s2) / bs.sigma2};
}

std::pair<double, double> model_to_bs(double x, double y, const BSParams& bs) {
    const double rt2 = std::sqrt(2.0);
    return {std::exp(bs.sigma1 * x / rt2), std::exp(bs.sigma2 * y / rt2)};
}

} // namespace mcs
