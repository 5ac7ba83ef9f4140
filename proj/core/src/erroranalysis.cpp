#include "mcs/erroranalysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcs {

namespace {

constexpr double pi = std::numbers::pi;

double std_normal_pdf(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * pi);
}

/// The C^low differential operator as a polynomial in (d/dx, d/dy); the
/// overall 1/2 prefactor is folded in.
Poly2 build_low_operator(const ModelParams& mp, const SchemeParams& sp,
                         double c) {
    const double rho = mp.rho, a1 = mp.a1, a2 = mp.a2;
    const double lam = sp.lambda, th = sp.theta;
    const double cc = c * c;
    const double r2 = std::sqrt(2.0);
    auto mono = [](int i, int j, double v) { return Poly2::monomial(i, j, v); };

    // L = 1/2 dxx + rho dxy + 1/2 dyy + a1/sqrt2 dx + a2/sqrt2 dy
    Poly2 L = mono(2, 0, 0.5) + mono(1, 1, rho) + mono(0, 2, 0.5) +
              mono(1, 0, a1 / r2) + mono(0, 1, a2 / r2);

    Poly2 D = mono(4, 0, 1.0 / 48.0) + mono(3, 1, rho / 12.0) +
              mono(1, 3, cc * rho / 12.0) + mono(0, 4, cc / 48.0) +
              mono(3, 0, a1 / (12.0 * r2)) + mono(0, 3, a2 * cc / (12.0 * r2));

    Poly2 px = mono(2, 0, 0.5) + mono(1, 0, a1 / r2);
    Poly2 py = mono(0, 2, 0.5) + mono(0, 1, a2 / r2);
    D = D - px * py * L * (lam * lam * th * th);

    D += L * L * L * (lam * lam / 12.0);

    Poly2 W = mono(1, 1, rho / 2.0) +
              (mono(2, 0, 0.5) + mono(0, 2, 0.5) + mono(1, 0, a1 / r2) +
               mono(0, 1, a2 / r2)) *
                  (0.5 - th);
    D = D - L * W * W * (lam * lam);

    D += L * L * (sp.n_rannacher * lam * lam / 4.0);

    D = D * 0.5;
    D.trim();
    return D;
}

// Cosine-weighted integrals cancel to far below the integrand's pointwise
// scale at high frequency; give the refinement an absolute floor at that
// scale so it does not stall on roundoff.
QuadratureSpec with_abs_floor(QuadratureSpec qs, double integrand_scale,
                              double measure) {
    qs.abs_tol = 1e-13 * integrand_scale * measure;
    return qs;
}

double sampled_scale_1d(const std::function<double(double)>& f, double a,
                        double b) {
    double m = 0.0;
    for (int i = 0; i <= 256; ++i)
        m = std::max(m, std::abs(f(a + (b - a) * i / 256.0)));
    return m;
}

double sampled_scale_2d(const std::function<double(double, double)>& f,
                        double ax, double bx, double ay, double by) {
    double m = 0.0;
    for (int i = 0; i <= 64; ++i)
        for (int j = 0; j <= 64; ++j)
            m = std::max(m, std::abs(f(ax + (bx - ax) * i / 64.0,
                                       ay + (by - ay) * j / 64.0)));
    return m;
}

} // namespace

ErrorAnalysis::ErrorAnalysis(const ModelParams& mp, const SchemeParams& sp,
                             double c, const QuadratureSpec& qs)
    : mp_(mp), sp_(sp), c_(c), qs_(qs),
      dop_(build_low_operator(mp, sp, c)), derivs_(mp.rho, 6) {
    if (!theta_admissible(sp.theta, mp.rho))
        throw std::invalid_argument("ErrorAnalysis: theta is not admissible");
    if (!(c > 0.0)) throw std::invalid_argument("ErrorAnalysis: c must be > 0");
}

double ErrorAnalysis::c_low_series(double x, double y) const {
    const double u = (x + mp_.a1) / std::sqrt(2.0);
    const double v = (y + mp_.a2) / std::sqrt(2.0);
    const double phi = phi_rho(u, v, mp_);
    // The derivatives in the operator act on phi_rho's own arguments and
    // are then evaluated at the scaled point (no chain-rule factor).
    double out = 0.0;
    for (int n1 = 0; n1 <= dop_.degree(); ++n1)
        for (int n2 = 0; n2 <= dop_.degree(); ++n2) {
            const double cf = dop_.coeff(n1, n2);
            if (cf == 0.0) continue;
            out += cf * derivs_.poly(n1, n2).eval(u, v) * phi;
        }
    return out;
}

double ErrorAnalysis::c_low_quadrature(double x, double y) const {
    using cd = std::complex<double>;
    // Inverse transform of u_hat (s2 + N02) with the Gaussian square
    // completed: the linear phase i(kappa X + eta Y) is absorbed by the
    // contour shift kappa -> kappa + sk, eta -> eta + se, which removes
    // the oscillation and factors out the exp(-X' A^-1 X'/4) envelope, so
    // the result stays accurate in relative terms far from the peak.
    const double rho = mp_.rho;
    const double X = x + mp_.a1, Y = y + mp_.a2;
    const double d = 1.0 - rho * rho;
    const cd sk(0.0, 0.5 * (X - rho * Y) / d);
    const cd se(0.0, 0.5 * (Y - rho * X) / d);
    const double envelope =
        std::exp(-(X * X - 2.0 * rho * X * Y + Y * Y) / (4.0 * d));
    const double r = qs_.radius;
    auto f = [&](double kappa, double eta) -> cd {
        const cd zk = kappa + sk, ze = eta + se;
        const cd coeff = expansion_s2(zk, ze, mp_, sp_, c_) +
                         expansion_N02(zk, ze, mp_, sp_);
        return std::exp(-kappa * kappa - 2.0 * rho * kappa * eta - eta * eta) *
               coeff;
    };
    QuadResultC q = integrate2d_c(f, -r, r, -r, r, qs_);
    if (!q.converged)
        throw std::runtime_error(
            "c_low: quadrature failed to converge, last delta " +
            std::to_string(q.last_delta));
    return envelope * q.value.real() / (4.0 * pi * pi);
}

double ErrorAnalysis::c_low(double x, double y) const {
    const double qa = c_low_quadrature(x, y);
    const double se = c_low_series(x, y);
    const double scale = std::max(std::abs(qa), std::abs(se));
    if (scale > 1e-12 && std::abs(qa - se) > 1e-6 * scale)
        throw std::runtime_error("c_low: quadrature and operator routes disagree");
    return qa;
}

double ErrorAnalysis::c_high(int j, int k) const {
    const double lam = sp_.lambda, th = sp_.theta;
    const int n0 = sp_.n_rannacher;
    auto f = [&](double t1, double t2) -> double {
        const double s1 = std::sin(0.5 * t1), s2 = std::sin(0.5 * t2);
        const double ss = s1 * s1 * s2 * s2;
        if (ss < 1e-12) return 0.0; // integrand vanishes to all orders
        const double io = iota(t1, t2, mp_.rho, c_);
        double val = std::cos(j * t1 + k * t2) *
                     std::exp(-io / (4.0 * lam * lam * th * th * ss));
        if (n0 > 0) val /= std::pow(2.0 * lam * io, 2 * n0);
        return val;
    };
    const QuadratureSpec qs = with_abs_floor(
        qs_, sampled_scale_2d(f, -pi, pi, 0.0, pi), pi * pi);
    QuadResult qa = integrate2d(f, 0.0, pi, 0.0, pi, qs);
    QuadResult qb = integrate2d(f, -pi, 0.0, 0.0, pi, qs);
    if (!qa.converged || !qb.converged)
        throw std::runtime_error(
            "c_high: quadrature failed to converge, last delta " +
            std::to_string(std::max(qa.last_delta, qb.last_delta)));
    const double pref = std::pow(c_, 4 * n0 - 1) / (2.0 * pi * pi);
    return pref * (qa.value + qb.value);
}

double ErrorAnalysis::c_cs_j(int j, double y_k) const {
    if (sp_.theta != 0.5)
        throw std::invalid_argument("c_cs: requires theta = 1/2");
    const double lam = sp_.lambda;
    const int n0 = sp_.n_rannacher;
    auto f = [&](double t1) -> double {
        const double s2 = std::sin(0.5 * t1) * std::sin(0.5 * t1);
        if (s2 < 1e-12) return 0.0;
        double val = std::cos(j * t1) * std::exp(-1.0 / (lam * lam * s2));
        if (n0 > 0) val /= std::pow(2.0 * lam * s2, 2 * n0);
        return val;
    };
    const QuadratureSpec qs =
        with_abs_floor(qs_, sampled_scale_1d(f, -pi, pi), 2.0 * pi);
    QuadResult q = integrate(f, -pi, pi, qs);
    if (!q.converged)
        throw std::runtime_error("c_cs: quadrature failed to converge");
    return std_normal_pdf((y_k + mp_.a2) / std::sqrt(2.0)) /
           (2.0 * std::sqrt(2.0) * pi) * q.value;
}

double ErrorAnalysis::c_cs_x(double x_j, int k) const {
    if (sp_.theta != 0.5)
        throw std::invalid_argument("c_cs: requires theta = 1/2");
    const double lam = sp_.lambda;
    const int n0 = sp_.n_rannacher;
    auto f = [&](double t2) -> double {
        const double s2 = std::sin(0.5 * t2) * std::sin(0.5 * t2);
        if (s2 < 1e-12) return 0.0;
        double val = std::cos(k * t2) *
                     std::exp(-c_ * c_ / (lam * lam * s2));
        if (n0 > 0) val /= std::pow(2.0 * (lam / c_) * s2, 2 * n0);
        return val;
    };
    const QuadratureSpec qs =
        with_abs_floor(qs_, sampled_scale_1d(f, -pi, pi), 2.0 * pi);
    QuadResult q = integrate(f, -pi, pi, qs);
    if (!q.converged)
        throw std::runtime_error("c_cs: quadrature failed to converge");
    return std_normal_pdf((x_j + mp_.a1) / std::sqrt(2.0)) /
           (2.0 * std::sqrt(2.0) * c_ * pi) * q.value;
}

ErrorEstimate ErrorAnalysis::total_error_estimate(int j, int k, double h) const {
    const double nf = sp_.T / (sp_.lambda * h);
    const double nr = std::round(nf);
    if (nr < 1.0 || std::abs(nf - nr) > 1e-9 * nf)
        throw std::invalid_argument(
            "total_error_estimate: N = T/(lambda h) is not a positive integer");
    const int n = static_cast<int>(nr);
    const double x = j * h, y = k * c_ * h;
    ErrorEstimate e;
    e.e_low = h * h * c_low_series(x, y);
    e.e_high = std::pow(h, 2 * sp_.n_rannacher - 2) * c_high(j, k);
    if (sp_.theta == 0.5) {
        const double sign = ((n - sp_.n_rannacher) % 2 == 0) ? 1.0 : -1.0;
        e.e_cs = std::pow(h, 2 * sp_.n_rannacher - 1) * sign *
                 (c_cs_j(j, y) + c_cs_x(x, k));
    }
    e.total = e.e_low + e.e_high + e.e_cs;
    return e;
}

double c_low(double x, double y, const ModelParams& mp, const SchemeParams& sp,
             double c) {
    return ErrorAnalysis(mp, sp, c).c_low(x, y);
}

double c_high(int j, int k, const ModelParams& mp, const SchemeParams& sp,
              double c) {
    return ErrorAnalysis(mp, sp, c).c_high(j, k);
}

double c_cs(int j, double y_k, const ModelParams& mp, const SchemeParams& sp,
            double c) {
    return ErrorAnalysis(mp, sp, c).c_cs_j(j, y_k);
}

double c_cs_mirror(double x_j, int k, const ModelParams& mp,
                   const SchemeParams& sp, double c) {
    return ErrorAnalysis(mp, sp, c).c_cs_x(x_j, k);
}

ErrorEstimate total_error_estimate(int j, int k, const ModelParams& mp,
                                   const SchemeParams& sp, double c, double h) {
    return ErrorAnalysis(mp, sp, c).total_error_estimate(j, k, h);
}

} // namespace mcs
