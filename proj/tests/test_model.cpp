#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mcs/model.hpp"
#include "mcs/quadrature.hpp"

using namespace mcs;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST_CASE("ModelParams enforces |rho| < 1") {
    CHECK_NOTHROW(ModelParams(-0.7, 2.0, 3.0));
    CHECK_THROWS(ModelParams(1.0, 0.0, 0.0));
    CHECK_THROWS(ModelParams(-1.3, 0.0, 0.0));
}

TEST_CASE("exact_solution closed form") {
    const ModelParams p(-0.7, 2.0, 3.0);
    // exponent vanishes at the mean (-a1 t, -a2 t)
    const double peak = exact_solution(-2.0, -3.0, 1.0, p);
    CHECK(peak == doctest::Approx(1.0 / (4.0 * pi * std::sqrt(0.51)))
                      .epsilon(1e-12));
    CHECK(peak == doctest::Approx(0.111441).epsilon(1e-5));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double v = exact_solution(u(rng), u(rng), 1.0, p);
        CHECK(v > 0.0);
        CHECK(v <= peak);
    }
    CHECK_THROWS(exact_solution(0.0, 0.0, 0.0, p));
    CHECK_THROWS(exact_solution(0.0, 0.0, -1.0, p));
}

TEST_CASE("exact_solution integrates to one") {
    const ModelParams p(-0.7, 2.0, 3.0);
    QuadratureSpec qs;
    qs.rel_tol = 1e-10;
    auto f = [&](double x, double y) { return exact_solution(x, y, 1.0, p); };
    // +-15 leaves a tail below 1e-12; the default box [-10,10]^2 carries a
    // ~4e-7 truncation deficit of its own.
    const QuadResult q = integrate2d(f, -15.0, 15.0, -15.0, 15.0, qs);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exact_fourier values and bounds") {
    const ModelParams p(-0.7, 2.0, 3.0);
    CHECK(exact_fourier(0.0, 0.0, 0.7, p) == cd(1.0, 0.0));
    const cd v = exact_fourier(1.0, 0.0, 1.0, p);
    const cd want = std::exp(cd(-1.0, 2.0));
    CHECK(std::abs(v - want) < 1e-14);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double k = u(rng), e = u(rng);
        CHECK(std::abs(exact_fourier(k, e, 1.0, p)) <=
              std::exp(-(1.0 - 0.7) * (k * k + e * e)) * (1.0 + 1e-12));
        // semigroup property of the constant-coefficient symbol
        const cd lhs = exact_fourier(k, e, 0.3, p) * exact_fourier(k, e, 0.9, p);
        CHECK(std::abs(lhs - exact_fourier(k, e, 1.2, p)) < 1e-14);
    }
}

TEST_CASE("exact_solution matches inverse Fourier quadrature") {
    const ModelParams p(-0.7, 2.0, 3.0);
    QuadratureSpec qs;
    qs.rel_tol = 1e-10;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 5; ++i) {
        const double x = u(rng), y = u(rng);
        auto f = [&](double kappa, double eta) {
            return exact_fourier(kappa, eta, 1.0, p) *
                   std::exp(cd(0.0, kappa * x + eta * y));
        };
        const QuadResultC q =
            integrate2d_c(f, -qs.radius, qs.radius, -qs.radius, qs.radius, qs);
        CHECK(q.converged);
        const double inv = q.value.real() / (4.0 * pi * pi);
        CHECK(inv == doctest::Approx(exact_solution(x, y, 1.0, p)).epsilon(1e-6));
    }
}

TEST_CASE("phi_rho values and symmetry") {
    const ModelParams p(-0.7, 0.0, 0.0);
    CHECK(phi_rho(0.0, 0.0, p) ==
          doctest::Approx(1.0 / (2.0 * pi * std::sqrt(0.51))).epsilon(1e-12));
    CHECK(phi_rho(0.0, 0.0, p) == doctest::Approx(0.2228614971).epsilon(1e-8));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double x = u(rng), y = u(rng);
        CHECK(phi_rho(x, y, p) == doctest::Approx(phi_rho(y, x, p)).epsilon(1e-14));
        CHECK(phi_rho(x, y, p) ==
              doctest::Approx(phi_rho(-x, -y, p)).epsilon(1e-14));
    }
}

TEST_CASE("phi_rho Fourier transform at (1,1)") {
    const ModelParams p(-0.7, 0.0, 0.0);
    QuadratureSpec qs;
    qs.rel_tol = 1e-10;
    auto f = [&](double x, double y) {
        return phi_rho(x, y, p) * std::exp(cd(0.0, -(x + y)));
    };
    const QuadResultC q = integrate2d_c(f, -12.0, 12.0, -12.0, 12.0, qs);
    CHECK(q.converged);
    const cd want = std::exp(cd(-0.5 - (-0.7) - 0.5, 0.0));
    CHECK(std::abs(q.value - want) < 1e-8);
}

namespace {

// Richardson-extrapolated central difference along x of a callable.
template <typename F> double diff_x(F f, double x, double y, double h) {
    const double d1 = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
    const double d2 = (f(x + h / 2, y) - f(x - h / 2, y)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace

TEST_CASE("phi_rho_partial matches finite differences") {
    const ModelParams p(-0.7, 0.0, 0.0);
    CHECK(phi_rho_partial(0, 0, 0.4, -1.1, p) ==
          doctest::Approx(phi_rho(0.4, -1.1, p)).epsilon(1e-14));
    CHECK(phi_rho_partial(1, 0, 0.0, 0.0, p) == doctest::Approx(0.0));
    CHECK_THROWS(phi_rho_partial(4, 3, 0.0, 0.0, p));

    const double x0 = 0.3, y0 = -0.5, h = 1e-3;
    for (int n1 = 0; n1 + 1 <= 4; ++n1)
        for (int n2 = 0; n1 + n2 + 1 <= 4; ++n2) {
            // check the (n1+1, n2) derivative as d/dx of the (n1, n2) one
            auto base = [&](double x, double y) {
                return phi_rho_partial(n1, n2, x, y, p);
            };
            const double fd = diff_x(base, x0, y0, h);
            const double an = phi_rho_partial(n1 + 1, n2, x0, y0, p);
            CHECK(an == doctest::Approx(fd).epsilon(1e-7));
        }
}

TEST_CASE("phi_rho_partial random-point finite-difference sweep") {
    const ModelParams p(0.4, 0.0, 0.0);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 10; ++i) {
        const double x0 = u(rng), y0 = u(rng);
        for (int n1 = 0; n1 + 1 <= 4; ++n1)
            for (int n2 = 0; n1 + n2 + 1 <= 4; ++n2) {
                auto base = [&](double x, double y) {
                    return phi_rho_partial(n1, n2, x, y, p);
                };
                const double fd = diff_x(base, x0, y0, 1e-3);
                const double an = phi_rho_partial(n1 + 1, n2, x0, y0, p);
                const double scale = std::max(std::abs(an), 1e-8);
                CHECK(std::abs(an - fd) / scale < 1e-6);
            }
    }
}

TEST_CASE("Black-Scholes coordinate transform") {
    const BSParams bs(0.05, 0.2, 0.25, -0.7, 1.0, 1.0, 2.0);
    auto [x0, y0] = bs_to_model(1.0, 1.0, bs);
    CHECK(x0 == doctest::Approx(0.0));
    CHECK(y0 == doctest::Approx(0.0));

    auto [x1, y1] = bs_to_model(std::exp(bs.sigma1 / std::sqrt(2.0)), 1.0, bs);
    CHECK(x1 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(y1 == doctest::Approx(0.0));

    auto [xr, yr] = bs_to_model(1.7, 0.3, bs);
    auto [s1, s2] = model_to_bs(xr, yr, bs);
    CHECK(s1 == doctest::Approx(1.7).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(0.3).epsilon(1e-14));

    CHECK_THROWS(bs_to_model(0.0, 1.0, bs));
    CHECK_THROWS(bs_to_model(1.0, -2.0, bs));
    CHECK_THROWS(BSParams(0.05, -0.2, 0.25, -0.7, 1.0, 1.0, 2.0));
    CHECK_THROWS(BSParams(0.05, 0.2, 0.25, -0.7, 1.0, 1.0, 0.0));
}
