// Acceptance sweep for the MCS/Rannacher solver and its error analysis.
// Prints one PASS/FAIL line per criterion and exits nonzero if any fail.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mcs/erroranalysis.hpp"
#include "mcs/fourier.hpp"
#include "mcs/grid.hpp"
#include "mcs/model.hpp"
#include "mcs/periodic.hpp"
#include "mcs/runner.hpp"
#include "mcs/stencil.hpp"
#include "mcs/timestepper.hpp"

using namespace mcs;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

int n_failed = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++n_failed;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

const ModelParams mp{-0.7, 2.0, 3.0};

struct ModelRun {
    double err_max = 0.0;
    double err_origin = 0.0; // signed, at gridpoint (0,0)
    double err_cs_peak = 0.0; // signed, at gridpoint nearest (0,-a2)
    double mass = 0.0;       // h^2 sum U_N
};

// Every gridpoint inside [-10,10]^2 is an unknown; the homogeneous
// Dirichlet ring sits one mesh width outside the domain.
Grid2D model_grid(double h) {
    return build_grid(-10.0 - h, 10.0 + h, -10.0 - h, 10.0 + h, h, 1.0);
}

// Integrates the model problem on [-10,10]^2 and compares against the
// closed-form solution at t = T.
ModelRun run_model(double theta, double lambda, int inv_h, int n0) {
    const double h = 1.0 / inv_h;
    const Grid2D grid = model_grid(h);
    const StencilOperators ops = StencilOperators::model_problem(grid, mp);
    const SchemeParams sp = make_scheme(theta, lambda, h, n0, mp.rho);
    Stepper stepper(ops, sp);
    const GridField u = stepper.integrate(dirac_initial(grid));

    ModelRun r;
    const int peak = grid.locate(0.0, -mp.a2);
    const int origin = grid.locate(0.0, 0.0);
    for (int iy = 0; iy < grid.ny; ++iy)
        for (int ix = 0; ix < grid.nx; ++ix) {
            const int idx = grid.index(ix, iy);
            const double e =
                u.values[idx] - exact_solution(grid.x(ix), grid.y(iy), sp.T, mp);
            r.err_max = std::max(r.err_max, std::abs(e));
            if (idx == origin) r.err_origin = e;
            if (idx == peak) r.err_cs_peak = e;
            r.mass += u.values[idx];
        }
    r.mass *= h * h;
    return r;
}

// Criterion 1: one mcs_step on a periodic grid multiplies every lattice
// mode by the scalar symbol R; an Euler half-step pair by (1 - z/2)^-2.
void criterion1() {
    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> utheta(0.3, 1.0), ulam(0.2, 0.8),
        urho(-0.95, 0.95), ua(-3.0, 3.0);
    const int m = 32;
    const double h = 0.25, c = 1.0;
    double worst = 0.0, worst_e = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const double theta = utheta(rng), lambda = ulam(rng);
        const ModelParams p(urho(rng), ua(rng), ua(rng));
        const double dt = lambda * h;
        PeriodicStepper ps(m, h, c, p, theta, dt);
        SchemeParams sp;
        sp.theta = theta;
        sp.lambda = lambda;
        sp.dt = dt;
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const double t1 = 2.0 * pi * j / m, t2 = 2.0 * pi * k / m;
                PeriodicStepper::Field mode(m * m);
                for (int iy = 0; iy < m; ++iy)
                    for (int ix = 0; ix < m; ++ix)
                        mode[iy * m + ix] =
                            std::exp(cd(0.0, t1 * ix + t2 * iy));
                const FourierSymbols sy = symbols({t1, t2}, p, sp, c);
                const cd R = amplification_R(sy, theta);
                const PeriodicStepper::Field stepped = ps.mcs_step(mode);
                const cd ez = 1.0 / ((1.0 - 0.5 * sy.z) * (1.0 - 0.5 * sy.z));
                const PeriodicStepper::Field euler =
                    ps.euler_half_step(ps.euler_half_step(mode));
                double dmax = 0.0, emax = 0.0;
                for (int i = 0; i < m * m; ++i) {
                    dmax = std::max(dmax, std::abs(stepped[i] - R * mode[i]));
                    emax = std::max(emax, std::abs(euler[i] - ez * mode[i]));
                }
                worst = std::max(worst, dmax / std::max(1.0, std::abs(R)));
                worst_e = std::max(worst_e, emax / std::max(1.0, std::abs(ez)));
            }
    }
    report(1, worst <= 1e-12 && worst_e <= 1e-12,
           fmt("mcs rel err %.2e, euler rel err %.2e (<= 1e-12)", worst,
               worst_e));
}

} // namespace

int main() {
    criterion1();

    // Criteria 2 and 4 share the theta = 1/3, N0 = 2 convergence sweeps.
    std::map<std::pair<int, int>, ModelRun> cache; // (lambda*10, inv_h)
    {
        bool ok = true;
        std::string detail;
        for (double lambda : {0.2, 0.4, 0.8}) {
            double prev = 0.0;
            for (int inv_h : {8, 16, 32, 64}) {
                const ModelRun r = run_model(1.0 / 3.0, lambda, inv_h, 2);
                cache[{int(std::lround(lambda * 10)), inv_h}] = r;
                if (inv_h == 64) {
                    const double order = std::log2(prev / r.err_max);
                    ok = ok && order >= 1.8 && order <= 2.2;
                    detail += fmt("lambda=%.1f order=%.3f  ", lambda, order);
                }
                prev = r.err_max;
            }
        }
        report(2, ok, detail + "(each in [1.8, 2.2])");
    }

    // Criterion 4: sharpness of the low-wavenumber estimate at 1/h = 64.
    {
        const double h = 1.0 / 64;
        const SchemeParams sp = make_scheme(1.0 / 3.0, 0.4, h, 2, mp.rho);
        ErrorAnalysis ea(mp, sp, 1.0);
        const Grid2D grid = model_grid(h);
        double pred = 0.0;
        for (int iy = 0; iy < grid.ny; ++iy)
            for (int ix = 0; ix < grid.nx; ++ix)
                pred = std::max(
                    pred, h * h * std::abs(ea.c_low_series(grid.x(ix), grid.y(iy))));
        const double obs = cache[{4, 64}].err_max;
        const double ratio = obs / pred;
        report(4, ratio >= 0.75 && ratio <= 1.33,
               fmt("observed %.4e / predicted %.4e = %.3f (in [0.75, 1.33])",
                   obs, pred, ratio));
    }

    // Criterion 3: divergence without Rannacher at lambda = 0.8, plus the
    // high-wavenumber prediction at the origin.
    {
        const ModelRun r16 = run_model(1.0 / 3.0, 0.8, 16, 0);
        const ModelRun r64 = run_model(1.0 / 3.0, 0.8, 64, 0);
        const double h = 1.0 / 64;
        const SchemeParams sp = make_scheme(1.0 / 3.0, 0.8, h, 0, mp.rho);
        ErrorAnalysis ea(mp, sp, 1.0);
        const double pred00 = std::abs(ea.c_high(0, 0)) / (h * h);
        const double ratio = std::abs(r64.err_origin) / pred00;
        const bool ok =
            r64.err_max > r16.err_max && ratio >= 0.5 && ratio <= 2.0;
        report(3, ok,
               fmt("err(64)=%.3e > err(16)=%.3e; |err00|/pred = %.3f (in "
                   "[0.5, 2])",
                   r64.err_max, r16.err_max, ratio));
    }

    // Criterion 5: CS (theta = 1/2) without smoothing: h^-1 error growth
    // where the CS term dominates, and parity sign flip near (0, -a2).
    {
        const ModelRun r32 = run_model(0.5, 0.4, 32, 0);
        const ModelRun r64 = run_model(0.5, 0.4, 64, 0);
        const ModelRun r62 = run_model(0.5, 0.4, 62, 0);
        const double growth = r64.err_max / r32.err_max; // ideal 2
        const bool grows = growth >= 1.4 && growth <= 2.6;
        // N = 160 at 1/h = 64, N = 155 at 1/h = 62: opposite parity
        const bool flips = r64.err_cs_peak * r62.err_cs_peak < 0.0;
        report(5, grows && flips,
               fmt("err(64)/err(32) = %.3f (in [1.4, 2.6]); peak errors "
                   "%.3e / %.3e opposite signs",
                   growth, r64.err_cs_peak, r62.err_cs_peak));
    }

    // Criterion 6: theta-monotonicity of C^high_00 and the divergence check
    // that theta = 1 already diverges at lambda = 0.2. theta = 1 also
    // inflates the low-wavenumber constant ~9x, so the upturn shows over
    // the last halving (the crossover sits near 1/h = 43) and at the
    // origin, where the error tracks h^-2 C^high as in criterion 3.
    {
        auto chigh00 = [&](double theta) {
            const SchemeParams sp =
                make_scheme(theta, 0.4, 1.0 / 16, 0, mp.rho);
            return std::abs(ErrorAnalysis(mp, sp, 1.0).c_high(0, 0));
        };
        const double c13 = chigh00(1.0 / 3.0), c12 = chigh00(0.5),
                     c1 = chigh00(1.0);
        const ModelRun f32 = run_model(1.0, 0.2, 32, 0);
        const ModelRun f64 = run_model(1.0, 0.2, 64, 0);
        const double h = 1.0 / 64;
        const SchemeParams sp = make_scheme(1.0, 0.2, h, 0, mp.rho);
        ErrorAnalysis ea(mp, sp, 1.0);
        const double ratio =
            std::abs(f64.err_origin) / (std::abs(ea.c_high(0, 0)) / (h * h));
        const bool ok = c1 > c12 && c12 > c13 && f64.err_max > f32.err_max &&
                        ratio >= 0.5 && ratio <= 2.0;
        report(6, ok,
               fmt("C^high00: %.3e > %.3e > %.3e; theta=1 lambda=0.2 "
                   "err(64)=%.3e > err(32)=%.3e, |err00|/pred = %.3f",
                   c1, c12, c13, f64.err_max, f32.err_max, ratio));
    }

    // Criterion 7: stability-predicate sampling and the corner-modulus
    // boundary value
    // value.
    {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> uz(0.0, 100.0), uu(-1.0, 1.0);
        const double rho = -0.7;
        bool all_stable = true;
        for (double theta : {1.0 / 3.0, 0.5, 1.0})
            for (int i = 0; i < 100000; ++i) {
                double z1 = -uz(rng), z2 = -uz(rng);
                if (z1 == 0.0 && z2 == 0.0) z1 = -1.0;
                const double z0 =
                    uu(rng) * 2.0 * std::abs(rho) * std::sqrt(z1 * z2);
                if (!mcs_scalar_stable(z0, z1, z2, theta, rho))
                    all_stable = false;
            }
        const double boundary = region4_modulus(0.0, 0.5);
        const bool ok = all_stable && std::abs(boundary - 1.0) <= 1e-14;
        report(7, ok,
               fmt("3 x 1e5 draws stable: %s; region4(0, 1/2) = %.16f",
                   all_stable ? "yes" : "no", boundary));
    }

    // Criterion 8: Richardson limit of (log U_hat_N - s0)/h^2 and the
    // absence of an h^1 term.
    {
        const double pts[5][2] = {
            {1.0, 0.0}, {0.0, 1.0}, {1.2, -0.8}, {-0.6, 0.9}, {2.0, 1.5}};
        const SchemeParams base = make_scheme(1.0 / 3.0, 0.4, 1.0 / 16, 2,
                                              mp.rho);
        bool ok = true;
        std::string detail;
        for (auto& q : pts) {
            const double kappa = q[0], eta = q[1];
            const cd s0 = expansion_s0(kappa, eta, mp);
            const cd target = expansion_s2(kappa, eta, mp, base) +
                              expansion_N02(kappa, eta, mp, base);
            std::vector<double> hs;
            std::vector<cd> ds;
            for (int k = 6; k <= 10; ++k) {
                const double h = std::pow(2.0, -k);
                const SchemeParams sp =
                    make_scheme(1.0 / 3.0, 0.4, h, 2, mp.rho);
                const cd un =
                    numerical_fourier_UN({kappa * h, eta * h}, mp, sp, 1.0);
                const cd logu = std::log(un * std::exp(-s0)) + s0;
                hs.push_back(h);
                ds.push_back(logu - s0);
            }
            // first-order rate of the h^2 coefficient
            std::vector<double> gaps;
            for (size_t i = 0; i < hs.size(); ++i)
                gaps.push_back(std::abs(ds[i] / (hs[i] * hs[i]) - target));
            for (size_t i = 0; i + 1 < gaps.size(); ++i) {
                const double rate = gaps[i] / gaps[i + 1];
                ok = ok && rate > 1.5 && rate < 2.5;
            }
            // least squares fit d(h) = alpha h + beta h^2 + gamma h^3: the
            // h^1 coefficient must vanish relative to s0 (a two-term basis
            // would absorb the genuine h^3 tail into alpha)
            Eigen::Matrix3cd M = Eigen::Matrix3cd::Zero();
            Eigen::Vector3cd rhs = Eigen::Vector3cd::Zero();
            for (size_t i = 0; i < hs.size(); ++i) {
                const double h = hs[i];
                const cd basis[3] = {h, h * h, h * h * h};
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) M(a, b) += basis[a] * basis[b];
                    rhs(a) += basis[a] * ds[i];
                }
            }
            const Eigen::Vector3cd coef = M.fullPivLu().solve(rhs);
            const double rel = std::abs(coef(0)) / std::abs(s0);
            ok = ok && rel < 1e-6;
            detail += fmt("|s1|/|s0|=%.1e ", rel);
        }
        report(8, ok, detail + "(each < 1e-6, rates first order)");
    }

    // Criterion 9: dual-path C^low agreement at random gridpoints.
    {
        const double h = 1.0 / 16;
        const SchemeParams sp = make_scheme(1.0 / 3.0, 0.4, h, 2, mp.rho);
        ErrorAnalysis ea(mp, sp, 1.0);
        const Grid2D grid = model_grid(h);
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> ux(0, grid.nx - 1),
            uy(0, grid.ny - 1);
        bool ok = true;
        double worst = 0.0;
        int used = 0;
        while (used < 20) {
            const double x = grid.x(ux(rng)), y = grid.y(uy(rng));
            const double a = ea.c_low_series(x, y);
            const double b = ea.c_low_quadrature(x, y);
            const double scale = std::max(std::abs(a), std::abs(b));
            if (scale <= 1e-12) continue;
            ++used;
            const double rel = std::abs(a - b) / scale;
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-6;
        }
        report(9, ok, fmt("worst relative gap %.2e (<= 1e-6)", worst));
    }

    // Criterion 10: discrete mass conservation.
    {
        const ModelRun r = run_model(1.0 / 3.0, 0.4, 16, 2);
        const double defect = std::abs(r.mass - 1.0);
        report(10, defect <= 1e-6,
               fmt("|h^2 sum U - 1| = %.2e (<= 1e-6)", defect));
    }

    // Criterion 11: Rannacher smoothing of the cross-gamma oscillation in
    // the Black-Scholes demo.
    {
        // Default demo parameters (r = 0.05, sigma = 0.2/0.25, rho = -0.7,
        // K = 1, T = 2) and 12 timesteps, which leave the N0 = 0
        // high-wavenumber ringing visible.
        RunConfig cfg;
        cfg.inv_h = {16};
        const BsDemoResult bs = run_bs_demo(cfg, "acceptance_bsdemo.csv");
        const double ratio = bs.osc_rannacher / bs.osc_plain;
        report(11, ratio <= 0.10,
               fmt("oscillation N0=2 / N0=0 = %.4f (<= 0.10)", ratio));
    }

    if (n_failed == 0) std::printf("all criteria passed\n");
    return n_failed == 0 ? 0 : 1;
}
