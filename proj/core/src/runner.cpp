#include "mcs/runner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mcs/csv.hpp"
#include "mcs/erroranalysis.hpp"
#include "mcs/fourier.hpp"
#include "mcs/stencil.hpp"

namespace mcs {

namespace {

SchemeParams scheme_for(const RunConfig& cfg, int inv_h) {
    return make_scheme(cfg.theta, cfg.lambda, 1.0 / inv_h, cfg.n0,
                       cfg.model.rho);
}

} // namespace

Grid2D grid_for(const RunConfig& cfg, int inv_h) {
    // Every gridpoint inside [domain_min, domain_max]^2 is an unknown; the
    // homogeneous Dirichlet ring sits one mesh width outside the domain.
    const double h1 = 1.0 / inv_h, h2 = cfg.c * h1;
    return build_grid(cfg.domain_min - h1, cfg.domain_max + h1,
                      cfg.domain_min - h2, cfg.domain_max + h2, h1, cfg.c);
}

GridField solve_model(const RunConfig& cfg, const Grid2D& grid, int inv_h,
                      RunReport* report) {
    const StencilOperators ops = StencilOperators::model_problem(grid, cfg.model);
    const SchemeParams sp = scheme_for(cfg, inv_h);
    Stepper stepper(ops, sp);
    GridField u = stepper.integrate(dirac_initial(grid));
    if (report) *report = stepper.report();
    return u;
}

void run_solve(const RunConfig& cfg, const std::string& out) {
    if (cfg.inv_h.empty()) throw ConfigError("solve: mesh.inv_h is required");
    const Grid2D grid = grid_for(cfg, cfg.inv_h.front());
    GridField u = solve_model(cfg, grid, cfg.inv_h.front());
    write_field_csv(u, out);
    write_companion(out,
                    "columns: x, y, value\n"
                    "terminal numerical solution U_N of the model problem at "
                    "T=1 on the gridpoints of the domain (first mesh ladder "
                    "entry)\n");
}

std::vector<ConvRow> run_convergence(const RunConfig& cfg,
                                     const std::string& out) {
    if (cfg.inv_h.empty())
        throw ConfigError("convergence: mesh.inv_h is required");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ConvRow> rows;
    for (int ih : cfg.inv_h) {
        ConvRow row;
        row.inv_h = ih;
        const double h = 1.0 / ih;
        try {
            const SchemeParams sp = scheme_for(cfg, ih);
            row.n_steps = sp.n_steps;
            const Grid2D grid = grid_for(cfg, ih);
            GridField u = solve_model(cfg, grid, ih);
            double emax = 0.0;
            for (int iy = 0; iy < grid.ny; ++iy)
                for (int ix = 0; ix < grid.nx; ++ix)
                    emax = std::max(
                        emax, std::abs(u(ix, iy) - exact_solution(grid.x(ix),
                                                                  grid.y(iy), 1.0,
                                                                  cfg.model)));
            row.err_max = emax;
            const int i0 = grid.locate(0.0, 0.0);
            row.err_origin =
                u.values[i0] - exact_solution(0.0, 0.0, 1.0, cfg.model);

            ErrorAnalysis ea(cfg.model, sp, cfg.c, cfg.quad);
            double lmax = 0.0;
            for (int iy = 0; iy < grid.ny; ++iy)
                for (int ix = 0; ix < grid.nx; ++ix)
                    lmax = std::max(lmax, std::abs(ea.c_low_series(
                                        grid.x(ix), grid.y(iy))));
            row.pred_low_max = h * h * lmax;
            row.pred_high_00 =
                std::pow(h, 2 * sp.n_rannacher - 2) * ea.c_high(0, 0);
            if (cfg.theta == 0.5) {
                try {
                    const int ics = grid.locate(0.0, -cfg.model.a2);
                    const int k =
                        ics / grid.nx - (grid.locate(0.0, 0.0) / grid.nx);
                    row.pred_cs_peak = ea.total_error_estimate(0, k, h).e_cs;
                } catch (const std::exception&) {
                    // (0,-a2) off the grid: leave the peak column at zero
                }
            }
        } catch (const std::exception& e) {
            row.failed = true;
            row.message = e.what();
        }
        if (!rows.empty() && !row.failed && !rows.back().failed &&
            row.err_max > 0.0)
            row.order = std::log2(rows.back().err_max / row.err_max);
        else
            row.order = nan;
        rows.push_back(std::move(row));
    }

    CsvWriter csv(out, {"inv_h", "n", "err_max", "err_00", "order",
                        "pred_low_max", "pred_high_00", "pred_cs_peak"});
    for (const ConvRow& r : rows) {
        if (r.failed) {
            csv.raw_row(format_cell(r.inv_h) + ",FAILED,nan,nan,nan,nan,nan,nan");
            continue;
        }
        csv.row({static_cast<double>(r.inv_h), static_cast<double>(r.n_steps),
                 r.err_max, r.err_origin, r.order, r.pred_low_max,
                 r.pred_high_00, r.pred_cs_peak});
    }
    write_companion(
        out,
        "columns: inv_h, n, err_max, err_00, order, pred_low_max, "
        "pred_high_00, pred_cs_peak\n"
        "inv_h: 1/h; n: number of timesteps; err_max: max-norm error vs the "
        "exact solution on the gridpoints of the domain;\n"
        "err_00: signed error at the origin; order: log2(err(2h)/err(h));\n"
        "pred_low_max: max |h^2 C^low|; pred_high_00: h^(2N0-2) C^high at "
        "(0,0);\n"
        "pred_cs_peak: CS error term at the gridpoint nearest (0,-a2), zero "
        "unless theta = 1/2.\n"
        "a failed ladder entry is marked FAILED in the second column.\n");
    return rows;
}

void run_fourier_map(const RunConfig& cfg, const std::string& out, int samples) {
    if (cfg.inv_h.empty())
        throw ConfigError("fourier: mesh.inv_h is required");
    const SchemeParams sp = scheme_for(cfg, cfg.inv_h.front());
    const double pi = std::numbers::pi;
    CsvWriter csv(out, {"theta1", "theta2", "modulus"});
    for (int i = 0; i < samples; ++i)
        for (int j = 0; j < samples; ++j) {
            const double t1 = -pi + 2.0 * pi * i / (samples - 1);
            const double t2 = -pi + 2.0 * pi * j / (samples - 1);
            const double mod =
                std::abs(numerical_fourier_UN({t1, t2}, cfg.model, sp, cfg.c));
            csv.row({t1, t2, mod});
        }
    write_companion(out,
                    "columns: theta1, theta2, modulus\n"
                    "modulus of the transform of the numerical solution, "
                    "|U_hat_N(theta1, theta2)|, on a uniform grid over "
                    "[-pi,pi]^2 (first mesh ladder entry)\n");
}

void run_estimate(const RunConfig& cfg, const std::string& out) {
    if (cfg.inv_h.empty())
        throw ConfigError("estimate: mesh.inv_h is required");
    const int ih = cfg.inv_h.front();
    const double h = 1.0 / ih;
    const Grid2D grid = grid_for(cfg, ih);
    const SchemeParams sp = scheme_for(cfg, ih);
    ErrorAnalysis ea(cfg.model, sp, cfg.c, cfg.quad);

    const int i0 = grid.locate(0.0, 0.0);
    const int ix0 = i0 % grid.nx, iy0 = i0 / grid.nx;
    // C^high needs one 2D quadrature per index pair; decimate to at most
    // ~33 samples per axis, keeping the origin on the lattice.
    const int stride = std::max(1, grid.nx / 33);
    auto axis = [&](int n, int c0) {
        std::vector<int> ids;
        for (int i = c0 % stride; i < n; i += stride) ids.push_back(i);
        return ids;
    };
    const std::vector<int> xs = axis(grid.nx, ix0), ys = axis(grid.ny, iy0);

    CsvWriter csv(out, {"j", "k", "x", "y", "e_low", "e_high", "e_cs", "total"});
    for (int iy : ys)
        for (int ix : xs) {
            const int j = ix - ix0, k = iy - iy0;
            const ErrorEstimate e = ea.total_error_estimate(j, k, h);
            csv.row({static_cast<double>(j), static_cast<double>(k), grid.x(ix),
                     grid.y(iy), e.e_low, e.e_high, e.e_cs, e.total});
        }
    write_companion(
        out,
        "columns: j, k, x, y, e_low, e_high, e_cs, total\n"
        "predicted error decomposition at gridpoint (x_j, y_k) = (j h, k c h) "
        "for the first mesh ladder entry;\n"
        "e_low = h^2 C^low, e_high = h^(2N0-2) C^high, e_cs the CS term "
        "(zero unless theta = 1/2), total their sum.\n"
        "points are decimated to at most ~33 samples per axis (origin kept).\n");
}

namespace {

double diag_oscillation(const GridField& g, int ixs, int iys) {
    // sum of |second differences| along the grid diagonal through (ixs, iys)
    const Grid2D& grid = *g.grid;
    const int off = iys - ixs;
    double sum = 0.0;
    for (int ix = 1; ix + 1 < grid.nx; ++ix) {
        const int iy = ix + off;
        if (iy < 1 || iy + 1 >= grid.ny) continue;
        sum += std::abs(g(ix + 1, iy + 1) - 2.0 * g(ix, iy) + g(ix - 1, iy - 1));
    }
    return sum;
}

} // namespace

BsDemoResult run_bs_demo(const RunConfig& cfg, const std::string& out) {
    const BSParams bs = cfg.bs ? *cfg.bs : BSParams(0.05, 0.2, 0.25, -0.7,
                                                    1.0, 1.0, 2.0);
    // 201x201 gridpoints (199x199 interior) with the strike exactly on a
    // gridpoint: h_i = K_i/67, domain [0, 200 K_i/67] per direction.
    const double h1 = bs.K1 / 67.0, h2 = bs.K2 / 67.0;
    const Grid2D grid =
        build_grid(0.0, 200.0 * h1, 0.0, 200.0 * h2, h1, h2 / h1);

    SchemeParams sp;
    sp.theta = cfg.theta;
    sp.T = bs.T;
    sp.n_steps = cfg.bs_n_steps;
    sp.dt = bs.T / sp.n_steps;
    sp.lambda = sp.dt / h1;
    sp.theta_warning =
        !(cfg.theta >= 0.25 && cfg.theta > (1.0 + std::abs(bs.rho)) / 6.0);

    const StencilOperators vops = StencilOperators::black_scholes_value(grid, bs);
    const StencilOperators gops =
        StencilOperators::black_scholes_cross_gamma(grid, bs);

    BsDemoResult res;
    res.discount = std::exp(-bs.r * bs.T);
    const int is = grid.locate(bs.K1, bs.K2);
    const int ixs = is % grid.nx, iys = is / grid.nx;

    for (int pass = 0; pass < 2; ++pass) {
        const int n0 = pass == 0 ? 0 : cfg.n0;
        SchemeParams spv = sp;
        spv.n_rannacher = std::min(n0, sp.n_steps);

        Stepper vstep(vops, spv);
        GridField value = vstep.integrate(cash_or_nothing_initial(grid, bs));
        Stepper gstep(gops, spv);
        GridField gamma = gstep.integrate(cross_gamma_dirac_initial(grid, bs));

        const std::string tag = "_n0_" + std::to_string(n0);
        write_field_csv(value, out + ".value" + tag + ".csv");
        write_field_csv(gamma, out + ".gamma" + tag + ".csv");

        const double osc = diag_oscillation(gamma, ixs, iys);
        if (pass == 0) {
            res.osc_plain = osc;
        } else {
            res.osc_rannacher = osc;
            res.value_max =
                *std::max_element(value.values.begin(), value.values.end());
            res.value_min =
                *std::min_element(value.values.begin(), value.values.end());
            res.corner_value = value(grid.nx - 1, grid.ny - 1);
        }
    }
    write_companion(
        out,
        "bsdemo outputs: <out>.value_n0_<N0>.csv and <out>.gamma_n0_<N0>.csv "
        "for N0 = 0 and the configured N0,\n"
        "each with columns x, y, value on the interior of a 201x201 grid in "
        "price coordinates (strike on a gridpoint: h = K/67, domain "
        "[0, 200K/67]^2).\n"
        "value: cash-or-nothing option value; gamma: its cross gamma.\n");
    return res;
}

} // namespace mcs
