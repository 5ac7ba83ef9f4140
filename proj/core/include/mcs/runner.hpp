#pragma once

#include <string>
#include <vector>

#include "mcs/config.hpp"
#include "mcs/grid.hpp"
#include "mcs/timestepper.hpp"

namespace mcs {

/// One ladder entry of a convergence sweep.
struct ConvRow {
    int inv_h = 0;
    int n_steps = 0;
    double err_max = 0.0;      // max-norm error vs exact solution
    double err_origin = 0.0;   // signed error at the gridpoint (0,0)
    double order = 0.0;        // log2(err(2h)/err(h)), nan on the first row
    double pred_low_max = 0.0; // max |h^2 C^low| over the grid
    double pred_high_00 = 0.0; // h^(2N0-2) C^high at (0,0)
    double pred_cs_peak = 0.0; // e_cs at the gridpoint nearest (0,-a2)
    bool failed = false;
    std::string message;
};

struct BsDemoResult {
    double osc_plain = 0.0;     // cross-gamma oscillation metric, N0 = 0
    double osc_rannacher = 0.0; // same with N0 = config n0
    double value_max = 0.0;     // max of the option-value field (N0 = n0)
    double value_min = 0.0;
    double corner_value = 0.0;  // deep in-the-money corner value
    double discount = 0.0;      // e^{-rT}
};

/// Builds the ladder-entry grid for a run configuration (Dirichlet ring one
/// mesh width outside the domain).
Grid2D grid_for(const RunConfig& cfg, int inv_h);

/// Integrates the model problem on `grid` (which must match grid_for(cfg,
/// inv_h)) and returns the terminal field. The field holds a pointer to
/// `grid`, so the grid must outlive it.
GridField solve_model(const RunConfig& cfg, const Grid2D& grid, int inv_h,
                      RunReport* report = nullptr);

void run_solve(const RunConfig& cfg, const std::string& out);
std::vector<ConvRow> run_convergence(const RunConfig& cfg,
                                     const std::string& out);
void run_fourier_map(const RunConfig& cfg, const std::string& out,
                     int samples = 121);
void run_estimate(const RunConfig& cfg, const std::string& out);
BsDemoResult run_bs_demo(const RunConfig& cfg, const std::string& out);

} // namespace mcs
