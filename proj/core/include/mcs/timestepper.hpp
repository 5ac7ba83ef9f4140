#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mcs/grid.hpp"
#include "mcs/stencil.hpp"

namespace mcs {

/// Time-discretization controls. dt * N = T; lambda = dt / h ties the
/// timestep to the mesh for the model problem sweeps.
struct SchemeParams {
    double theta = 1.0 / 3.0;
    double lambda = 0.4;
    double dt = 0.0;
    double T = 1.0;
    int n_steps = 0;     // N
    int n_rannacher = 0; // N0, MCS steps replaced by Euler half-step pairs
    bool theta_warning = false;
};

/// Builds SchemeParams from (theta, lambda, h); N = T/(lambda h) must be a
/// positive integer. The warning flag records failure of the admissibility
/// restriction theta >= 1/4 and theta > (1+|rho|)/6.
SchemeParams make_scheme(double theta, double lambda, double h, int n0,
                         double rho, double T = 1.0);

/// Thomas algorithm, no pivoting. sub/super have length n-1. Throws on a
/// zero pivot, reporting the failing row.
std::vector<double> tridiagonal_solve(std::span<const double> sub,
                                      std::span<const double> diag,
                                      std::span<const double> super,
                                      std::span<const double> rhs);

/// Per-run solver diagnostics, emitted as "key: value" lines.
struct RunReport {
    long tridiag_solves = 0;
    long nine_point_solves = 0;
    long nine_point_iterations = 0; // 0 for direct factorizations
    double worst_residual = 0.0;    // relative, nine-point solves
    std::string solver_kind;

    std::string to_text() const;
};

/// Solver for (I - alpha A) with the full nine-point operator A; direct
/// sparse LU for small systems, ILU-preconditioned BiCGSTAB for large
/// ones. The relative-residual contract (default 1e-11) is verified on
/// every solve.
class NinePointSolver {
public:
    NinePointSolver(const StencilOperators& ops, double alpha, double tol = 1e-11);
    ~NinePointSolver();
    NinePointSolver(NinePointSolver&&) noexcept;

    GridField solve(const GridField& rhs, RunReport* report = nullptr) const;
    double tolerance() const { return tol_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    double tol_;
};

/// One-step MCS map and Rannacher implicit-Euler startup for the
/// semidiscrete system U' = A U + b.
class Stepper {
public:
    Stepper(const StencilOperators& ops, const SchemeParams& sp);

    GridField mcs_step(const GridField& u);
    /// 2*min(N0,N) implicit-Euler half-steps with the full operator.
    GridField rannacher_startup(const GridField& u);
    /// Rannacher startup followed by N - N0 MCS steps.
    GridField integrate(const GridField& u0);

    const RunReport& report() const { return report_; }
    const SchemeParams& scheme() const { return sp_; }

private:
    GridField euler_half_step(const GridField& u);
    void solve_direction1(const GridField& rhs, GridField& out);
    void solve_direction2(const GridField& rhs, GridField& out);

    const StencilOperators* ops_;
    SchemeParams sp_;
    RunReport report_;
    std::unique_ptr<NinePointSolver> euler_; // built lazily (N0 > 0 only)

    // scratch
    GridField fa_, y0_, y1_, y2_, tmp_;
    std::vector<double> line_;
};

} // namespace mcs
