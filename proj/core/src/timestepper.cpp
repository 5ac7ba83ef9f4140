#include "mcs/timestepper.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mcs {

SchemeParams make_scheme(double theta, double lambda, double h, int n0,
                         double rho, double T) {
    if (!(theta > 0.0)) throw std::invalid_argument("make_scheme: theta must be > 0");
    if (!(lambda > 0.0) || !(h > 0.0))
        throw std::invalid_argument("make_scheme: lambda and h must be > 0");
    if (n0 < 0) throw std::invalid_argument("make_scheme: N0 must be >= 0");
    const double nf = T / (lambda * h);
    const double nr = std::round(nf);
    if (nr < 1.0 || std::abs(nf - nr) > 1e-9 * nf)
        throw std::invalid_argument(
            "make_scheme: N = T/(lambda h) is not a positive integer");
    SchemeParams sp;
    sp.theta = theta;
    sp.lambda = lambda;
    sp.n_steps = static_cast<int>(nr);
    sp.n_rannacher = n0;
    sp.T = T;
    sp.dt = T / sp.n_steps;
    if (n0 > sp.n_steps)
        throw std::invalid_argument("make_scheme: N0 exceeds N");
    sp.theta_warning =
        !(theta >= 0.25 && theta > (1.0 + std::abs(rho)) / 6.0);
    return sp;
}

std::vector<double> tridiagonal_solve(std::span<const double> sub,
                                      std::span<const double> diag,
                                      std::span<const double> super,
                                      std::span<const double> rhs) {
    const size_t n = diag.size();
    if (sub.size() != n - 1 || super.size() != n - 1 || rhs.size() != n)
        throw std::invalid_argument("tridiagonal_solve: size mismatch");
    std::vector<double> c(n - 1), x(n);
    double piv = diag[0];
    if (piv == 0.0) throw std::runtime_error("tridiagonal_solve: zero pivot at row 0");
    x[0] = rhs[0] / piv;
    for (size_t i = 1; i < n; ++i) {
        c[i - 1] = super[i - 1] / piv;
        piv = diag[i] - sub[i - 1] * c[i - 1];
        if (piv == 0.0)
            throw std::runtime_error("tridiagonal_solve: zero pivot at row " +
                                     std::to_string(i));
        x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / piv;
    }
    for (size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "tridiag_solves: " << tridiag_solves << "\n"
       << "nine_point_solves: " << nine_point_solves << "\n"
       << "nine_point_iterations: " << nine_point_iterations << "\n"
       << "worst_residual: " << worst_residual << "\n"
       << "solver_kind: " << (solver_kind.empty() ? "none" : solver_kind) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// NinePointSolver

struct NinePointSolver::Impl {
    const StencilOperators* ops;
    Eigen::SparseMatrix<double> M;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    Eigen::BiCGSTAB<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> bicg;
    bool direct = true;
};

namespace {

Eigen::SparseMatrix<double> assemble(const StencilOperators& ops, double alpha) {
    const Grid2D& g = ops.grid();
    const int n = g.size();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(n) * 9);
    auto idx = [&](int ix, int iy) { return iy * g.nx + ix; };
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const int i = idx(ix, iy);
            auto add = [&](int jx, int jy, double v) {
                if (jx < 0 || jx >= g.nx || jy < 0 || jy >= g.ny || v == 0.0)
                    return;
                trips.emplace_back(i, idx(jx, jy), -alpha * v);
            };
            trips.emplace_back(
                i, i, 1.0 - alpha * (ops.d1()[i] + ops.d2()[i]));
            add(ix - 1, iy, ops.l1()[i]);
            add(ix + 1, iy, ops.r1()[i]);
            add(ix, iy - 1, ops.l2()[i]);
            add(ix, iy + 1, ops.r2()[i]);
            add(ix + 1, iy + 1, ops.c0()[i]);
            add(ix - 1, iy - 1, ops.c0()[i]);
            add(ix + 1, iy - 1, -ops.c0()[i]);
            add(ix - 1, iy + 1, -ops.c0()[i]);
        }
    Eigen::SparseMatrix<double> M(n, n);
    M.setFromTriplets(trips.begin(), trips.end());
    return M;
}

} // namespace

NinePointSolver::NinePointSolver(const StencilOperators& ops, double alpha,
                                 double tol)
    : impl_(std::make_unique<Impl>()), tol_(tol) {
    impl_->ops = &ops;
    impl_->M = assemble(ops, alpha);
    const int n = ops.grid().size();
    impl_->direct = n <= 50000;
    if (impl_->direct) {
        impl_->lu.compute(impl_->M);
        if (impl_->lu.info() != Eigen::Success)
            throw std::runtime_error("NinePointSolver: LU factorization failed");
    } else {
        impl_->bicg.setTolerance(tol * 1e-2);
        impl_->bicg.setMaxIterations(2000);
        impl_->bicg.preconditioner().setDroptol(1e-6);
        impl_->bicg.preconditioner().setFillfactor(12);
        impl_->bicg.compute(impl_->M);
        if (impl_->bicg.info() != Eigen::Success)
            throw std::runtime_error("NinePointSolver: preconditioner failed");
    }
}

NinePointSolver::~NinePointSolver() = default;
NinePointSolver::NinePointSolver(NinePointSolver&&) noexcept = default;

GridField NinePointSolver::solve(const GridField& rhs, RunReport* report) const {
    const int n = rhs.grid->size();
    Eigen::Map<const Eigen::VectorXd> b(rhs.values.data(), n);
    GridField out(*rhs.grid);
    Eigen::Map<Eigen::VectorXd> x(out.values.data(), n);
    long iters = 0;
    if (impl_->direct) {
        x = impl_->lu.solve(b);
    } else {
        x = impl_->bicg.solve(b);
        iters = impl_->bicg.iterations();
    }
    const double bnorm = b.template lpNorm<Eigen::Infinity>();
    const double rnorm =
        (impl_->M * x - b).template lpNorm<Eigen::Infinity>();
    const double rel = (bnorm > 0.0) ? rnorm / bnorm : rnorm;
    if (!(rel <= tol_))
        throw std::runtime_error(
            "NinePointSolver: residual contract violated, relative residual " +
            std::to_string(rel));
    if (report) {
        report->nine_point_solves += 1;
        report->nine_point_iterations += iters;
        report->worst_residual = std::max(report->worst_residual, rel);
        report->solver_kind = impl_->direct ? "sparse_lu" : "bicgstab_ilut";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stepper

Stepper::Stepper(const StencilOperators& ops, const SchemeParams& sp)
    : ops_(&ops), sp_(sp) {
    const Grid2D& g = ops.grid();
    fa_ = GridField(g);
    y0_ = GridField(g);
    y1_ = GridField(g);
    y2_ = GridField(g);
    tmp_ = GridField(g);
}

void Stepper::solve_direction1(const GridField& rhs, GridField& out) {
    const Grid2D& g = ops_->grid();
    const double a = sp_.theta * sp_.dt;
    const int n = g.nx;
    std::vector<double> sub(n - 1), diag(n), sup(n - 1);
    for (int iy = 0; iy < g.ny; ++iy) {
        const int row = iy * n;
        for (int ix = 0; ix < n; ++ix) diag[ix] = 1.0 - a * ops_->d1()[row + ix];
        for (int ix = 0; ix + 1 < n; ++ix) {
            sup[ix] = -a * ops_->r1()[row + ix];
            sub[ix] = -a * ops_->l1()[row + ix + 1];
        }
        auto x = tridiagonal_solve(sub, diag, sup,
                                   std::span<const double>(
                                       rhs.values.data() + row, n));
        std::copy(x.begin(), x.end(), out.values.begin() + row);
        report_.tridiag_solves += 1;
    }
}

void Stepper::solve_direction2(const GridField& rhs, GridField& out) {
    const Grid2D& g = ops_->grid();
    const double a = sp_.theta * sp_.dt;
    const int n = g.ny;
    std::vector<double> sub(n - 1), diag(n), sup(n - 1), r(n);
    for (int ix = 0; ix < g.nx; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            const int i = iy * g.nx + ix;
            diag[iy] = 1.0 - a * ops_->d2()[i];
            r[iy] = rhs.values[i];
        }
        for (int iy = 0; iy + 1 < n; ++iy) {
            sup[iy] = -a * ops_->r2()[iy * g.nx + ix];
            sub[iy] = -a * ops_->l2()[(iy + 1) * g.nx + ix];
        }
        auto x = tridiagonal_solve(sub, diag, sup, r);
        for (int iy = 0; iy < n; ++iy) out.values[iy * g.nx + ix] = x[iy];
        report_.tridiag_solves += 1;
    }
}

GridField Stepper::mcs_step(const GridField& u) {
    const Grid2D& g = ops_->grid();
    const int n = g.size();
    const double dt = sp_.dt;
    const double theta = sp_.theta;

    // Y0 = U + dt (A U + b)
    ops_->apply_A(u, fa_);
    for (int i = 0; i < n; ++i)
        y0_.values[i] =
            u.values[i] + dt * (fa_.values[i] + ops_->boundary_source().values[i]);

    // (I - theta Z1) Y1 = Y0 - theta Z1 U
    ops_->apply_A1(u, tmp_);
    for (int i = 0; i < n; ++i)
        tmp_.values[i] = y0_.values[i] - theta * dt * tmp_.values[i];
    solve_direction1(tmp_, y1_);

    // (I - theta Z2) Y2 = Y1 - theta Z2 U
    ops_->apply_A2(u, tmp_);
    for (int i = 0; i < n; ++i)
        tmp_.values[i] = y1_.values[i] - theta * dt * tmp_.values[i];
    solve_direction2(tmp_, y2_);

    // Yhat0 = Y0 + theta Z0 (Y2 - U); Ytilde0 adds (1/2 - theta) Z (Y2 - U)
    for (int i = 0; i < n; ++i) tmp_.values[i] = y2_.values[i] - u.values[i];
    ops_->apply_A0(tmp_, fa_);
    for (int i = 0; i < n; ++i) y0_.values[i] += theta * dt * fa_.values[i];
    ops_->apply_A(tmp_, fa_);
    for (int i = 0; i < n; ++i)
        y0_.values[i] += (0.5 - theta) * dt * fa_.values[i];

    // (I - theta Z1) Yt1 = Yt0 - theta Z1 U
    ops_->apply_A1(u, tmp_);
    for (int i = 0; i < n; ++i)
        tmp_.values[i] = y0_.values[i] - theta * dt * tmp_.values[i];
    solve_direction1(tmp_, y1_);

    // (I - theta Z2) Yt2 = Yt1 - theta Z2 U
    ops_->apply_A2(u, tmp_);
    for (int i = 0; i < n; ++i)
        tmp_.values[i] = y1_.values[i] - theta * dt * tmp_.values[i];
    GridField out(g);
    solve_direction2(tmp_, out);
    return out;
}

GridField Stepper::euler_half_step(const GridField& u) {
    if (!euler_)
        euler_ = std::make_unique<NinePointSolver>(*ops_, 0.5 * sp_.dt);
    const int n = ops_->grid().size();
    GridField rhs = u;
    if (ops_->has_boundary_data())
        for (int i = 0; i < n; ++i)
            rhs.values[i] += 0.5 * sp_.dt * ops_->boundary_source().values[i];
    return euler_->solve(rhs, &report_);
}

GridField Stepper::rannacher_startup(const GridField& u) {
    GridField v = u;
    const int steps = std::min(sp_.n_rannacher, sp_.n_steps);
    for (int s = 0; s < 2 * steps; ++s) v = euler_half_step(v);
    return v;
}

GridField Stepper::integrate(const GridField& u0) {
    GridField v = rannacher_startup(u0);
    const int n0 = std::min(sp_.n_rannacher, sp_.n_steps);
    for (int s = n0; s < sp_.n_steps; ++s) v = mcs_step(v);
    return v;
}

} // namespace mcs
