#include "mcs/periodic.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <stdexcept>

namespace mcs {

using cd = std::complex<double>;

std::vector<cd> cyclic_tridiagonal_solve(double sub, double diag, double super,
                                         const std::vector<cd>& rhs) {
    const int n = static_cast<int>(rhs.size());
    if (n < 3) throw std::invalid_argument("cyclic_tridiagonal_solve: n < 3");
    // Sherman-Morrison: perturb corners into the diagonal, correct with the
    // rank-one update u v^T, u = (gamma, 0, ..., super), v = (1, ..., sub/gamma).
    const double gamma = -diag;
    const double d0 = diag - gamma;
    const double dn = diag - sub * super / gamma;

    auto thomas = [&](const std::vector<cd>& b) {
        std::vector<cd> x(n);
        double piv = d0;
        x[0] = b[0] / piv;
        std::vector<double> cc(n - 1);
        for (int i = 1; i < n; ++i) {
            cc[i - 1] = super / piv;
            const double di = (i == n - 1) ? dn : diag;
            piv = di - sub * cc[i - 1];
            if (piv == 0.0)
                throw std::runtime_error("cyclic_tridiagonal_solve: zero pivot");
            x[i] = (b[i] - sub * x[i - 1]) / piv;
        }
        for (int i = n - 1; i-- > 0;) x[i] -= cc[i] * x[i + 1];
        return x;
    };

    std::vector<cd> y = thomas(rhs);
    std::vector<cd> ub(n, cd(0.0));
    ub[0] = cd(gamma);
    ub[n - 1] = cd(super);
    std::vector<cd> q = thomas(ub);
    const cd vy = y[0] + (sub / gamma) * y[n - 1];
    const cd vq = q[0] + (sub / gamma) * q[n - 1];
    const cd fac = vy / (1.0 + vq);
    for (int i = 0; i < n; ++i) y[i] -= fac * q[i];
    return y;
}

struct PeriodicStepper::EulerLU {
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
};

PeriodicStepper::PeriodicStepper(int m, double h, double c,
                                 const ModelParams& p, double theta, double dt)
    : m_(m), h1_(h), h2_(c * h), theta_(theta), dt_(dt) {
    if (m < 4) throw std::invalid_argument("PeriodicStepper: m < 4");
    l1_ = 1.0 / (h1_ * h1_) - p.a1 / (2.0 * h1_);
    d1_ = -2.0 / (h1_ * h1_);
    r1_ = 1.0 / (h1_ * h1_) + p.a1 / (2.0 * h1_);
    l2_ = 1.0 / (h2_ * h2_) - p.a2 / (2.0 * h2_);
    d2_ = -2.0 / (h2_ * h2_);
    r2_ = 1.0 / (h2_ * h2_) + p.a2 / (2.0 * h2_);
    c0_ = p.rho / (2.0 * h1_ * h2_);
}

void PeriodicStepper::apply_A0(const Field& u, Field& out) const {
    out.resize(u.size());
    auto at = [&](int ix, int iy) {
        return u[((iy + m_) % m_) * m_ + ((ix + m_) % m_)];
    };
    for (int iy = 0; iy < m_; ++iy)
        for (int ix = 0; ix < m_; ++ix)
            out[iy * m_ + ix] = c0_ * (at(ix + 1, iy + 1) + at(ix - 1, iy - 1) -
                                       at(ix + 1, iy - 1) - at(ix - 1, iy + 1));
}

void PeriodicStepper::apply_A1(const Field& u, Field& out) const {
    out.resize(u.size());
    for (int iy = 0; iy < m_; ++iy)
        for (int ix = 0; ix < m_; ++ix)
            out[iy * m_ + ix] = l1_ * u[iy * m_ + (ix + m_ - 1) % m_] +
                                d1_ * u[iy * m_ + ix] +
                                r1_ * u[iy * m_ + (ix + 1) % m_];
}

void PeriodicStepper::apply_A2(const Field& u, Field& out) const {
    out.resize(u.size());
    for (int iy = 0; iy < m_; ++iy)
        for (int ix = 0; ix < m_; ++ix)
            out[iy * m_ + ix] = l2_ * u[((iy + m_ - 1) % m_) * m_ + ix] +
                                d2_ * u[iy * m_ + ix] +
                                r2_ * u[((iy + 1) % m_) * m_ + ix];
}

void PeriodicStepper::apply_A(const Field& u, Field& out) const {
    Field t;
    apply_A0(u, out);
    apply_A1(u, t);
    for (size_t i = 0; i < out.size(); ++i) out[i] += t[i];
    apply_A2(u, t);
    for (size_t i = 0; i < out.size(); ++i) out[i] += t[i];
}

void PeriodicStepper::solve1(const Field& rhs, Field& out) const {
    out.resize(rhs.size());
    const double a = theta_ * dt_;
    std::vector<cd> line(m_);
    for (int iy = 0; iy < m_; ++iy) {
        for (int ix = 0; ix < m_; ++ix) line[ix] = rhs[iy * m_ + ix];
        auto x = cyclic_tridiagonal_solve(-a * l1_, 1.0 - a * d1_, -a * r1_, line);
        for (int ix = 0; ix < m_; ++ix) out[iy * m_ + ix] = x[ix];
    }
}

void PeriodicStepper::solve2(const Field& rhs, Field& out) const {
    out.resize(rhs.size());
    const double a = theta_ * dt_;
    std::vector<cd> line(m_);
    for (int ix = 0; ix < m_; ++ix) {
        for (int iy = 0; iy < m_; ++iy) line[iy] = rhs[iy * m_ + ix];
        auto x = cyclic_tridiagonal_solve(-a * l2_, 1.0 - a * d2_, -a * r2_, line);
        for (int iy = 0; iy < m_; ++iy) out[iy * m_ + ix] = x[iy];
    }
}

PeriodicStepper::Field PeriodicStepper::mcs_step(const Field& u) const {
    const size_t n = u.size();
    Field y0(n), y1, y2, t(n), fa;
    apply_A(u, fa);
    for (size_t i = 0; i < n; ++i) y0[i] = u[i] + dt_ * fa[i];

    apply_A1(u, fa);
    for (size_t i = 0; i < n; ++i) t[i] = y0[i] - theta_ * dt_ * fa[i];
    solve1(t, y1);

    apply_A2(u, fa);
    for (size_t i = 0; i < n; ++i) t[i] = y1[i] - theta_ * dt_ * fa[i];
    solve2(t, y2);

    for (size_t i = 0; i < n; ++i) t[i] = y2[i] - u[i];
    apply_A0(t, fa);
    for (size_t i = 0; i < n; ++i) y0[i] += theta_ * dt_ * fa[i];
    apply_A(t, fa);
    for (size_t i = 0; i < n; ++i) y0[i] += (0.5 - theta_) * dt_ * fa[i];

    apply_A1(u, fa);
    for (size_t i = 0; i < n; ++i) t[i] = y0[i] - theta_ * dt_ * fa[i];
    solve1(t, y1);

    apply_A2(u, fa);
    for (size_t i = 0; i < n; ++i) t[i] = y1[i] - theta_ * dt_ * fa[i];
    solve2(t, y2);
    return y2;
}

PeriodicStepper::Field PeriodicStepper::euler_half_step(const Field& u) const {
    const int n = m_ * m_;
    if (!euler_) {
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(static_cast<size_t>(n) * 9);
        const double a = 0.5 * dt_;
        auto idx = [&](int ix, int iy) {
            return ((iy + m_) % m_) * m_ + ((ix + m_) % m_);
        };
        for (int iy = 0; iy < m_; ++iy)
            for (int ix = 0; ix < m_; ++ix) {
                const int i = iy * m_ + ix;
                auto add = [&](int jx, int jy, double v) {
                    trips.emplace_back(i, idx(jx, jy), -a * v);
                };
                trips.emplace_back(i, i, 1.0 - a * (d1_ + d2_));
                add(ix - 1, iy, l1_);
                add(ix + 1, iy, r1_);
                add(ix, iy - 1, l2_);
                add(ix, iy + 1, r2_);
                add(ix + 1, iy + 1, c0_);
                add(ix - 1, iy - 1, c0_);
                add(ix + 1, iy - 1, -c0_);
                add(ix - 1, iy + 1, -c0_);
            }
        Eigen::SparseMatrix<double> M(n, n);
        M.setFromTriplets(trips.begin(), trips.end());
        euler_ = std::make_shared<EulerLU>();
        euler_->lu.compute(M);
        if (euler_->lu.info() != Eigen::Success)
            throw std::runtime_error("PeriodicStepper: Euler LU failed");
    }
    Eigen::VectorXd re(n), im(n);
    for (int i = 0; i < n; ++i) {
        re[i] = u[i].real();
        im[i] = u[i].imag();
    }
    Eigen::VectorXd xr = euler_->lu.solve(re);
    Eigen::VectorXd xi = euler_->lu.solve(im);
    Field out(n);
    for (int i = 0; i < n; ++i) out[i] = cd(xr[i], xi[i]);
    return out;
}

} // namespace mcs
