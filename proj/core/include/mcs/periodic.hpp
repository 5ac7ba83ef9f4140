#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

/// Constant-coefficient MCS / implicit-Euler stepper on an M x M periodic
/// grid with complex-valued fields. Discrete Fourier modes are exact
/// eigenvectors of the periodic stencils, which makes this the reference
/// harness for the scalar amplification symbols.
class PeriodicStepper {
public:
    PeriodicStepper(int m, double h, double c, const ModelParams& p,
                    double theta, double dt);

    using Field = std::vector<std::complex<double>>;

    Field mcs_step(const Field& u) const;
    Field euler_half_step(const Field& u) const;

    int m() const { return m_; }

private:
    void apply_A0(const Field& u, Field& out) const;
    void apply_A1(const Field& u, Field& out) const;
    void apply_A2(const Field& u, Field& out) const;
    void apply_A(const Field& u, Field& out) const;
    // Solves (I - theta dt A1) along x lines / A2 along y lines.
    void solve1(const Field& rhs, Field& out) const;
    void solve2(const Field& rhs, Field& out) const;

    int m_;
    double h1_, h2_;
    double theta_, dt_;
    // per-direction stencil weights (constant coefficients)
    double l1_, d1_, r1_, l2_, d2_, r2_, c0_;

    struct EulerLU; // factorization of the real periodic (I - dt/2 A)
    mutable std::shared_ptr<EulerLU> euler_;
};

/// Cyclic tridiagonal system with constant coefficients (sub, diag, super
/// on every row, wraparound corners), Sherman-Morrison over Thomas.
std::vector<std::complex<double>>
cyclic_tridiagonal_solve(double sub, double diag, double super,
                         const std::vector<std::complex<double>>& rhs);

} // namespace mcs
