#pragma once

#include <vector>

namespace mcs {

/// Dense bivariate polynomial with real coefficients, coefficient of
/// x^i y^j stored at (i,j). Used for Gaussian-derivative recursions and
/// for assembling differential operators as polynomials in (d/dx, d/dy).
class Poly2 {
public:
    Poly2() : deg_(0), c_(1, 0.0) {}

    static Poly2 constant(double v);
    static Poly2 monomial(int i, int j, double v);

    int degree() const { return deg_; }
    double coeff(int i, int j) const;
    void set_coeff(int i, int j, double v);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(double s) const;
    Poly2& operator+=(const Poly2& o);

    /// Partial derivative with respect to the first / second variable.
    Poly2 dx() const;
    Poly2 dy() const;

    double eval(double x, double y) const;

    /// Drops trailing all-zero rows/columns of the coefficient table.
    void trim();

private:
    explicit Poly2(int deg) : deg_(deg), c_((deg + 1) * (deg + 1), 0.0) {}

    int deg_;               // max exponent per variable
    std::vector<double> c_; // c_[i*(deg_+1)+j] = coeff of x^i y^j

    double at(int i, int j) const { return c_[i * (deg_ + 1) + j]; }
    double& at(int i, int j) { return c_[i * (deg_ + 1) + j]; }
};

} // namespace mcs
