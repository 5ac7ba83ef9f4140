#include "mcs/poly2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcs {

Poly2 Poly2::constant(double v) {
    Poly2 p(0);
    p.at(0, 0) = v;
    return p;
}

Poly2 Poly2::monomial(int i, int j, double v) {
    if (i < 0 || j < 0) throw std::invalid_argument("Poly2: negative exponent");
    Poly2 p(std::max(i, j));
    p.at(i, j) = v;
    return p;
}

double Poly2::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > deg_ || j > deg_) return 0.0;
    return at(i, j);
}

void Poly2::set_coeff(int i, int j, double v) {
    if (i > deg_ || j > deg_) {
        Poly2 grown(std::max({i, j, deg_}));
        for (int a = 0; a <= deg_; ++a)
            for (int b = 0; b <= deg_; ++b) grown.at(a, b) = at(a, b);
        *this = grown;
    }
    at(i, j) = v;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r(std::max(deg_, o.deg_));
    for (int i = 0; i <= r.deg_; ++i)
        for (int j = 0; j <= r.deg_; ++j) r.at(i, j) = coeff(i, j) + o.coeff(i, j);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r(std::max(deg_, o.deg_));
    for (int i = 0; i <= r.deg_; ++i)
        for (int j = 0; j <= r.deg_; ++j) r.at(i, j) = coeff(i, j) - o.coeff(i, j);
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r(deg_ + o.deg_);
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; j <= deg_; ++j) {
            const double cij = at(i, j);
            if (cij == 0.0) continue;
            for (int a = 0; a <= o.deg_; ++a)
                for (int b = 0; b <= o.deg_; ++b)
                    r.at(i + a, j + b) += cij * o.at(a, b);
        }
    return r;
}

Poly2 Poly2::operator*(double s) const {
    Poly2 r = *this;
    for (double& v : r.c_) v *= s;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    *this = *this + o;
    return *this;
}

Poly2 Poly2::dx() const {
    Poly2 r(deg_);
    for (int i = 1; i <= deg_; ++i)
        for (int j = 0; j <= deg_; ++j)
            r.at(i - 1, j) = i * at(i, j);
    r.trim();
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r(deg_);
    for (int i = 0; i <= deg_; ++i)
        for (int j = 1; j <= deg_; ++j)
            r.at(i, j - 1) = j * at(i, j);
    r.trim();
    return r;
}

double Poly2::eval(double x, double y) const {
    // Horner in x over inner Horner in y
    double res = 0.0;
    for (int i = deg_; i >= 0; --i) {
        double row = 0.0;
        for (int j = deg_; j >= 0; --j) row = row * y + at(i, j);
        res = res * x + row;
    }
    return res;
}

void Poly2::trim() {
    int d = 0;
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; j <= deg_; ++j)
            if (at(i, j) != 0.0) d = std::max({d, i, j});
    if (d == deg_) return;
    Poly2 r(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) r.at(i, j) = at(i, j);
    *this = r;
}

} // namespace mcs
