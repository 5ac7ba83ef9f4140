#include "mcs/quadrature.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace mcs {

namespace {

GaussRule compute_rule(int n) {
    // Newton iteration on Legendre polynomials, nodes from the Chebyshev guess.
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

template <typename T, typename F>
T composite(const F& f, double a, double b, int panels, const GaussRule& rule) {
    const double w = (b - a) / panels;
    T sum{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * w;
        T psum{};
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            psum += rule.weights[i] * f(mid + 0.5 * w * rule.nodes[i]);
        sum += psum * (0.5 * w);
    }
    return sum;
}

template <typename T, typename F>
T composite2d(const F& f, double ax, double bx, double ay, double by, int panels,
              const GaussRule& rule) {
    const double wx = (bx - ax) / panels;
    const double wy = (by - ay) / panels;
    T sum{};
    for (int px = 0; px < panels; ++px) {
        const double mx = ax + (px + 0.5) * wx;
        for (int py = 0; py < panels; ++py) {
            const double my = ay + (py + 0.5) * wy;
            T psum{};
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                const double x = mx + 0.5 * wx * rule.nodes[i];
                T row{};
                for (size_t j = 0; j < rule.nodes.size(); ++j)
                    row += rule.weights[j] * f(x, my + 0.5 * wy * rule.nodes[j]);
                psum += rule.weights[i] * row;
            }
            sum += psum * (0.25 * wx * wy);
        }
    }
    return sum;
}

template <typename Res, typename T, typename F, typename Eval>
Res refine(const F& f, const Eval& eval, const QuadratureSpec& spec) {
    Res out;
    const GaussRule& rule = gauss_legendre(spec.gl_order);
    int panels = spec.init_panels;
    T prev = eval(f, panels, rule);
    while (panels < spec.max_panels) {
        panels *= 2;
        const T cur = eval(f, panels, rule);
        const double delta = std::abs(cur - prev);
        const double scale = std::max(std::abs(cur), 1e-300);
        prev = cur;
        if (delta <= spec.rel_tol * scale || delta <= spec.abs_tol) {
            out.value = cur;
            out.last_delta = delta;
            out.panels = panels;
            out.converged = true;
            return out;
        }
    }
    out.value = prev;
    out.last_delta = std::abs(prev) * 1.0; // unconverged marker
    out.panels = panels;
    out.converged = false;
    return out;
}

} // namespace

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
    return refine<QuadResult, double>(
        f,
        [a, b](const auto& g, int panels, const GaussRule& rule) {
            return composite<double>(g, a, b, panels, rule);
        },
        spec);
}

QuadResultC integrate_c(const std::function<std::complex<double>(double)>& f,
                        double a, double b, const QuadratureSpec& spec) {
    return refine<QuadResultC, std::complex<double>>(
        f,
        [a, b](const auto& g, int panels, const GaussRule& rule) {
            return composite<std::complex<double>>(g, a, b, panels, rule);
        },
        spec);
}

QuadResult integrate2d(const std::function<double(double, double)>& f, double ax,
                       double bx, double ay, double by, const QuadratureSpec& spec) {
    return refine<QuadResult, double>(
        f,
        [=](const auto& g, int panels, const GaussRule& rule) {
            return composite2d<double>(g, ax, bx, ay, by, panels, rule);
        },
        spec);
}

QuadResultC integrate2d_c(
    const std::function<std::complex<double>(double, double)>& f, double ax,
    double bx, double ay, double by, const QuadratureSpec& spec) {
    return refine<QuadResultC, std::complex<double>>(
        f,
        [=](const auto& g, int panels, const GaussRule& rule) {
            return composite2d<std::complex<double>>(g, ax, bx, ay, by, panels, rule);
        },
        spec);
}

} // namespace mcs
