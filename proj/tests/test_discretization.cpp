#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcs/grid.hpp"
#include "mcs/stencil.hpp"

using namespace mcs;

TEST_CASE("build_grid counts and divisibility") {
    const Grid2D g = build_grid(-10.0, 10.0, -10.0, 10.0, 0.25, 1.0);
    // 81x81 points including the boundary -> 79x79 interior
    CHECK(g.nx == 79);
    CHECK(g.ny == 79);
    CHECK(g.h1 == doctest::Approx(0.25));
    CHECK(g.h2 == doctest::Approx(0.25));
    CHECK(g.has_origin());
    CHECK_THROWS(build_grid(-10.0, 10.0, -10.0, 10.0, 0.3, 1.0));

    const Grid2D gc = build_grid(-10.0, 10.0, -10.0, 10.0, 0.25, 2.0);
    CHECK(gc.h2 == doctest::Approx(0.5));
    CHECK(gc.ny == 39);
}

TEST_CASE("locate finds gridpoints and rejects others") {
    const Grid2D g = build_grid(-10.0, 10.0, -10.0, 10.0, 0.25, 1.0);
    const int i = g.locate(0.0, 0.0);
    CHECK(g.x(i % g.nx) == doctest::Approx(0.0));
    CHECK(g.y(i / g.nx) == doctest::Approx(0.0));
    CHECK_THROWS(g.locate(0.1, 0.0));    // not a gridpoint
    CHECK_THROWS(g.locate(-10.0, 0.0));  // boundary, not interior
}

TEST_CASE("stencils annihilate constants and are exact on low polynomials") {
    const ModelParams p(-0.7, 2.0, 3.0);
    const Grid2D g = build_grid(-2.0, 2.0, -2.0, 2.0, 0.125, 1.0);
    const StencilOperators ops = StencilOperators::model_problem(g, p);

    GridField cst(g), lin(g), prod(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            cst(ix, iy) = 1.0;
            lin(ix, iy) = g.x(ix);
            prod(ix, iy) = g.x(ix) * g.y(iy);
        }

    // interior = points whose full stencil stays inside (boundary ring is
    // treated as zero by the homogeneous apply)
    auto interior_check = [&](const GridField& out, auto expect) {
        for (int iy = 1; iy + 1 < g.ny; ++iy)
            for (int ix = 1; ix + 1 < g.nx; ++ix)
                CHECK(out(ix, iy) ==
                      doctest::Approx(expect(ix, iy)).epsilon(1e-10).scale(1.0));
    };

    interior_check(ops.apply_A0(cst), [](int, int) { return 0.0; });
    interior_check(ops.apply_A1(cst), [](int, int) { return 0.0; });
    interior_check(ops.apply_A2(cst), [](int, int) { return 0.0; });

    interior_check(ops.apply_A1(lin), [&](int, int) { return p.a1; });
    interior_check(ops.apply_A0(lin), [](int, int) { return 0.0; });
    interior_check(ops.apply_A2(lin), [](int, int) { return 0.0; });

    interior_check(ops.apply_A0(prod), [&](int, int) { return 2.0 * p.rho; });
}

TEST_CASE("second-order consistency on sin(x)cos(y)") {
    const ModelParams p(-0.7, 2.0, 3.0);
    auto err = [&](double h) {
        const Grid2D g = build_grid(-2.0, 2.0, -2.0, 2.0, h, 1.0);
        const StencilOperators ops = StencilOperators::model_problem(g, p);
        GridField u(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix)
                u(ix, iy) = std::sin(g.x(ix)) * std::cos(g.y(iy));
        const GridField au = ops.apply_A(u);
        double e = 0.0;
        for (int iy = 1; iy + 1 < g.ny; ++iy)
            for (int ix = 1; ix + 1 < g.nx; ++ix) {
                const double x = g.x(ix), y = g.y(iy);
                const double s = std::sin(x), c = std::cos(x);
                const double sy = std::sin(y), cy = std::cos(y);
                const double exact = -s * cy + 2.0 * p.rho * c * (-sy) - s * cy +
                                     p.a1 * c * cy + p.a2 * s * (-sy);
                e = std::max(e, std::abs(au(ix, iy) - exact));
            }
        return e;
    };
    const double r = err(0.05) / err(0.025);
    CHECK(r > 3.6);
    CHECK(r < 4.4);
}

TEST_CASE("matrix symmetry structure") {
    const Grid2D g = build_grid(-1.0, 1.0, -1.0, 1.0, 0.25, 1.0);
    const ModelParams p(-0.7, 0.0, 0.0);
    const StencilOperators ops = StencilOperators::model_problem(g, p);
    // with a1 = a2 = 0 the directional stencils are symmetric: l = r
    for (int i = 0; i < g.size(); ++i) {
        CHECK(ops.l1()[i] == doctest::Approx(ops.r1()[i]));
        CHECK(ops.l2()[i] == doctest::Approx(ops.r2()[i]));
    }
}

TEST_CASE("dirac_initial mass and peak") {
    const Grid2D g = build_grid(-10.0, 10.0, -10.0, 10.0, 0.1, 1.0);
    const GridField u = dirac_initial(g);
    const int i0 = g.locate(0.0, 0.0);
    CHECK(u.values[i0] == doctest::Approx(100.0));
    double mass = 0.0;
    for (double v : u.values) mass += v;
    CHECK(mass * g.h1 * g.h2 == doctest::Approx(1.0).epsilon(1e-14));

    const Grid2D off = build_grid(-10.05, 9.95, -10.0, 10.0, 0.1, 1.0);
    CHECK_THROWS(dirac_initial(off));
}

TEST_CASE("payoff initial data") {
    const BSParams bs(0.05, 0.2, 0.25, -0.7, 1.0, 1.0, 2.0);
    const double h = bs.K1 / 10.0;
    const Grid2D g = build_grid(0.0, 30.0 * h, 0.0, 30.0 * h, h, 1.0);

    const GridField ind = cash_or_nothing_initial(g, bs);
    const int is = g.locate(bs.K1, bs.K2);
    CHECK(ind.values[is] == doctest::Approx(1.0)); // ">=" at the strike
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const bool in = g.x(ix) >= bs.K1 && g.y(iy) >= bs.K2;
            CHECK(ind(ix, iy) == doctest::Approx(in ? 1.0 : 0.0));
        }

    const GridField del = cross_gamma_dirac_initial(g, bs);
    double mass = 0.0;
    for (double v : del.values) mass += v;
    CHECK(mass * g.h1 * g.h2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(del.values[is] == doctest::Approx(1.0 / (g.h1 * g.h2)));
}
