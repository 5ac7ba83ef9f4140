#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "mcs/config.hpp"

using namespace mcs;

namespace {

struct TempConfig {
    std::string path;
    explicit TempConfig(const std::string& body) {
        static int counter = 0;
        path = "test_config_tmp_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << body;
    }
    ~TempConfig() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("shipped defaults config parses") {
    const RunConfig cfg = load_config(std::string(MCS_SOURCE_DIR) +
                                      "/configs/defaults.json");
    CHECK(cfg.model.rho == doctest::Approx(-0.7));
    CHECK(cfg.model.a1 == doctest::Approx(2.0));
    CHECK(cfg.model.a2 == doctest::Approx(3.0));
    CHECK(cfg.theta == 1.0 / 3.0); // decimal literal round-trips exactly
    CHECK(cfg.lambda == doctest::Approx(0.4));
    CHECK(cfg.c == doctest::Approx(1.0));
    CHECK(cfg.n0 == 2);
    CHECK(cfg.inv_h == std::vector<int>{8, 16, 32, 64});
    CHECK(cfg.domain_min == doctest::Approx(-10.0));
    CHECK(cfg.domain_max == doctest::Approx(10.0));
    CHECK_FALSE(cfg.theta_warning);
    CHECK_FALSE(cfg.bs.has_value());
}

TEST_CASE("minimal config gets defaults") {
    TempConfig t(R"({"mesh": {"inv_h": [16]}})");
    const RunConfig cfg = load_config(t.path);
    CHECK(cfg.model.rho == doctest::Approx(-0.7));
    CHECK(cfg.theta == doctest::Approx(1.0 / 3.0));
    CHECK(cfg.n0 == 2);
    CHECK(cfg.inv_h == std::vector<int>{16});
}

TEST_CASE("unknown keys rejected at every level") {
    TempConfig top(R"({"mesh": {"inv_h": [16]}, "bogus": 1})");
    CHECK_THROWS_AS(load_config(top.path), ConfigError);
    TempConfig model(
        R"({"model": {"rho": 0.0, "a3": 1}, "mesh": {"inv_h": [16]}})");
    CHECK_THROWS_AS(load_config(model.path), ConfigError);
    TempConfig scheme(
        R"({"scheme": {"thetaa": 0.5}, "mesh": {"inv_h": [16]}})");
    CHECK_THROWS_AS(load_config(scheme.path), ConfigError);
    TempConfig mesh(R"({"mesh": {"inv_h": [16], "h": 0.1}})");
    CHECK_THROWS_AS(load_config(mesh.path), ConfigError);
    TempConfig bs(R"({"mesh": {"inv_h": [16]}, "bs": {"kappa": 1}})");
    CHECK_THROWS_AS(load_config(bs.path), ConfigError);
}

TEST_CASE("lambda/mesh consistency") {
    // N = 1/(0.3 * 0.1) = 33.33... -> rejected, suggestion included
    TempConfig t(
        R"({"scheme": {"lambda": 0.3}, "mesh": {"inv_h": [10]}})");
    try {
        load_config(t.path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("lambda") != std::string::npos);
        CHECK(msg.find("nearest valid lambda") != std::string::npos);
    }
    // same lambda with a compatible mesh is fine: N = 1/(0.25*0.1) = 40
    TempConfig ok(
        R"({"scheme": {"lambda": 0.25}, "mesh": {"inv_h": [10]}})");
    CHECK_NOTHROW(load_config(ok.path));
}

TEST_CASE("empty or missing mesh rejected") {
    TempConfig empty(R"({"mesh": {"inv_h": []}})");
    CHECK_THROWS_AS(load_config(empty.path), ConfigError);
    TempConfig none(R"({})");
    CHECK_THROWS_AS(load_config(none.path), ConfigError);
}

TEST_CASE("malformed JSON and missing file map to ConfigError") {
    TempConfig bad(R"({"mesh": {"inv_h": [16])");
    CHECK_THROWS_AS(load_config(bad.path), ConfigError);
    CHECK_THROWS_AS(load_config("no_such_file.json"), ConfigError);
}

TEST_CASE("bs section defaults and overrides") {
    TempConfig t(R"({"mesh": {"inv_h": [16]}, "bs": {}})");
    const RunConfig cfg = load_config(t.path);
    REQUIRE(cfg.bs.has_value());
    CHECK(cfg.bs->rho == doctest::Approx(-0.7));
    CHECK(cfg.bs->T == doctest::Approx(2.0));
    CHECK(cfg.bs_n_steps == 12);

    TempConfig u(
        R"({"mesh": {"inv_h": [16]}, "bs": {"rho": 0.5, "n_steps": 25}})");
    const RunConfig cfg2 = load_config(u.path);
    CHECK(cfg2.bs->rho == doctest::Approx(0.5));
    CHECK(cfg2.bs_n_steps == 25);
}

TEST_CASE("inadmissible theta is a warning, not an error") {
    TempConfig t(
        R"({"scheme": {"theta": 0.2}, "mesh": {"inv_h": [16]}})");
    const RunConfig cfg = load_config(t.path);
    CHECK(cfg.theta_warning);
    CHECK(cfg.theta == doctest::Approx(0.2));
}
