#include "mcs/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace mcs {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

double num(const json& j, const std::string& where, const std::string& key) {
    if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
    if (!j.at(key).is_number())
        throw ConfigError(where + "." + key + ": expected a number");
    return j.at(key).get<double>();
}

double num_or(const json& j, const std::string& where, const std::string& key,
              double dflt) {
    return j.contains(key) ? num(j, where, key) : dflt;
}

int integer(const json& j, const std::string& where, const std::string& key) {
    const double v = num(j, where, key);
    if (v != std::floor(v))
        throw ConfigError(where + "." + key + ": expected an integer");
    return static_cast<int>(v);
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    check_keys(j, "config",
               {"model", "scheme", "mesh", "domain", "quadrature", "bs"});

    RunConfig cfg;
    if (j.contains("model")) {
        const json& m = j.at("model");
        check_keys(m, "model", {"rho", "a1", "a2"});
        try {
            cfg.model = ModelParams(num_or(m, "model", "rho", cfg.model.rho),
                                    num_or(m, "model", "a1", cfg.model.a1),
                                    num_or(m, "model", "a2", cfg.model.a2));
        } catch (const std::exception& e) {
            throw ConfigError(std::string("model: ") + e.what());
        }
    }

    if (j.contains("scheme")) {
        const json& s = j.at("scheme");
        check_keys(s, "scheme", {"theta", "lambda", "c", "n0"});
        cfg.theta = num_or(s, "scheme", "theta", cfg.theta);
        cfg.lambda = num_or(s, "scheme", "lambda", cfg.lambda);
        cfg.c = num_or(s, "scheme", "c", 1.0);
        cfg.n0 = s.contains("n0") ? integer(s, "scheme", "n0") : 2;
        if (!(cfg.theta > 0.0)) throw ConfigError("scheme.theta must be > 0");
        if (!(cfg.lambda > 0.0)) throw ConfigError("scheme.lambda must be > 0");
        if (!(cfg.c > 0.0)) throw ConfigError("scheme.c must be > 0");
        if (cfg.n0 < 0) throw ConfigError("scheme.n0 must be >= 0");
    }
    cfg.theta_warning = !(cfg.theta >= 0.25 &&
                          cfg.theta > (1.0 + std::abs(cfg.model.rho)) / 6.0);

    {
        if (!j.contains("mesh")) throw ConfigError("config: missing 'mesh'");
        const json& m = j.at("mesh");
        check_keys(m, "mesh", {"inv_h"});
        if (!m.contains("inv_h") || !m.at("inv_h").is_array())
            throw ConfigError("mesh.inv_h: expected an array");
        for (const auto& e : m.at("inv_h")) {
            if (!e.is_number() || e.get<double>() != std::floor(e.get<double>()) ||
                e.get<double>() < 1)
                throw ConfigError("mesh.inv_h: entries must be positive integers");
            cfg.inv_h.push_back(e.get<int>());
        }
        if (cfg.inv_h.empty()) throw ConfigError("mesh.inv_h must not be empty");
        for (int ih : cfg.inv_h) {
            const double nf = ih / cfg.lambda; // N = T/(lambda h), T = 1
            if (std::abs(nf - std::round(nf)) > 1e-9 * nf) {
                const double nearest = ih / std::max(1.0, std::round(nf));
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "mesh: 1/h=%d with lambda=%.17g gives non-integral "
                              "N=%.6g; nearest valid lambda is %.17g",
                              ih, cfg.lambda, nf, nearest);
                throw ConfigError(buf);
            }
        }
    }

    if (j.contains("domain")) {
        const json& d = j.at("domain");
        check_keys(d, "domain", {"min", "max"});
        cfg.domain_min = num(d, "domain", "min");
        cfg.domain_max = num(d, "domain", "max");
        if (!(cfg.domain_min < cfg.domain_max))
            throw ConfigError("domain: min must be < max");
    }

    if (j.contains("quadrature")) {
        const json& q = j.at("quadrature");
        check_keys(q, "quadrature", {"rel_tol", "radius"});
        cfg.quad.rel_tol = num_or(q, "quadrature", "rel_tol", cfg.quad.rel_tol);
        cfg.quad.radius = num_or(q, "quadrature", "radius", cfg.quad.radius);
        if (!(cfg.quad.rel_tol > 0.0))
            throw ConfigError("quadrature.rel_tol must be > 0");
        if (!(cfg.quad.radius > 0.0))
            throw ConfigError("quadrature.radius must be > 0");
    }

    if (j.contains("bs")) {
        const json& b = j.at("bs");
        check_keys(b, "bs",
                   {"r", "sigma1", "sigma2", "rho", "k1", "k2", "t", "n_steps"});
        try {
            cfg.bs = BSParams(num_or(b, "bs", "r", 0.05),
                              num_or(b, "bs", "sigma1", 0.2),
                              num_or(b, "bs", "sigma2", 0.25),
                              num_or(b, "bs", "rho", -0.7),
                              num_or(b, "bs", "k1", 1.0),
                              num_or(b, "bs", "k2", 1.0),
                              num_or(b, "bs", "t", 2.0));
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bs: ") + e.what());
        }
        cfg.bs_n_steps =
            b.contains("n_steps") ? integer(b, "bs", "n_steps") : 12;
        if (cfg.bs_n_steps < 1) throw ConfigError("bs.n_steps must be >= 1");
    }

    return cfg;
}

} // namespace mcs
