#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcs/model.hpp"
#include "mcs/quadrature.hpp"

namespace mcs {

/// Thrown for malformed or inconsistent configuration; mapped to CLI
/// exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed run configuration. The JSON schema is strict: unknown keys are
/// rejected at every level.
struct RunConfig {
    ModelParams model{-0.7, 2.0, 3.0};
    double theta = 1.0 / 3.0;
    double lambda = 0.4;
    double c = 1.0;
    int n0 = 2;
    std::vector<int> inv_h;     // mesh ladder, values of 1/h
    double domain_min = -10.0;
    double domain_max = 10.0;
    QuadratureSpec quad;
    std::optional<BSParams> bs; // demo parameters (see BSParams defaults)
    // Timesteps for the demo. Chosen so the N0 = 0 cross gamma exhibits the
    // high-wavenumber ringing that Rannacher startup removes; with many more
    // steps the MCS scheme's own damping hides the phenomenon.
    int bs_n_steps = 12;
    bool theta_warning = false; // inadmissible theta (warning, not error)
};

/// Loads and validates a JSON config file. Every mesh entry must make
/// N = 1/(lambda h) a positive integer; violations are rejected with the
/// nearest valid lambda suggested.
RunConfig load_config(const std::string& path);

} // namespace mcs
