// config.hpp — run configuration: a small structured-text format (sections,
// key = value, '#' comments) with explicit schema versioning, strict unknown-
// key rejection and line-numbered errors.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscbath/model.hpp"

namespace oscbath {

struct ComputeConfig {
    std::uint64_t seed = 20250809;
    long long samples = 200000;
    int grid = 64;
    int max_n = 4;
    double budget_seconds = 0.0;  // 0 = unlimited
};

struct OracleConfig {
    bool enabled = false;
    int d_el = 32;
    int d_b = 96;
};

struct ScanConfig {
    double beta_min = 0.5, beta_max = 2.0;
    int beta_steps = 10;
    double lambda_min = 0.0, lambda_max = 1.0;
    int lambda_steps = 10;
};

struct EtaConfig {
    EtaProfiles profiles;
    double c_inner = 1.0;
};

struct RunConfig {
    ModelParams model;        // after optional mode discretization
    int discretize_modes = 0;  // 0 keeps the continuum profile
    std::optional<EtaConfig> eta;
    ComputeConfig compute;
    OracleConfig oracle;
    ScanConfig scan;
    std::string output_dir = "out";

    /// Deterministic flat key/value echo embedded in every output file.
    std::vector<std::pair<std::string, std::string>> flatten() const;
};

/// Parses and validates a config file. overrides are dotted KEY=VALUE pairs
/// applied on top of the file before validation.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Same from in-memory text (tests); name is used in error messages.
RunConfig parse_config(const std::string& text, const std::string& name,
                       const std::vector<std::string>& overrides = {});

}  // namespace oscbath
