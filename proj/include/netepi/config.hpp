#pragma once
// Flat key=value configuration for the simulate pipeline. '#' starts a
// comment; keys are dotted (section.name). All problems in a file are
// collected and reported in a single ConfigError message.

#include "netepi/experiment.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace netepi {

struct SimulateConfig {
    NetworkKind network_kind = NetworkKind::dc;
    std::string degree_file;          // dc
    std::string job_extra_file;       // dc, optional: extend degrees with job contacts
    int degree_cap = 134;             // cap applied when combining job contacts
    double p = 0.0;                   // dc closure probability
    int n = 0;                        // er
    double avg_degree = 0.0;          // er
    double r_mean = 0.0;
    double r_sd = 0.02;
    PolicyKind policy_kind = PolicyKind::none;
    int budget = 0;
    int replications = 100;
    int max_days = 365;
    bool regenerate_network = true;
    std::uint64_t master_seed = 0;
    int threads = 0;                  // 0 = hardware concurrency
};

// Raw parse: dotted keys to string values; rejects malformed/duplicate lines.
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

SimulateConfig parse_simulate_config(const std::string& path);

// The config snapshot as written into the run manifest.
std::map<std::string, std::string> config_snapshot(const SimulateConfig& cfg);

} // namespace netepi
