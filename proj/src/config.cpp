#include "netepi/config.hpp"
#include "netepi/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace netepi {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::vector<std::string> problems;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(lineno) + ": expected key=value");
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            problems.push_back("line " + std::to_string(lineno) + ": empty key");
            continue;
        }
        if (kv.count(key)) {
            problems.push_back("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
            continue;
        }
        kv[key] = value;
    }
    if (!problems.empty()) {
        std::string msg = "config errors in " + path + ":";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ConfigError(msg);
    }
    return kv;
}

SimulateConfig parse_simulate_config(const std::string& path) {
    auto kv = parse_key_value_file(path);
    SimulateConfig cfg;
    std::vector<std::string> problems;
    auto take = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        if (it == kv.end()) return nullptr;
        return &it->second;
    };
    auto require = [&](const std::string& key) -> const std::string* {
        const std::string* v = take(key);
        if (!v) problems.push_back("missing required key '" + key + "'");
        return v;
    };
    auto parse_double = [&](const std::string& key, const std::string& v, double& out) {
        try {
            std::size_t pos = 0;
            out = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("");
        } catch (...) {
            problems.push_back("key '" + key + "': not a number: '" + v + "'");
        }
    };
    auto parse_int = [&](const std::string& key, const std::string& v, int& out) {
        try {
            std::size_t pos = 0;
            out = std::stoi(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("");
        } catch (...) {
            problems.push_back("key '" + key + "': not an integer: '" + v + "'");
        }
    };
    auto parse_u64 = [&](const std::string& key, const std::string& v, std::uint64_t& out) {
        try {
            std::size_t pos = 0;
            out = std::stoull(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("");
        } catch (...) {
            problems.push_back("key '" + key + "': not a nonnegative integer: '" + v + "'");
        }
    };
    auto parse_bool = [&](const std::string& key, const std::string& v, bool& out) {
        if (v == "true" || v == "1") out = true;
        else if (v == "false" || v == "0") out = false;
        else problems.push_back("key '" + key + "': expected true/false: '" + v + "'");
    };

    std::vector<std::string> known = {
        "network.kind", "network.degree_file", "network.job_extra_file", "network.degree_cap",
        "network.p", "network.n", "network.avg_degree",
        "disease.r_mean", "disease.r_sd",
        "intervention.kind", "intervention.budget",
        "experiment.replications", "experiment.max_days", "experiment.regenerate_network",
        "experiment.threads", "rng.master_seed"};
    for (const auto& [key, value] : kv) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            problems.push_back("unknown key '" + key + "'");
        }
    }

    bool kind_ok = false;
    if (const auto* v = require("network.kind")) {
        if (*v == "dc") { cfg.network_kind = NetworkKind::dc; kind_ok = true; }
        else if (*v == "er") { cfg.network_kind = NetworkKind::er; kind_ok = true; }
        else problems.push_back("key 'network.kind': expected dc|er, got '" + *v + "'");
    }
    if (kind_ok && cfg.network_kind == NetworkKind::dc) {
        if (const auto* v = require("network.degree_file")) cfg.degree_file = *v;
        if (const auto* v = require("network.p")) parse_double("network.p", *v, cfg.p);
        if (const auto* v = take("network.job_extra_file")) cfg.job_extra_file = *v;
        if (const auto* v = take("network.degree_cap")) parse_int("network.degree_cap", *v, cfg.degree_cap);
        if (take("network.n")) problems.push_back("key 'network.n' is only valid for network.kind=er");
        if (take("network.avg_degree")) problems.push_back("key 'network.avg_degree' is only valid for network.kind=er");
    } else if (kind_ok && cfg.network_kind == NetworkKind::er) {
        if (const auto* v = require("network.n")) parse_int("network.n", *v, cfg.n);
        if (const auto* v = require("network.avg_degree")) parse_double("network.avg_degree", *v, cfg.avg_degree);
        for (const char* k : {"network.degree_file", "network.job_extra_file", "network.p", "network.degree_cap"}) {
            if (take(k)) problems.push_back(std::string("key '") + k + "' is only valid for network.kind=dc");
        }
    }
    if (const auto* v = require("disease.r_mean")) parse_double("disease.r_mean", *v, cfg.r_mean);
    if (const auto* v = require("disease.r_sd")) parse_double("disease.r_sd", *v, cfg.r_sd);
    if (const auto* v = require("intervention.kind")) {
        try {
            cfg.policy_kind = policy_kind_from_string(*v);
        } catch (const ConfigError& e) {
            problems.push_back(std::string("key 'intervention.kind': ") + e.what());
        }
    }
    if (const auto* v = require("intervention.budget")) parse_int("intervention.budget", *v, cfg.budget);
    if (const auto* v = require("experiment.replications")) parse_int("experiment.replications", *v, cfg.replications);
    if (const auto* v = require("experiment.max_days")) parse_int("experiment.max_days", *v, cfg.max_days);
    if (const auto* v = require("experiment.regenerate_network")) parse_bool("experiment.regenerate_network", *v, cfg.regenerate_network);
    if (const auto* v = take("experiment.threads")) parse_int("experiment.threads", *v, cfg.threads);
    if (const auto* v = require("rng.master_seed")) parse_u64("rng.master_seed", *v, cfg.master_seed);

    if (problems.empty()) {
        if (cfg.network_kind == NetworkKind::dc && (cfg.p < 0.0 || cfg.p > 1.0))
            problems.push_back("key 'network.p': must be in [0,1]");
        if (cfg.r_mean < 0.0 || cfg.r_mean > 1.0)
            problems.push_back("key 'disease.r_mean': must be in [0,1]");
        if (cfg.r_sd < 0.0) problems.push_back("key 'disease.r_sd': must be >= 0");
        if (cfg.budget < 0) problems.push_back("key 'intervention.budget': must be >= 0");
        if (cfg.replications < 1) problems.push_back("key 'experiment.replications': must be >= 1");
        if (cfg.max_days < 1) problems.push_back("key 'experiment.max_days': must be >= 1");
        if (cfg.threads < 0) problems.push_back("key 'experiment.threads': must be >= 0");
    }
    if (!problems.empty()) {
        std::string msg = "invalid config " + path + ":";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ConfigError(msg);
    }
    return cfg;
}

std::map<std::string, std::string> config_snapshot(const SimulateConfig& cfg) {
    std::map<std::string, std::string> m;
    auto fmt = [](double v) {
        std::ostringstream ss;
        ss << v;
        return ss.str();
    };
    if (cfg.network_kind == NetworkKind::dc) {
        m["network.kind"] = "dc";
        m["network.degree_file"] = cfg.degree_file;
        if (!cfg.job_extra_file.empty()) {
            m["network.job_extra_file"] = cfg.job_extra_file;
            m["network.degree_cap"] = std::to_string(cfg.degree_cap);
        }
        m["network.p"] = fmt(cfg.p);
    } else {
        m["network.kind"] = "er";
        m["network.n"] = std::to_string(cfg.n);
        m["network.avg_degree"] = fmt(cfg.avg_degree);
    }
    m["disease.r_mean"] = fmt(cfg.r_mean);
    m["disease.r_sd"] = fmt(cfg.r_sd);
    m["intervention.kind"] = policy_kind_to_string(cfg.policy_kind);
    m["intervention.budget"] = std::to_string(cfg.budget);
    m["experiment.replications"] = std::to_string(cfg.replications);
    m["experiment.max_days"] = std::to_string(cfg.max_days);
    m["experiment.regenerate_network"] = cfg.regenerate_network ? "true" : "false";
    m["experiment.threads"] = std::to_string(cfg.threads);
    m["rng.master_seed"] = std::to_string(cfg.master_seed);
    return m;
}

} // namespace netepi
