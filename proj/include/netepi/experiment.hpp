#pragma once
// Replication harness: runs independent epidemics, aggregates medians and
// 5/95 percentile bands, and writes the plot-ready CSV artifacts.

#include "netepi/epidemic.hpp"
#include "netepi/interventions.hpp"
#include "netepi/netgen.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace netepi {

enum class NetworkKind { dc, er };

struct ExperimentConfig {
    NetworkKind network_kind = NetworkKind::dc;
    DegreeSequence targets;      // dc: calibration degree sequence
    double p = 0.0;              // dc: closure probability
    int er_n = 0;                // er: node count
    double er_avg_degree = 0.0;  // er: target average degree
    DiseaseParams disease;
    PolicyKind policy_kind = PolicyKind::none;
    int budget = 0;
    int replications = 100;
    bool regenerate_network_per_replication = true;
    std::uint64_t master_seed = 0;
    int max_days = 365;
    int threads = 1;
};

struct ReplicationSummary {
    // Per-day 5th/50th/95th percentiles of the I-count across replications;
    // shorter trajectories are padded with their terminal I-count of 0.
    std::vector<double> day_median, day_p5, day_p95;
    double peak_median = 0.0, peak_p5 = 0.0, peak_p95 = 0.0;
    double peak_time_median = 0.0;
    int peak_time_min = 0, peak_time_max = 0;
    double size_median = 0.0, size_p5 = 0.0, size_p95 = 0.0;
    // Raw per-replication values, index-ordered.
    std::vector<int> peaks, peak_days, sizes;
};

ReplicationSummary run_replications(const ExperimentConfig& cfg);

// Evaluates each config independently; failures carry the config index.
std::vector<ReplicationSummary> sweep(const std::vector<ExperimentConfig>& grid);

// `peak_median,peak_p5,peak_p95,peak_time,size_median,size_p5,size_p95`
std::string summary_csv_header();
std::string summary_csv_row(const ReplicationSummary& s);
void write_summary_csv(const std::string& path, const std::vector<ReplicationSummary>& rows);

// `day,i_median,i_p5,i_p95`
void write_band_csv(const std::string& path, const ReplicationSummary& s);

} // namespace netepi
