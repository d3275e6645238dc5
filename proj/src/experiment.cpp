#include "netepi/experiment.hpp"
#include "netepi/degree_data.hpp"
#include "netepi/errors.hpp"
#include "netepi/io_util.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace netepi {

namespace {

Network build_network(const ExperimentConfig& cfg, std::uint64_t seed) {
    if (cfg.network_kind == NetworkKind::dc) {
        return generate_dc(cfg.targets, cfg.p, seed).first;
    }
    return generate_er(cfg.er_n, cfg.er_avg_degree, seed);
}

struct RunResult {
    std::vector<int> i_series;
    int peak = 0;
    int peak_day = 0;
    int size = 0;
};

RunResult one_replication(const ExperimentConfig& cfg, const Network* shared_net, int rep) {
    Network local;
    const Network* net = shared_net;
    if (net == nullptr) {
        local = build_network(cfg, mix_seed(cfg.master_seed, "net", static_cast<std::uint64_t>(rep)));
        net = &local;
    }
    InterventionPolicy policy = make_policy(cfg.policy_kind, cfg.budget, *net);
    Trajectory traj = run_to_completion(*net, cfg.disease, &policy,
                                        mix_seed(cfg.master_seed, "epi", static_cast<std::uint64_t>(rep)),
                                        cfg.max_days);
    RunResult res;
    res.i_series.reserve(traj.size());
    for (const auto& rec : traj) {
        res.i_series.push_back(rec.i);
        if (rec.i > res.peak) {  // strict: earliest day of the maximum
            res.peak = rec.i;
            res.peak_day = rec.day;
        }
    }
    res.size = traj.empty() ? cfg.disease.n_seeds : traj.back().cumulative_ever_infected;
    return res;
}

double median_int(std::vector<int> v) {
    return median_of(std::vector<double>(v.begin(), v.end()));
}
double quantile_int(const std::vector<int>& v, double p) {
    return quantile_type7(std::vector<double>(v.begin(), v.end()), p);
}

} // namespace

ReplicationSummary run_replications(const ExperimentConfig& cfg) {
    if (cfg.replications < 1) throw ConfigError("experiment.replications must be >= 1");
    Network shared;
    const Network* shared_ptr = nullptr;
    if (!cfg.regenerate_network_per_replication) {
        shared = build_network(cfg, mix_seed(cfg.master_seed, "net", 0));
        shared_ptr = &shared;
    }

    std::vector<RunResult> results(cfg.replications);
    const int nthreads = std::max(1, cfg.threads);
    std::atomic<int> cursor{0};
    std::vector<std::string> errors(nthreads);
    auto worker = [&](int tid) {
        for (;;) {
            int rep = cursor.fetch_add(1);
            if (rep >= cfg.replications) break;
            try {
                results[rep] = one_replication(cfg, shared_ptr, rep);
            } catch (const std::exception& e) {
                if (errors[tid].empty()) errors[tid] = e.what();
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (!e.empty()) throw DataError("replication failed: " + e);
    }

    ReplicationSummary s;
    std::size_t max_len = 0;
    for (const auto& r : results) max_len = std::max(max_len, r.i_series.size());
    std::vector<double> column(results.size());
    for (std::size_t d = 0; d < max_len; ++d) {
        for (std::size_t r = 0; r < results.size(); ++r) {
            column[r] = d < results[r].i_series.size() ? results[r].i_series[d] : 0.0;
        }
        s.day_median.push_back(quantile_type7(column, 0.50));
        s.day_p5.push_back(quantile_type7(column, 0.05));
        s.day_p95.push_back(quantile_type7(column, 0.95));
    }
    for (const auto& r : results) {
        s.peaks.push_back(r.peak);
        s.peak_days.push_back(r.peak_day);
        s.sizes.push_back(r.size);
    }
    s.peak_median = median_int(s.peaks);
    s.peak_p5 = quantile_int(s.peaks, 0.05);
    s.peak_p95 = quantile_int(s.peaks, 0.95);
    s.peak_time_median = median_int(s.peak_days);
    s.peak_time_min = *std::min_element(s.peak_days.begin(), s.peak_days.end());
    s.peak_time_max = *std::max_element(s.peak_days.begin(), s.peak_days.end());
    s.size_median = median_int(s.sizes);
    s.size_p5 = quantile_int(s.sizes, 0.05);
    s.size_p95 = quantile_int(s.sizes, 0.95);
    return s;
}

std::vector<ReplicationSummary> sweep(const std::vector<ExperimentConfig>& grid) {
    if (grid.empty()) throw ConfigError("sweep: empty config grid");
    std::vector<ReplicationSummary> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            out.push_back(run_replications(grid[i]));
        } catch (const std::exception& e) {
            throw DataError("sweep config " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

std::string summary_csv_header() {
    return "peak_median,peak_p5,peak_p95,peak_time,size_median,size_p5,size_p95";
}

std::string summary_csv_row(const ReplicationSummary& s) {
    std::ostringstream ss;
    ss.precision(6);
    ss << s.peak_median << "," << s.peak_p5 << "," << s.peak_p95 << ","
       << s.peak_time_median << "," << s.size_median << "," << s.size_p5 << ","
       << s.size_p95;
    return ss.str();
}

void write_summary_csv(const std::string& path, const std::vector<ReplicationSummary>& rows) {
    atomic_write(path, [&](std::ostream& os) {
        os << summary_csv_header() << "\n";
        for (const auto& s : rows) os << summary_csv_row(s) << "\n";
    });
}

void write_band_csv(const std::string& path, const ReplicationSummary& s) {
    atomic_write(path, [&](std::ostream& os) {
        os << "day,i_median,i_p5,i_p95\n";
        os.precision(6);
        for (std::size_t d = 0; d < s.day_median.size(); ++d) {
            os << (d + 1) << "," << s.day_median[d] << "," << s.day_p5[d] << ","
               << s.day_p95[d] << "\n";
        }
    });
}

} // namespace netepi
