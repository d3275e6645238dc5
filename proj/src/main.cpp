// netepi CLI: power-law fitting, network generation, and epidemic simulation.

#include "netepi/config.hpp"
#include "netepi/degree_data.hpp"
#include "netepi/epidemic.hpp"
#include "netepi/errors.hpp"
#include "netepi/experiment.hpp"
#include "netepi/interventions.hpp"
#include "netepi/io_util.hpp"
#include "netepi/netgen.hpp"
#include "netepi/netmetrics.hpp"
#include "netepi/network.hpp"
#include "netepi/powerlaw.hpp"
#include "netepi/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <thread>

namespace {

using nlohmann::json;

int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

int cmd_fit(const std::string& degree_file, int xmin, int gof_replicates,
            std::uint64_t seed, const std::string& out_path) {
    auto seq = netepi::load_degree_file(degree_file);
    auto fit = netepi::fit_power_law_tail(seq, xmin);
    json report = {
        {"degree_file", degree_file},
        {"xmin", fit.xmin},
        {"alpha", fit.alpha},
        {"n_tail", fit.n_tail},
        {"ks_statistic", fit.ks_statistic},
    };
    if (gof_replicates > 0) {
        report["gof_replicates"] = gof_replicates;
        report["gof_p_value"] =
            netepi::power_law_gof(seq, fit, gof_replicates, seed, effective_threads(0));
    }
    std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
        netepi::atomic_write(out_path, [&](std::ostream& os) { os << text << "\n"; });
    }
    return 0;
}

int cmd_netgen(const std::string& degree_file, bool use_er, int er_n, double er_avg_degree,
               double p, std::uint64_t seed, const std::string& out_prefix) {
    netepi::Network net;
    json report;
    if (use_er) {
        net = netepi::generate_er(er_n, er_avg_degree, seed);
        report["kind"] = "er";
        report["n"] = er_n;
        report["avg_degree_target"] = er_avg_degree;
    } else {
        auto targets = netepi::load_degree_file(degree_file);
        auto [dcnet, gen] = netepi::generate_dc(targets, p, seed);
        net = std::move(dcnet);
        report["kind"] = "dc";
        report["p"] = p;
        report["deficit_total"] = gen.deficit_total;
        report["closure_edges"] = gen.closure_edges;
    }
    report["seed"] = seed;
    report["edges"] = net.edge_count();

    const std::string edge_path = out_prefix + ".edges";
    const std::string metrics_path = out_prefix + "_metrics.csv";
    const std::string report_path = out_prefix + "_report.json";
    netepi::save_edge_list(net, edge_path);
    auto metrics = netepi::compute_metrics(net, effective_threads(0));
    netepi::atomic_write(metrics_path, [&](std::ostream& os) {
        os << netepi::metrics_csv_header() << "\n" << netepi::metrics_csv_row(metrics) << "\n";
    });
    netepi::atomic_write(report_path, [&](std::ostream& os) { os << report.dump(2) << "\n"; });
    std::cout << netepi::metrics_csv_header() << "\n" << netepi::metrics_csv_row(metrics) << "\n";
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = netepi::parse_simulate_config(config_path);

    netepi::ExperimentConfig ex;
    ex.network_kind = cfg.network_kind;
    if (cfg.network_kind == netepi::NetworkKind::dc) {
        ex.targets = netepi::load_degree_file(cfg.degree_file);
        if (!cfg.job_extra_file.empty()) {
            auto extra = netepi::load_job_extra_file(cfg.job_extra_file);
            ex.targets = netepi::combine_with_job_contacts(ex.targets, extra, cfg.degree_cap);
        }
        ex.p = cfg.p;
    } else {
        ex.er_n = cfg.n;
        ex.er_avg_degree = cfg.avg_degree;
    }
    ex.disease.transmission_mean = cfg.r_mean;
    ex.disease.transmission_sd = cfg.r_sd;
    ex.policy_kind = cfg.policy_kind;
    ex.budget = cfg.budget;
    ex.replications = cfg.replications;
    ex.regenerate_network_per_replication = cfg.regenerate_network;
    ex.master_seed = cfg.master_seed;
    ex.max_days = cfg.max_days;
    ex.threads = effective_threads(cfg.threads);

    std::filesystem::create_directories(out_dir);
    std::cout << "running " << ex.replications << " replications on " << ex.threads
              << " threads...\n";
    auto summary = netepi::run_replications(ex);

    const std::string summary_path = out_dir + "/summary.csv";
    const std::string band_path = out_dir + "/band.csv";
    const std::string traj_path = out_dir + "/trajectory0.csv";
    const std::string manifest_path = out_dir + "/manifest.json";
    netepi::write_summary_csv(summary_path, {summary});
    netepi::write_band_csv(band_path, summary);

    // A full daily record of replication 0 for inspection/plotting.
    {
        netepi::Network net;
        std::uint64_t net_seed = netepi::mix_seed(
            ex.master_seed, "net", ex.regenerate_network_per_replication ? 0u : 0u);
        if (ex.network_kind == netepi::NetworkKind::dc) {
            net = netepi::generate_dc(ex.targets, ex.p, net_seed).first;
        } else {
            net = netepi::generate_er(ex.er_n, ex.er_avg_degree, net_seed);
        }
        auto policy = netepi::make_policy(ex.policy_kind, ex.budget, net);
        auto traj = netepi::run_to_completion(net, ex.disease, &policy,
                                              netepi::mix_seed(ex.master_seed, "epi", 0),
                                              ex.max_days);
        netepi::atomic_write(traj_path, [&](std::ostream& os) {
            os << "day,S,E,I,R,new_infections,cumulative_infected,interventions\n";
            for (const auto& r : traj) {
                os << r.day << "," << r.s << "," << r.e << "," << r.i << "," << r.r << ","
                   << r.new_infections << "," << r.cumulative_ever_infected << ","
                   << r.interventions_applied << "\n";
            }
        });
    }

    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json manifest = {
        {"tool", "netepi"},
        {"version", "0.1.0"},
        {"config_file", config_path},
        {"config", netepi::config_snapshot(cfg)},
        {"master_seed", cfg.master_seed},
        {"outputs", {summary_path, band_path, traj_path}},
        {"peak_time_range_days", {summary.peak_time_min, summary.peak_time_max}},
        {"wall_clock_seconds", elapsed},
    };
    netepi::atomic_write(manifest_path,
                         [&](std::ostream& os) { os << manifest.dump(2) << "\n"; });
    std::cout << netepi::summary_csv_header() << "\n"
              << netepi::summary_csv_row(summary) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"network-epidemic simulation pipeline"};
    app.require_subcommand(1);

    std::string fit_file, fit_out;
    int fit_xmin = 1, fit_gof = 0;
    std::uint64_t fit_seed = 1;
    auto* fit = app.add_subcommand("fit", "fit a discrete power law to a degree-file tail");
    fit->add_option("degree_file", fit_file, "one degree per line")->required();
    fit->add_option("--xmin", fit_xmin, "tail threshold")->required();
    fit->add_option("--gof", fit_gof, "bootstrap replicates for the KS goodness-of-fit p-value");
    fit->add_option("--seed", fit_seed, "bootstrap seed");
    fit->add_option("--out", fit_out, "also write the JSON report here");

    std::string ng_file, ng_out = "network";
    double ng_p = 0.0, ng_avg = 0.0;
    int ng_n = 0;
    std::uint64_t ng_seed = 1;
    bool ng_er = false;
    auto* ng = app.add_subcommand("netgen", "generate a contact network and report metrics");
    ng->add_option("degree_file", ng_file, "degree-calibrated generator input");
    auto* er_opt = ng->add_flag("--er", ng_er, "generate an Erdos-Renyi benchmark instead");
    ng->add_option("--n", ng_n, "node count (with --er)");
    ng->add_option("--avg-degree", ng_avg, "average degree (with --er)");
    ng->add_option("--p", ng_p, "triadic closure probability (degree-calibrated)");
    ng->add_option("--seed", ng_seed, "generator seed");
    ng->add_option("--out", ng_out, "output prefix (.edges, _metrics.csv, _report.json)");

    std::string sim_config, sim_out = "out";
    auto* sim = app.add_subcommand("simulate", "run the replication experiment from a config file");
    sim->add_option("config_file", sim_config, "flat key=value config")->required();
    sim->add_option("--out-dir", sim_out, "output directory");

    try {
        app.parse(argc, argv);
        if (fit->parsed()) return cmd_fit(fit_file, fit_xmin, fit_gof, fit_seed, fit_out);
        if (ng->parsed()) {
            if (ng_er && !ng_file.empty()) {
                throw netepi::ConfigError("netgen: pass either a degree_file or --er, not both");
            }
            if (!ng_er && ng_file.empty()) {
                throw netepi::ConfigError("netgen: provide a degree_file or --er with --n/--avg-degree");
            }
            if (ng_er && (ng_n < 1 || ng_avg < 0.0)) {
                throw netepi::ConfigError("netgen --er: requires --n >= 1 and --avg-degree >= 0");
            }
            (void)er_opt;
            return cmd_netgen(ng_file, ng_er, ng_n, ng_avg, ng_p, ng_seed, ng_out);
        }
        if (sim->parsed()) return cmd_simulate(sim_config, sim_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const netepi::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const netepi::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
