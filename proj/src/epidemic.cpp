#include "netepi/epidemic.hpp"
#include "netepi/errors.hpp"
#include "netepi/interventions.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace netepi {

namespace {

void sample_infection_params(EpidemicState& state, const DiseaseParams& params, int agent,
                             Rng& rng) {
    state.recovery_time[agent] = rng.poisson_in_range(
        params.recovery_time_mean_days, params.recovery_time_min_days,
        params.recovery_time_max_days);
    state.recovery_prob[agent] = rng.normal_truncated(
        params.recovery_prob_mean, params.recovery_prob_sd, params.recovery_prob_min,
        params.recovery_prob_max);
}

void enter_e(EpidemicState& state, const DiseaseParams& params, int agent, int infector,
             Rng& rng) {
    state.comp[agent] = Compartment::E;
    state.days_in_comp[agent] = 1;  // the infection day counts as day one in E
    sample_infection_params(state, params, agent, rng);
    state.ever_infected[agent] = 1;
    ++state.ever_infected_count;
    state.infected_by[agent] = infector;
    state.generation[agent] =
        (infector == -2) ? 0 : state.generation[infector] + 1;
}

} // namespace

EpidemicState init_epidemic(const Network& net, const DiseaseParams& params, Rng& rng) {
    const int n = net.n;
    if (params.n_seeds > n) throw DataError("init_epidemic: n_seeds exceeds network size");
    if (params.latency_days < 1 || params.infectious_window_days < 1 ||
        params.recovery_time_min_days < 1) {
        throw ConfigError("init_epidemic: all durations must be >= 1");
    }
    EpidemicState state;
    state.comp.assign(n, Compartment::S);
    state.days_in_comp.assign(n, 0);
    state.recovery_time.assign(n, 0);
    state.recovery_prob.assign(n, 0.0);
    state.ever_infected.assign(n, 0);
    state.ever_targeted.assign(n, 0);
    state.infected_by.assign(n, -1);
    state.generation.assign(n, -1);

    // Per-edge transmission probability is a dyad property, sampled once.
    state.edge_prob.resize(n);
    for (int i = 0; i < n; ++i) state.edge_prob[i].resize(net.adjacency[i].size());
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < net.adjacency[i].size(); ++k) {
            int j = net.adjacency[i][k];
            if (j <= i) continue;
            double pr = rng.normal_truncated(params.transmission_mean, params.transmission_sd,
                                             0.0, 1.0);
            state.edge_prob[i][k] = pr;
            const auto& aj = net.adjacency[j];
            std::size_t back = std::lower_bound(aj.begin(), aj.end(), i) - aj.begin();
            state.edge_prob[j][back] = pr;
        }
    }

    for (int seed : rng.sample_without_replacement(n, params.n_seeds)) {
        enter_e(state, params, seed, -2, rng);
    }
    return state;
}

DailyRecord step_day(EpidemicState& state, const Network& net, const DiseaseParams& params,
                     const InterventionPolicy* policy, Rng& rng) {
    const int n = net.n;
    DailyRecord rec;

    // (a) intervention
    if (policy != nullptr && policy->kind != PolicyKind::none) {
        rec.interventions_applied = apply_policy(state, net, *policy, rng);
    }

    // (b) transmission: I agents still inside the infectious window challenge
    // every S neighbor; successes are queued and applied at day end.
    std::vector<char> pending(n, 0);
    std::vector<std::pair<int, int>> new_cases;  // (agent, infector)
    for (int i = 0; i < n; ++i) {
        if (state.comp[i] != Compartment::I) continue;
        if (state.days_in_comp[i] >= params.infectious_window_days) continue;
        const auto& nb = net.adjacency[i];
        for (std::size_t k = 0; k < nb.size(); ++k) {
            int j = nb[k];
            if (state.comp[j] != Compartment::S) continue;
            if (rng.bernoulli(state.edge_prob[i][k]) && !pending[j]) {
                pending[j] = 1;
                new_cases.emplace_back(j, i);
            }
        }
    }

    // (c) progression; transitioned agents skip this day's counter advance.
    std::vector<char> skip(n, 0);
    for (int i = 0; i < n; ++i) {
        if (state.comp[i] == Compartment::E) {
            if (state.days_in_comp[i] >= params.latency_days) {
                state.comp[i] = Compartment::I;
                state.days_in_comp[i] = 0;
                skip[i] = 1;
            }
        } else if (state.comp[i] == Compartment::I) {
            if (state.days_in_comp[i] >= state.recovery_time[i]) {
                if (rng.bernoulli(state.recovery_prob[i])) {
                    state.comp[i] = Compartment::R;
                    state.days_in_comp[i] = 0;
                    skip[i] = 1;
                }
                // failed draws stay in I and retry tomorrow
            }
        }
    }

    // (d) counters advance for agents mid-compartment.
    for (int i = 0; i < n; ++i) {
        if (skip[i]) continue;
        if (state.comp[i] == Compartment::E || state.comp[i] == Compartment::I) {
            ++state.days_in_comp[i];
        }
    }

    // day-end synchronous application of the day's infections
    for (auto [agent, infector] : new_cases) {
        enter_e(state, params, agent, infector, rng);
    }

    ++state.day;
    rec.day = state.day;
    rec.s = state.count(Compartment::S);
    rec.e = state.count(Compartment::E);
    rec.i = state.count(Compartment::I);
    rec.r = state.count(Compartment::R);
    rec.new_infections = static_cast<int>(new_cases.size());
    rec.cumulative_ever_infected = state.ever_infected_count;
    return rec;
}

Trajectory run_to_completion(const Network& net, const DiseaseParams& params,
                             const InterventionPolicy* policy, std::uint64_t rng_seed,
                             int max_days) {
    Rng rng(rng_seed);
    EpidemicState state = init_epidemic(net, params, rng);
    Trajectory traj;
    for (int d = 0; d < max_days; ++d) {
        traj.push_back(step_day(state, net, params, policy, rng));
        if (!state.epidemic_active()) break;
    }
    return traj;
}

double compute_r0(const Network& net, const DiseaseParams& params) {
    if (net.n == 0) throw DataError("compute_r0: empty network");
    double k1 = 0.0, k2 = 0.0;
    for (int i = 0; i < net.n; ++i) {
        double d = net.degree(i);
        k1 += d;
        k2 += d * d;
    }
    k1 /= net.n;
    k2 /= net.n;
    if (k1 == 0.0) return 0.0;
    double transmissibility =
        std::min(1.0, params.infectious_window_days * params.transmission_mean);
    return transmissibility * (k2 / k1 - 1.0);
}

double secondary_case_oracle(const Network& net, const DiseaseParams& params,
                             int runs, std::uint64_t seed, int max_days, int threads) {
    const int nthreads = std::max(1, threads);
    std::vector<long> gen1(nthreads, 0), gen2(nthreads, 0);
    std::atomic<int> cursor{0};
    auto worker = [&](int tid) {
        for (;;) {
            int run = cursor.fetch_add(1);
            if (run >= runs) break;
            Rng rng(mix_seed(seed, "oracle-run", static_cast<std::uint64_t>(run)));
            EpidemicState state = init_epidemic(net, params, rng);
            for (int d = 0; d < max_days && state.epidemic_active(); ++d) {
                step_day(state, net, params, nullptr, rng);
            }
            for (int g : state.generation) {
                if (g == 1) ++gen1[tid];
                else if (g == 2) ++gen2[tid];
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
    long n1 = 0, n2 = 0;
    for (int t = 0; t < nthreads; ++t) { n1 += gen1[t]; n2 += gen2[t]; }
    if (n1 == 0) throw DataError("secondary_case_oracle: no first-generation infections");
    return static_cast<double>(n2) / static_cast<double>(n1);
}

} // namespace netepi
