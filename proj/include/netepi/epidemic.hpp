#pragma once
// Agent-based SEIR dynamics on a fixed contact network.
//
// Day phases: (a) intervention, (b) transmission (synchronous at day end),
// (c) progression, (d) counter advance. An agent entering E is applied at day
// end with days_in_compartment = 1 (the infection day is its first day in E),
// so E lasts exactly latency_days calendar days. An agent that transitions in
// (c) resets its counter to 0 and skips that day's advance, so an I agent
// challenges neighbors on counter values 0..infectious_window_days-1 —
// exactly infectious_window_days days.

#include "netepi/network.hpp"
#include "netepi/rng.hpp"

#include <cstdint>
#include <vector>

namespace netepi {

enum class Compartment : std::uint8_t { S, E, I, R };

struct DiseaseParams {
    int latency_days = 4;
    int infectious_window_days = 4;
    double recovery_time_mean_days = 14.0;
    int recovery_time_min_days = 7;
    int recovery_time_max_days = 42;
    double recovery_prob_mean = 0.993;
    double recovery_prob_sd = 0.0015;
    double recovery_prob_min = 0.990;
    double recovery_prob_max = 0.996;
    double transmission_mean = 0.05;
    double transmission_sd = 0.02;
    int n_seeds = 5;
};

struct DailyRecord {
    int day = 0;
    int s = 0, e = 0, i = 0, r = 0;
    int new_infections = 0;
    int cumulative_ever_infected = 0;
    int interventions_applied = 0;
};

struct EpidemicState {
    std::vector<Compartment> comp;
    std::vector<int> days_in_comp;
    std::vector<int> recovery_time;        // sampled on entry to E
    std::vector<double> recovery_prob;     // sampled on entry to E
    std::vector<std::vector<double>> edge_prob;  // parallel to net.adjacency
    std::vector<char> ever_infected;
    std::vector<char> ever_targeted;
    std::vector<int> infected_by;          // -1 never, -2 seed, else infector id
    std::vector<int> generation;           // -1 never infected, 0 for seeds
    int day = 0;
    int ever_infected_count = 0;

    int count(Compartment c) const {
        int k = 0;
        for (auto x : comp) k += (x == c);
        return k;
    }
    bool epidemic_active() const {
        for (auto x : comp) {
            if (x == Compartment::E || x == Compartment::I) return true;
        }
        return false;
    }
};

struct InterventionPolicy;  // interventions.hpp

EpidemicState init_epidemic(const Network& net, const DiseaseParams& params, Rng& rng);

DailyRecord step_day(EpidemicState& state, const Network& net, const DiseaseParams& params,
                     const InterventionPolicy* policy, Rng& rng);

using Trajectory = std::vector<DailyRecord>;

Trajectory run_to_completion(const Network& net, const DiseaseParams& params,
                             const InterventionPolicy* policy, std::uint64_t rng_seed,
                             int max_days = 365);

// Heterogeneous-degree basic reproductive number:
// R0 = T * (<k^2>/<k> - 1), with per-window transmissibility
// T = min(1, infectious_window_days * transmission_mean).
double compute_r0(const Network& net, const DiseaseParams& params);

// Empirical cross-check: mean number of secondary infections generated by the
// first-generation infected agents (those infected directly by the seeds),
// averaged over `runs` simulations without intervention.
double secondary_case_oracle(const Network& net, const DiseaseParams& params,
                             int runs, std::uint64_t seed, int max_days = 365,
                             int threads = 1);

} // namespace netepi
