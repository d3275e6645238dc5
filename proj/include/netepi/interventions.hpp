#pragma once
// Daily targeting policies: each moves up to `budget` agents into R per day.

#include "netepi/epidemic.hpp"
#include "netepi/network.hpp"
#include "netepi/rng.hpp"

#include <string>
#include <vector>

namespace netepi {

enum class PolicyKind { none, no_target, contact_target, hub_target };

PolicyKind policy_kind_from_string(const std::string& s);
std::string policy_kind_to_string(PolicyKind k);

struct InterventionPolicy {
    PolicyKind kind = PolicyKind::none;
    int budget = 0;
    // Descending degree, ties broken by ascending id; filled for hub_target.
    std::vector<int> hub_order;
};

InterventionPolicy make_policy(PolicyKind kind, int budget, const Network& net);

// Random mass intervention: up to b uniform draws from agents currently in
// {S, E, I}, each moved to R and flagged.
int apply_no_target(EpidemicState& state, int b, Rng& rng);

// Acquaintance targeting: b egos drawn uniformly from all agents; each ego
// nominates one uniformly random neighbor not previously targeted. Egos with
// no eligible neighbor are resampled. Nominees in {S, E, I} move to R; every
// nominee is flagged, so no agent is ever nominated twice.
int apply_contact_target(EpidemicState& state, const Network& net, int b, Rng& rng);

// Degree-rank targeting: the next b untargeted agents in the precomputed
// descending-degree order; rank positions are consumed even when the selected
// agent is already in R.
int apply_hub_target(EpidemicState& state, const std::vector<int>& hub_order, int b);

// Dispatch on policy.kind; returns the number of agents moved to R.
int apply_policy(EpidemicState& state, const Network& net, const InterventionPolicy& policy,
                 Rng& rng);

} // namespace netepi
