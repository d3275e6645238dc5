#include "netepi/interventions.hpp"
#include "netepi/errors.hpp"

#include <algorithm>
#include <numeric>

namespace netepi {

PolicyKind policy_kind_from_string(const std::string& s) {
    if (s == "none") return PolicyKind::none;
    if (s == "no_target") return PolicyKind::no_target;
    if (s == "contact_target") return PolicyKind::contact_target;
    if (s == "hub_target") return PolicyKind::hub_target;
    throw ConfigError("unknown intervention kind '" + s +
                      "' (expected none|no_target|contact_target|hub_target)");
}

std::string policy_kind_to_string(PolicyKind k) {
    switch (k) {
        case PolicyKind::none: return "none";
        case PolicyKind::no_target: return "no_target";
        case PolicyKind::contact_target: return "contact_target";
        case PolicyKind::hub_target: return "hub_target";
    }
    return "none";
}

InterventionPolicy make_policy(PolicyKind kind, int budget, const Network& net) {
    if (budget < 0) throw ConfigError("intervention budget must be >= 0");
    InterventionPolicy p;
    p.kind = kind;
    p.budget = budget;
    if (kind == PolicyKind::hub_target) {
        p.hub_order.resize(net.n);
        std::iota(p.hub_order.begin(), p.hub_order.end(), 0);
        std::stable_sort(p.hub_order.begin(), p.hub_order.end(),
                         [&](int a, int b) { return net.degree(a) > net.degree(b); });
    }
    return p;
}

namespace {

inline bool live(Compartment c) {
    return c == Compartment::S || c == Compartment::E || c == Compartment::I;
}

void move_to_r(EpidemicState& state, int agent) {
    state.comp[agent] = Compartment::R;
    state.days_in_comp[agent] = 0;
}

} // namespace

int apply_no_target(EpidemicState& state, int b, Rng& rng) {
    if (b <= 0) return 0;
    std::vector<int> eligible;
    for (std::size_t i = 0; i < state.comp.size(); ++i) {
        if (live(state.comp[i])) eligible.push_back(static_cast<int>(i));
    }
    const int take = std::min<int>(b, static_cast<int>(eligible.size()));
    if (take == 0) return 0;
    auto picks = rng.sample_without_replacement(static_cast<int>(eligible.size()), take);
    for (int k : picks) {
        int agent = eligible[k];
        move_to_r(state, agent);
        state.ever_targeted[agent] = 1;
    }
    return take;
}

int apply_contact_target(EpidemicState& state, const Network& net, int b, Rng& rng) {
    if (b <= 0) return 0;
    const int n = net.n;
    // An agent can be nominated iff it is untargeted and has at least one
    // neighbor; the day's demand is capped by that remaining population.
    int nominable = 0;
    for (int v = 0; v < n; ++v) {
        if (!state.ever_targeted[v] && net.degree(v) > 0) ++nominable;
    }
    int slots = std::min(b, nominable);
    int applied = 0;
    std::vector<int> cand;
    // Egos without an eligible neighbor are resampled (footnote rule); the
    // attempt cap only guards against pathological graphs.
    long attempts_left = 200L * n + 1000;
    for (int s = 0; s < slots; ++s) {
        int nominee = -1;
        while (nominee < 0 && attempts_left-- > 0) {
            int ego = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
            cand.clear();
            for (int v : net.adjacency[ego]) {
                if (!state.ever_targeted[v]) cand.push_back(v);
            }
            if (!cand.empty()) nominee = cand[rng.uniform_index(cand.size())];
        }
        if (nominee < 0) break;
        state.ever_targeted[nominee] = 1;  // spends the nomination even if in R
        if (live(state.comp[nominee])) {
            move_to_r(state, nominee);
            ++applied;
        }
    }
    return applied;
}

int apply_hub_target(EpidemicState& state, const std::vector<int>& hub_order, int b) {
    if (b <= 0) return 0;
    int applied = 0, consumed = 0;
    for (int agent : hub_order) {
        if (consumed >= b) break;
        if (state.ever_targeted[agent]) continue;
        state.ever_targeted[agent] = 1;
        ++consumed;
        if (live(state.comp[agent])) {
            move_to_r(state, agent);
            ++applied;
        }
    }
    return applied;
}

int apply_policy(EpidemicState& state, const Network& net, const InterventionPolicy& policy,
                 Rng& rng) {
    switch (policy.kind) {
        case PolicyKind::none: return 0;
        case PolicyKind::no_target: return apply_no_target(state, policy.budget, rng);
        case PolicyKind::contact_target:
            return apply_contact_target(state, net, policy.budget, rng);
        case PolicyKind::hub_target:
            return apply_hub_target(state, policy.hub_order, policy.budget);
    }
    return 0;
}

} // namespace netepi
