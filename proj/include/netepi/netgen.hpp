#pragma once
// Degree-Calibrated network generator with tunable triadic closure, and an
// Erdos-Renyi benchmark with matched average degree.

#include "netepi/degree_data.hpp"
#include "netepi/network.hpp"

#include <cstdint>

namespace netepi {

struct GenReport {
    DegreeSequence target_degrees;
    DegreeSequence realized_degrees;
    long deficit_total = 0;   // sum of max(target - realized, 0)
    long closure_edges = 0;
};

// Modified configuration model:
//  - sources processed in descending target-degree order (ties: ascending id);
//  - each source connects to uniformly random available destinations (not
//    saturated, not adjacent, not self) until it reaches its target or the
//    pool is exhausted (deficit recorded, no restart);
//  - when an agent saturates during the fill phase, one closure pass visits
//    all unordered pairs of its neighbors and links each pair with
//    probability p, provided both endpoints are non-adjacent and below their
//    targets. Closure edges count toward targets; agents saturated by a
//    closure edge are excluded without a pass of their own.
// Realized degree never exceeds target.
std::pair<Network, GenReport> generate_dc(const DegreeSequence& targets, double p,
                                          std::uint64_t rng_seed);

// G(n, q) with q = avg_degree/(n-1), each unordered pair independent.
Network generate_er(int n, double avg_degree, std::uint64_t rng_seed);

} // namespace netepi
