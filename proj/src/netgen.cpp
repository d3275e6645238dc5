#include "netepi/netgen.hpp"
#include "netepi/errors.hpp"
#include "netepi/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netepi {

namespace {

// Pool of nodes still available as destinations, with O(1) removal.
class AvailablePool {
public:
    explicit AvailablePool(int n) : ids_(n), pos_(n) {
        std::iota(ids_.begin(), ids_.end(), 0);
        std::iota(pos_.begin(), pos_.end(), 0);
    }
    bool contains(int v) const { return pos_[v] >= 0; }
    std::size_t size() const { return ids_.size(); }
    int at(std::size_t k) const { return ids_[k]; }
    void remove(int v) {
        int p = pos_[v];
        if (p < 0) return;
        int last = ids_.back();
        ids_[p] = last;
        pos_[last] = p;
        ids_.pop_back();
        pos_[v] = -1;
    }
    const std::vector<int>& ids() const { return ids_; }

private:
    std::vector<int> ids_;
    std::vector<int> pos_;
};

} // namespace

std::pair<Network, GenReport> generate_dc(const DegreeSequence& targets, double p,
                                          std::uint64_t rng_seed) {
    const int n = static_cast<int>(targets.size());
    if (n < 2) throw DataError("generate_dc: need at least 2 agents");
    for (int t : targets) {
        if (t < 1) throw DataError("generate_dc: all target degrees must be >= 1");
    }
    Rng rng(rng_seed);
    Network net(n);
    std::vector<int> deg(n, 0);
    std::vector<char> unsat(n, 1);
    AvailablePool avail(n);
    GenReport report;
    report.target_degrees = targets;

    auto saturate = [&](int v) {
        unsat[v] = 0;
        avail.remove(v);
    };

    // One pass over the saturating agent's neighbor pairs. Endpoints that reach
    // their target through a closure edge are excluded without their own pass.
    auto closure_pass = [&](int a) {
        std::vector<int> nb = net.adjacency[a];
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                bool roll = rng.bernoulli(p);
                if (!roll) continue;
                if (deg[u] >= targets[u] || deg[v] >= targets[v]) continue;
                if (net.has_edge(u, v)) continue;
                net.add_edge_unchecked(u, v);
                ++deg[u]; ++deg[v];
                ++report.closure_edges;
                if (deg[u] >= targets[u] && unsat[u]) saturate(u);
                if (deg[v] >= targets[v] && unsat[v]) saturate(v);
            }
        }
    };

    // Uniform draw from avail \ ({s} U adj(s)); -1 when the set is empty.
    auto pick_destination = [&](int s) -> int {
        std::size_t pool = avail.size();
        std::size_t excluded = avail.contains(s) ? 1 : 0;
        for (int j : net.adjacency[s]) {
            if (avail.contains(j)) ++excluded;
        }
        if (pool <= excluded) return -1;
        std::size_t eligible = pool - excluded;
        if (eligible * 4 >= pool) {
            // Dense case: rejection sampling stays cheap and exactly uniform.
            for (;;) {
                int t = avail.at(rng.uniform_index(pool));
                if (t != s && !net.has_edge(s, t)) return t;
            }
        }
        std::vector<int> cand;
        cand.reserve(eligible);
        for (int t : avail.ids()) {
            if (t != s && !net.has_edge(s, t)) cand.push_back(t);
        }
        return cand[rng.uniform_index(cand.size())];
    };

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return targets[a] > targets[b]; });

    for (int s : order) {
        if (!unsat[s]) continue;
        bool wedged = false;
        while (deg[s] < targets[s]) {
            int t = pick_destination(s);
            if (t < 0) {
                saturate(s);  // out of the pool; its remaining stubs stay unmet
                wedged = true;
                break;
            }
            net.add_edge_unchecked(s, t);
            ++deg[s]; ++deg[t];
            if (deg[t] >= targets[t] && unsat[t]) {
                saturate(t);
                closure_pass(t);
            }
        }
        if (!wedged && deg[s] >= targets[s] && unsat[s]) {
            saturate(s);
            closure_pass(s);
        }
    }

    net.sort_adjacency();
    report.realized_degrees.resize(n);
    for (int i = 0; i < n; ++i) {
        report.realized_degrees[i] = net.degree(i);
        report.deficit_total += std::max(0, targets[i] - report.realized_degrees[i]);
    }
    return {std::move(net), std::move(report)};
}

Network generate_er(int n, double avg_degree, std::uint64_t rng_seed) {
    if (n < 0) throw DataError("generate_er: negative n");
    Network net(n);
    if (n < 2) return net;
    double q = avg_degree / static_cast<double>(n - 1);
    if (q < 0.0 || q > 1.0) {
        throw DataError("generate_er: avg_degree must be in [0, n-1]");
    }
    if (q == 0.0) return net;
    Rng rng(rng_seed);
    if (q >= 1.0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) net.add_edge_unchecked(i, j);
        net.sort_adjacency();
        return net;
    }
    // Batagelj-Brandes geometric skipping over the C(n,2) pair sequence.
    const double log1q = std::log(1.0 - q);
    long v = 1, w = -1;
    for (;;) {
        double u = rng.uniform();
        w += 1 + static_cast<long>(std::floor(std::log(1.0 - u) / log1q));
        while (w >= v && v < n) { w -= v; ++v; }
        if (v >= n) break;
        net.add_edge_unchecked(static_cast<int>(v), static_cast<int>(w));
    }
    net.sort_adjacency();
    return net;
}

} // namespace netepi
