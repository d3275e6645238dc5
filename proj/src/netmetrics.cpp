#include "netepi/netmetrics.hpp"
#include "netepi/degree_data.hpp"
#include "netepi/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <queue>
#include <sstream>
#include <thread>

namespace netepi {

double local_clustering(const Network& net, int node) {
    const auto& nb = net.adjacency[node];
    const int k = static_cast<int>(nb.size());
    if (k < 2) return 0.0;
    long links = 0;
    for (int i = 0; i < k; ++i) {
        const auto& ai = net.adjacency[nb[i]];
        for (int j = i + 1; j < k; ++j) {
            if (std::binary_search(ai.begin(), ai.end(), nb[j])) ++links;
        }
    }
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
}

double avg_clustering(const Network& net) {
    if (net.n == 0) throw DataError("avg_clustering: empty network");
    double sum = 0.0;
    for (int i = 0; i < net.n; ++i) sum += local_clustering(net, i);
    return sum / static_cast<double>(net.n);
}

double global_transitivity(const Network& net) {
    long triangles2 = 0;  // ordered-pair count, i.e. 2x per triangle per vertex
    long triples = 0;
    for (int i = 0; i < net.n; ++i) {
        const auto& nb = net.adjacency[i];
        const long k = static_cast<long>(nb.size());
        triples += k * (k - 1) / 2;
        for (std::size_t a = 0; a < nb.size(); ++a) {
            const auto& aa = net.adjacency[nb[a]];
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (std::binary_search(aa.begin(), aa.end(), nb[b])) ++triangles2;
            }
        }
    }
    if (triples == 0) return 0.0;
    return static_cast<double>(triangles2) / static_cast<double>(triples);
}

double degree_clustering_correlation(const Network& net) {
    std::vector<double> xs, ys;
    for (int i = 0; i < net.n; ++i) {
        if (net.degree(i) >= 2) {
            xs.push_back(net.degree(i));
            ys.push_back(local_clustering(net, i));
        }
    }
    if (xs.size() < 2) throw DataError("degree_clustering_correlation: fewer than 2 nodes with degree >= 2");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n; my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx; syy += dy * dy; sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DataError("degree_clustering_correlation: zero variance in a series");
    }
    return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<int> component_labels(const Network& net, std::vector<int>& sizes) {
    std::vector<int> comp(net.n, -1);
    int c = 0;
    for (int s = 0; s < net.n; ++s) {
        if (comp[s] >= 0) continue;
        int count = 0;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int u = q.front(); q.pop();
            ++count;
            for (int v : net.adjacency[u]) {
                if (comp[v] < 0) { comp[v] = c; q.push(v); }
            }
        }
        sizes.push_back(count);
        ++c;
    }
    return comp;
}

} // namespace

int largest_component_size(const Network& net) {
    if (net.n == 0) return 0;
    std::vector<int> sizes;
    component_labels(net, sizes);
    return *std::max_element(sizes.begin(), sizes.end());
}

std::pair<double, int> path_metrics(const Network& net, int threads) {
    if (net.n < 2) throw DataError("path_metrics: need at least 2 nodes");
    std::vector<int> sizes;
    std::vector<int> comp = component_labels(net, sizes);
    int big = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<int> nodes;
    for (int i = 0; i < net.n; ++i) {
        if (comp[i] == big) nodes.push_back(i);
    }
    if (nodes.size() < 2) return {0.0, 0};

    const int nthreads = std::max(1, threads);
    std::vector<long long> dist_sum(nthreads, 0);
    std::vector<long long> pair_count(nthreads, 0);
    std::vector<int> ecc_max(nthreads, 0);
    std::atomic<std::size_t> cursor{0};

    auto worker = [&](int tid) {
        std::vector<int> dist(net.n);
        for (;;) {
            std::size_t k = cursor.fetch_add(1);
            if (k >= nodes.size()) break;
            int s = nodes[k];
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<int> q;
            q.push(s);
            dist[s] = 0;
            while (!q.empty()) {
                int u = q.front(); q.pop();
                for (int v : net.adjacency[u]) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        q.push(v);
                    }
                }
            }
            for (int t : nodes) {
                if (t == s) continue;
                dist_sum[tid] += dist[t];
                ++pair_count[tid];
                ecc_max[tid] = std::max(ecc_max[tid], dist[t]);
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
    long long total = 0, pairs = 0;
    int diam = 0;
    for (int t = 0; t < nthreads; ++t) {
        total += dist_sum[t];
        pairs += pair_count[t];
        diam = std::max(diam, ecc_max[t]);
    }
    return {static_cast<double>(total) / static_cast<double>(pairs), diam};
}

NetworkMetrics compute_metrics(const Network& net, int threads) {
    NetworkMetrics m;
    DegreeSequence degs(net.n);
    for (int i = 0; i < net.n; ++i) degs[i] = net.degree(i);
    // degree_stats requires entries >= 1 only for calibration input; compute
    // summary statistics directly so isolated nodes are representable.
    double sum = 0.0, sumsq = 0.0;
    for (int d : degs) { sum += d; sumsq += static_cast<double>(d) * d; }
    m.avg_degree = sum / net.n;
    m.stdev_degree = std::sqrt(std::max(0.0, sumsq / net.n - m.avg_degree * m.avg_degree));
    std::vector<double> sorted(degs.begin(), degs.end());
    std::sort(sorted.begin(), sorted.end());
    m.median_degree = (net.n % 2 == 1) ? sorted[net.n / 2]
                                       : 0.5 * (sorted[net.n / 2 - 1] + sorted[net.n / 2]);
    m.avg_clustering = avg_clustering(net);
    try {
        m.degree_clustering_corr = degree_clustering_correlation(net);
    } catch (const DataError&) {
        m.degree_clustering_corr = std::nan("");
    }
    auto [apl, diam] = path_metrics(net, threads);
    m.avg_path_length = apl;
    m.diameter = diam;
    return m;
}

std::string metrics_csv_header() {
    return "avg_degree,median_degree,stdev_degree,clustering,deg_clust_corr,avg_path_length,diameter";
}

std::string metrics_csv_row(const NetworkMetrics& m) {
    std::ostringstream ss;
    ss.precision(6);
    ss << std::fixed
       << m.avg_degree << "," << m.median_degree << "," << m.stdev_degree << ","
       << m.avg_clustering << "," << m.degree_clustering_corr << ","
       << m.avg_path_length << "," << m.diameter;
    return ss.str();
}

} // namespace netepi
