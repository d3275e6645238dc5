#include <doctest.h>

#include "netepi/errors.hpp"
#include "netepi/netgen.hpp"
#include "netepi/netmetrics.hpp"
#include "netepi/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace netepi;

namespace {

Network make(int n, std::vector<std::pair<int, int>> edges) {
    Network net(n);
    for (auto [i, j] : edges) net.add_edge_unchecked(i, j);
    net.sort_adjacency();
    return net;
}

} // namespace

TEST_CASE("local clustering on hand-checked graphs") {
    auto tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(local_clustering(tri, 0) == 1.0);
    CHECK(avg_clustering(tri) == 1.0);

    auto path3 = make(3, {{0, 1}, {1, 2}});
    CHECK(local_clustering(path3, 1) == 0.0);

    auto g4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(local_clustering(g4, 0) == doctest::Approx(1.0 / 3.0));
    CHECK(local_clustering(g4, 1) == 1.0);
    CHECK(local_clustering(g4, 3) == 0.0);  // degree < 2 convention
}

TEST_CASE("trees have zero clustering") {
    auto star = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(avg_clustering(star) == 0.0);
    CHECK(global_transitivity(star) == 0.0);
}

TEST_CASE("path metrics on hand-checked graphs") {
    auto tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
    auto [apl_t, diam_t] = path_metrics(tri);
    CHECK(apl_t == 1.0);
    CHECK(diam_t == 1);

    auto path3 = make(3, {{0, 1}, {1, 2}});
    auto [apl_p, diam_p] = path_metrics(path3);
    CHECK(apl_p == doctest::Approx(4.0 / 3.0));
    CHECK(diam_p == 2);
}

TEST_CASE("metrics restrict to the largest component") {
    // a 4-path plus an isolated triangle-free pair
    auto g = make(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    CHECK(largest_component_size(g) == 4);
    auto [apl, diam] = path_metrics(g);
    // P4 distances: 1,1,1,2,2,3 over unordered pairs
    CHECK(apl == doctest::Approx(10.0 / 6.0));
    CHECK(diam == 3);
}

TEST_CASE("degree_clustering_correlation sign and degenerate cases") {
    auto tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(degree_clustering_correlation(tri), DataError);

    // hub with unclosed neighbors + a closed triangle among low-degree nodes:
    // high degree <-> low clustering, so the correlation is negative
    auto g = make(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {1, 2}, {5, 6}});
    CHECK(degree_clustering_correlation(g) < 0.0);
}

TEST_CASE("path and clustering metrics equal brute-force oracles on random graphs") {
    Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.uniform_index(47));
        Network net(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.bernoulli(0.15)) net.add_edge_unchecked(i, j);
            }
        }
        net.sort_adjacency();

        // Floyd-Warshall oracle
        const int INF = 1 << 20;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
        for (int i = 0; i < n; ++i) d[i][i] = 0;
        for (int i = 0; i < n; ++i)
            for (int j : net.adjacency[i]) d[i][j] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];

        // largest component by oracle distances
        std::vector<int> comp(n, -1);
        int best_size = 0, best_comp = 0, nc = 0;
        for (int i = 0; i < n; ++i) {
            if (comp[i] >= 0) continue;
            int size = 0;
            for (int j = 0; j < n; ++j)
                if (d[i][j] < INF) { comp[j] = nc; ++size; }
            if (size > best_size) { best_size = size; best_comp = nc; }
            ++nc;
        }
        if (best_size < 2) continue;
        long long sum = 0, pairs = 0;
        int diam_oracle = 0;
        for (int i = 0; i < n; ++i) {
            if (comp[i] != best_comp) continue;
            for (int j = 0; j < n; ++j) {
                if (j == i || comp[j] != best_comp) continue;
                sum += d[i][j];
                ++pairs;
                diam_oracle = std::max(diam_oracle, d[i][j]);
            }
        }
        auto [apl, diam] = path_metrics(net, 1 + trial % 3);
        CHECK(apl == doctest::Approx(static_cast<double>(sum) / pairs).epsilon(1e-12));
        CHECK(diam == diam_oracle);
        CHECK(largest_component_size(net) == best_size);

        // brute-force local clustering oracle
        for (int i = 0; i < n; ++i) {
            int k = net.degree(i);
            double expected = 0.0;
            if (k >= 2) {
                int links = 0;
                for (int a : net.adjacency[i])
                    for (int b : net.adjacency[i])
                        if (a < b && net.has_edge(a, b)) ++links;
                expected = 2.0 * links / (static_cast<double>(k) * (k - 1));
            }
            CHECK(local_clustering(net, i) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("sparse ER networks have near-zero clustering") {
    auto net = generate_er(1200, 9.72, 8);  // q ~ 0.008
    CHECK(avg_clustering(net) < 0.02);
}

TEST_CASE("compute_metrics fills the full panel consistently") {
    auto g = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    auto m = compute_metrics(g);
    CHECK(m.avg_degree == doctest::Approx(12.0 / 5.0));
    CHECK(m.median_degree == 2.0);
    CHECK(m.diameter >= static_cast<int>(m.avg_path_length));
    CHECK(metrics_csv_header().rfind("avg_degree,", 0) == 0);
    auto row = metrics_csv_row(m);
    CHECK(std::count(row.begin(), row.end(), ',') == 6);
}
