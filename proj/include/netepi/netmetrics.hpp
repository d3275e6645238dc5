#pragma once
// Network statistics panel: degree summary, clustering, degree-clustering
// correlation, BFS path metrics over the largest component.

#include "netepi/network.hpp"

#include <string>

namespace netepi {

struct NetworkMetrics {
    double avg_degree = 0.0;
    double median_degree = 0.0;
    double stdev_degree = 0.0;
    double avg_clustering = 0.0;
    double degree_clustering_corr = 0.0;
    double avg_path_length = 0.0;
    int diameter = 0;
};

// Fraction of neighbor pairs that are linked; 0 for degree < 2.
double local_clustering(const Network& net, int node);

// Mean of local_clustering over all nodes (degree-<2 nodes contribute 0).
double avg_clustering(const Network& net);

// Global transitivity (3 x triangles / connected triples), kept for
// sensitivity checks against the mean-local definition.
double global_transitivity(const Network& net);

// Pearson correlation of (degree, local clustering) over nodes with degree>=2.
// Throws DataError when either series has zero variance.
double degree_clustering_correlation(const Network& net);

// BFS from every node of the largest connected component; average and maximum
// shortest-path length over ordered reachable pairs within it.
std::pair<double, int> path_metrics(const Network& net, int threads = 1);

NetworkMetrics compute_metrics(const Network& net, int threads = 1);

// CSV row in Table-1 column order:
// avg_degree,median_degree,stdev_degree,clustering,deg_clust_corr,avg_path_length,diameter
std::string metrics_csv_header();
std::string metrics_csv_row(const NetworkMetrics& m);

// Size of the largest connected component.
int largest_component_size(const Network& net);

} // namespace netepi
