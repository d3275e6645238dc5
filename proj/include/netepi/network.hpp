#pragma once
// Undirected simple graph over agents, plus edge-list serialization.

#include <string>
#include <vector>

namespace netepi {

struct Network {
    int n = 0;
    // Per-node neighbor lists; sorted ascending once construction is finished.
    std::vector<std::vector<int>> adjacency;

    explicit Network(int nodes = 0) : n(nodes), adjacency(nodes) {}

    int degree(int i) const { return static_cast<int>(adjacency[i].size()); }
    bool has_edge(int i, int j) const;
    // Construction-time append; does not keep lists sorted.
    void add_edge_unchecked(int i, int j);
    void sort_adjacency();
    std::size_t edge_count() const;
    // Checks symmetry, no self-loops, no duplicates (full adjacency scan).
    bool is_valid_simple() const;
};

// Format: header "# nodes=<n>", then one "i j" pair per line with i < j.
void save_edge_list(const Network& net, const std::string& path);
Network load_edge_list(const std::string& path);

} // namespace netepi
