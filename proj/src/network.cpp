#include "netepi/network.hpp"
#include "netepi/errors.hpp"
#include "netepi/io_util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace netepi {

bool Network::has_edge(int i, int j) const {
    const auto& a = adjacency[i];
    // Lists are small (max degree ~134 here); during construction they may be
    // unsorted, so use a linear scan rather than binary search.
    return std::find(a.begin(), a.end(), j) != a.end();
}

void Network::add_edge_unchecked(int i, int j) {
    adjacency[i].push_back(j);
    adjacency[j].push_back(i);
}

void Network::sort_adjacency() {
    for (auto& a : adjacency) std::sort(a.begin(), a.end());
}

std::size_t Network::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& a : adjacency) deg_sum += a.size();
    return deg_sum / 2;
}

bool Network::is_valid_simple() const {
    for (int i = 0; i < n; ++i) {
        const auto& a = adjacency[i];
        for (std::size_t k = 0; k < a.size(); ++k) {
            int j = a[k];
            if (j < 0 || j >= n || j == i) return false;
            if (!has_edge(j, i)) return false;
            for (std::size_t l = k + 1; l < a.size(); ++l) {
                if (a[l] == j) return false;
            }
        }
    }
    return true;
}

void save_edge_list(const Network& net, const std::string& path) {
    atomic_write(path, [&](std::ostream& out) {
        out << "# nodes=" << net.n << "\n";
        for (int i = 0; i < net.n; ++i) {
            for (int j : net.adjacency[i]) {
                if (i < j) out << i << " " << j << "\n";
            }
        }
    });
}

Network load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# nodes=", 0) != 0) {
        throw DataError(path + ": missing '# nodes=<n>' header");
    }
    int n = 0;
    try {
        n = std::stoi(line.substr(8));
    } catch (const std::exception&) {
        throw DataError(path + ": bad node count in header");
    }
    if (n < 0) throw DataError(path + ": negative node count");
    Network net(n);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int i = 0, j = 0;
        if (!(ss >> i >> j) || i < 0 || j < 0 || i >= n || j >= n || i >= j) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad edge line: '" + line + "'");
        }
        net.add_edge_unchecked(i, j);
    }
    net.sort_adjacency();
    return net;
}

} // namespace netepi
