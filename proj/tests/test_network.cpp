#include <doctest.h>

#include "netepi/errors.hpp"
#include "netepi/network.hpp"

#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace netepi;

TEST_CASE("edge bookkeeping") {
    Network net(4);
    net.add_edge_unchecked(0, 1);
    net.add_edge_unchecked(2, 1);
    CHECK(net.has_edge(0, 1));
    CHECK(net.has_edge(1, 0));
    CHECK(net.has_edge(1, 2));
    CHECK(!net.has_edge(0, 2));
    CHECK(net.edge_count() == 2);
    CHECK(net.degree(1) == 2);
    CHECK(net.degree(3) == 0);
    net.sort_adjacency();
    CHECK(net.adjacency[1] == std::vector<int>{0, 2});
    CHECK(net.is_valid_simple());
}

TEST_CASE("is_valid_simple rejects broken graphs") {
    Network dup(3);
    dup.add_edge_unchecked(0, 1);
    dup.add_edge_unchecked(0, 1);
    CHECK(!dup.is_valid_simple());

    Network loop(2);
    loop.adjacency[0].push_back(0);
    CHECK(!loop.is_valid_simple());

    Network asym(2);
    asym.adjacency[0].push_back(1);  // missing reverse entry
    CHECK(!asym.is_valid_simple());
}

TEST_CASE("edge list round trip") {
    Network net(5);
    net.add_edge_unchecked(0, 4);
    net.add_edge_unchecked(1, 2);
    net.add_edge_unchecked(2, 4);
    net.sort_adjacency();
    auto tmp = std::filesystem::temp_directory_path() /
               ("netepi_net_" + std::to_string(::getpid()) + ".edges");
    save_edge_list(net, tmp.string());
    Network back = load_edge_list(tmp.string());
    CHECK(back.n == 5);
    CHECK(back.adjacency == net.adjacency);
    std::filesystem::remove(tmp);
}

TEST_CASE("load_edge_list validates format") {
    auto tmp = std::filesystem::temp_directory_path() /
               ("netepi_badnet_" + std::to_string(::getpid()) + ".edges");
    {
        std::ofstream out(tmp);
        out << "0 1\n";  // missing header
    }
    CHECK_THROWS_AS(load_edge_list(tmp.string()), DataError);
    {
        std::ofstream out(tmp);
        out << "# nodes=3\n0 7\n";  // endpoint out of range
    }
    CHECK_THROWS_AS(load_edge_list(tmp.string()), DataError);
    {
        std::ofstream out(tmp);
        out << "# nodes=3\n1 0\n";  // i >= j
    }
    CHECK_THROWS_AS(load_edge_list(tmp.string()), DataError);
    std::filesystem::remove(tmp);
    CHECK_THROWS_AS(load_edge_list("/no/such/file.edges"), DataError);
}
