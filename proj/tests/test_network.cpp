#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tna/network.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace tna;
using namespace testutil;

namespace {

int index_of(const TradingNetwork& net, const std::string& id) {
    for (std::size_t i = 0; i < net.node_ids.size(); ++i) {
        if (net.node_ids[i] == id) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

TEST_CASE("direct construction") {
    // S sells to B and C.
    const TradingNetwork net = make_network({{0, 1, 100}, {0, 2, 200}});
    CHECK(net.node_count() == 3);
    CHECK(net.edge_count() == 2);
    const int s = index_of(net, node_name(0));
    const int c = index_of(net, node_name(2));
    REQUIRE(s >= 0);
    REQUIRE(c >= 0);
    CHECK(net.out_degree[s] == 2);
    CHECK(net.in_strength[c] == 200);
}

TEST_CASE("parallel edges are retained") {
    const TradingNetwork net = make_network({{0, 1, 100}, {0, 1, 300}});
    CHECK(net.edge_count() == 2);
    const int b = index_of(net, node_name(1));
    REQUIRE(b >= 0);
    CHECK(net.in_degree[b] == 2);
    CHECK(net.in_strength[b] == 400);
}

TEST_CASE("self-loops count on both sides") {
    const TradingNetwork net = make_network({{0, 0, 500}});
    CHECK(net.node_count() == 1);
    CHECK(net.in_degree[0] == 1);
    CHECK(net.out_degree[0] == 1);
    CHECK(net.in_strength[0] == 500);
    CHECK(net.out_strength[0] == 500);
}

TEST_CASE("degree and strength tallies balance") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto edges = random_multigraph(rng, 30, 100);
        const TradingNetwork net = make_network(edges);

        std::int64_t in_deg = 0, out_deg = 0, in_str = 0, out_str = 0, weights = 0;
        for (std::size_t i = 0; i < net.node_count(); ++i) {
            in_deg += net.in_degree[i];
            out_deg += net.out_degree[i];
            in_str += net.in_strength[i];
            out_str += net.out_strength[i];
        }
        for (const auto& e : edges) weights += e.weight;
        CHECK(in_deg == static_cast<std::int64_t>(net.edge_count()));
        CHECK(out_deg == static_cast<std::int64_t>(net.edge_count()));
        CHECK(in_str == weights);
        CHECK(out_str == weights);
        CHECK(net.total_weight() == weights);
        CHECK((net.edge_count() == 0 || net.node_count() >= 1));
    }
}

TEST_CASE("empty window yields empty network") {
    Window w;
    const TradingNetwork net = build_network(w);
    CHECK(net.node_count() == 0);
    CHECK(net.edge_count() == 0);
}

TEST_CASE("projection collapses and drops") {
    // A->B and B->A collapse to one undirected edge; the loop vanishes.
    const TradingNetwork net = make_network({{0, 1, 10}, {1, 0, 20}, {0, 0, 30}});
    const auto adj = undirected_simple_projection(net);
    const int a = index_of(net, node_name(0));
    const int b = index_of(net, node_name(1));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(adj[static_cast<std::size_t>(a)] == std::vector<std::int32_t>{b});
    CHECK(adj[static_cast<std::size_t>(b)] == std::vector<std::int32_t>{a});
}

TEST_CASE("projection matches pair-existence scan") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const TradingNetwork net = make_network(random_multigraph(rng, 12, 50));
        const auto adj = undirected_simple_projection(net);

        std::set<std::pair<int, int>> expected;
        for (const auto& e : net.edges) {
            if (e.seller == e.buyer) continue;
            expected.insert({std::min(e.seller, e.buyer), std::max(e.seller, e.buyer)});
        }
        std::set<std::pair<int, int>> actual;
        for (std::size_t u = 0; u < adj.size(); ++u) {
            for (const std::int32_t v : adj[u]) {
                actual.insert({std::min<int>(static_cast<int>(u), v),
                               std::max<int>(static_cast<int>(u), v)});
            }
        }
        CHECK(actual == expected);
    }
}

TEST_CASE("construction is independent of in-window transaction order") {
    // assign_windows hands build_network transactions already sorted by
    // (timestamp, txn_id); shuffling the raw input must not matter.
    auto txns = edge_transactions({{0, 1, 10}, {2, 1, 20}, {1, 3, 30}, {0, 3, 40}});
    const WindowSpec spec = WindowSpec::standard();
    for (auto& t : txns) {
        t.timestamp = days_from_civil({2005, 8, 22}) * kMillisPerDay + 9 * kMillisPerHour +
                      30 * kMillisPerMinute + (t.timestamp % 1000);
    }
    auto shuffled = txns;
    std::mt19937_64 rng(5);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    const auto w1 = assign_windows(txns, spec);
    const auto w2 = assign_windows(shuffled, spec);
    REQUIRE(w1.windows.size() == w2.windows.size());
    const TradingNetwork n1 = build_network(w1.windows[0]);
    const TradingNetwork n2 = build_network(w2.windows[0]);
    CHECK(n1.node_ids == n2.node_ids);
    REQUIRE(n1.edge_count() == n2.edge_count());
    for (std::size_t i = 0; i < n1.edges.size(); ++i) {
        CHECK(n1.edges[i].seller == n2.edges[i].seller);
        CHECK(n1.edges[i].buyer == n2.edges[i].buyer);
        CHECK(n1.edges[i].weight == n2.edges[i].weight);
    }
}

TEST_CASE("edge list export") {
    const TradingNetwork net = make_network({{0, 1, 100}, {0, 2, 200}});
    std::ostringstream out;
    write_edge_list(out, net);
    CHECK(out.str() == "N0000,N0001,100\nN0000,N0002,200\n");
}
