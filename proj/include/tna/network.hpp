#pragma once

#include "tna/ingest.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tna {

// Directed weighted multigraph of one window: an edge per trade, seller ->
// buyer, weighted by trade size. Parallel edges and self-loops are retained;
// a self-loop adds 1 to both in- and out-degree and its full size to both
// strengths.
struct TradingNetwork {
    std::vector<std::string> node_ids;  // dense index -> trader id
    struct Edge {
        std::int32_t seller = 0;
        std::int32_t buyer = 0;
        std::int64_t weight = 0;
    };
    std::vector<Edge> edges;  // one per transaction, (timestamp, txn_id) order
    std::vector<std::int64_t> in_degree;
    std::vector<std::int64_t> out_degree;
    std::vector<std::int64_t> in_strength;
    std::vector<std::int64_t> out_strength;

    std::size_t node_count() const { return node_ids.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::int64_t total_weight() const;
};

// Transactions must already be in canonical (timestamp, txn_id) order, as
// produced by assign_windows. An empty window yields n = 0, m = 0.
TradingNetwork build_network(std::span<const Transaction> transactions);
TradingNetwork build_network(const Window& window);

// Undirected simple graph on the same node set: parallel edges collapsed,
// self-loops dropped. Adjacency lists come back sorted and deduplicated.
std::vector<std::vector<std::int32_t>> undirected_simple_projection(const TradingNetwork& net);

// Debug export, one "seller,buyer,weight" line per edge.
void write_edge_list(std::ostream& out, const TradingNetwork& net);

}  // namespace tna
