#include "tna/network.hpp"

#include <algorithm>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace tna {

std::int64_t TradingNetwork::total_weight() const {
    std::int64_t sum = 0;
    for (const auto& e : edges) sum += e.weight;
    return sum;
}

TradingNetwork build_network(std::span<const Transaction> transactions) {
    TradingNetwork net;
    net.edges.reserve(transactions.size());

    std::unordered_map<std::string_view, std::int32_t> index;
    index.reserve(transactions.size() * 2);
    const auto node_of = [&](const std::string& id) -> std::int32_t {
        auto [it, inserted] = index.try_emplace(id, static_cast<std::int32_t>(net.node_ids.size()));
        if (inserted) net.node_ids.push_back(id);
        return it->second;
    };

    for (const auto& t : transactions) {
        const std::int32_t seller = node_of(t.seller_id);
        const std::int32_t buyer = node_of(t.buyer_id);
        net.edges.push_back({seller, buyer, t.size});
    }

    const std::size_t n = net.node_ids.size();
    net.in_degree.assign(n, 0);
    net.out_degree.assign(n, 0);
    net.in_strength.assign(n, 0);
    net.out_strength.assign(n, 0);
    for (const auto& e : net.edges) {
        net.out_degree[e.seller] += 1;
        net.in_degree[e.buyer] += 1;
        net.out_strength[e.seller] += e.weight;
        net.in_strength[e.buyer] += e.weight;
    }
    return net;
}

TradingNetwork build_network(const Window& window) {
    return build_network(std::span<const Transaction>(window.transactions));
}

std::vector<std::vector<std::int32_t>> undirected_simple_projection(const TradingNetwork& net) {
    std::vector<std::vector<std::int32_t>> adj(net.node_count());
    for (const auto& e : net.edges) {
        if (e.seller == e.buyer) continue;
        adj[e.seller].push_back(e.buyer);
        adj[e.buyer].push_back(e.seller);
    }
    for (auto& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }
    return adj;
}

void write_edge_list(std::ostream& out, const TradingNetwork& net) {
    for (const auto& e : net.edges) {
        out << net.node_ids[e.seller] << ',' << net.node_ids[e.buyer] << ',' << e.weight << '\n';
    }
}

}  // namespace tna
