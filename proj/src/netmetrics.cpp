#include "tna/netmetrics.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace tna {

namespace {

std::optional<double> freeman_component(const std::vector<std::int64_t>& degree,
                                        std::int64_t n) {
    const std::int64_t k_max = *std::max_element(degree.begin(), degree.end());
    if (k_max > n - 1) return std::nullopt;  // normalizer premise broken
    std::int64_t sum = 0;
    for (const std::int64_t k : degree) sum += k_max - k;
    return static_cast<double>(sum) / (static_cast<double>(n - 1) * static_cast<double>(n - 1));
}

std::optional<double> strength_component(const std::vector<std::int64_t>& strength,
                                         std::int64_t n) {
    std::int64_t total = 0;
    std::int64_t s_max = 0;
    for (const std::int64_t s : strength) {
        total += s;
        s_max = std::max(s_max, s);
    }
    if (total <= 0) return std::nullopt;
    std::int64_t sum = 0;
    for (const std::int64_t s : strength) sum += s_max - s;
    return static_cast<double>(sum) /
           (static_cast<double>(n - 1) * static_cast<double>(total));
}

// Pearson-type correlation of the symmetrized edge-endpoint sample
// {(a_j, b_j)} u {(b_j, a_j)}, computed in centered form for stability.
// Algebraically identical to the raw-moment assortativity quotient.
std::optional<double> edge_sample_correlation(const TradingNetwork& net,
                                              const std::vector<double>& node_value) {
    const std::size_t m = net.edge_count();
    if (m < 2) return std::nullopt;

    double mean = 0.0;
    for (const auto& e : net.edges) mean += node_value[e.seller] + node_value[e.buyer];
    mean /= static_cast<double>(2 * m);

    double cov = 0.0;
    double var = 0.0;
    for (const auto& e : net.edges) {
        const double da = node_value[e.seller] - mean;
        const double db = node_value[e.buyer] - mean;
        cov += da * db;
        var += 0.5 * (da * da + db * db);
    }
    if (var <= 0.0) return std::nullopt;
    // |cov| <= var by Cauchy-Schwarz; guard the quotient against rounding.
    return std::clamp(cov / var, -1.0, 1.0);
}

std::vector<double> total_of(const std::vector<std::int64_t>& in,
                             const std::vector<std::int64_t>& out) {
    std::vector<double> total(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        total[i] = static_cast<double>(in[i] + out[i]);
    }
    return total;
}

}  // namespace

Centralization degree_centralization(const TradingNetwork& net) {
    const std::int64_t n = static_cast<std::int64_t>(net.node_count());
    if (n < 2) return {};
    Centralization c;
    c.in = freeman_component(net.in_degree, n);
    c.out = freeman_component(net.out_degree, n);
    if (c.in && c.out) c.net = *c.in - *c.out;
    return c;
}

Centralization strength_centralization(const TradingNetwork& net) {
    const std::int64_t n = static_cast<std::int64_t>(net.node_count());
    if (n < 2) return {};
    Centralization c;
    c.in = strength_component(net.in_strength, n);
    c.out = strength_component(net.out_strength, n);
    if (c.in && c.out) c.net = *c.in - *c.out;
    return c;
}

std::optional<double> assortativity_degree(const TradingNetwork& net) {
    if (net.edge_count() < 2) return std::nullopt;
    return edge_sample_correlation(net, total_of(net.in_degree, net.out_degree));
}

std::optional<double> assortativity_strength(const TradingNetwork& net) {
    if (net.edge_count() < 2) return std::nullopt;
    return edge_sample_correlation(net, total_of(net.in_strength, net.out_strength));
}

std::optional<double> average_path_length(const TradingNetwork& net) {
    const auto adj = undirected_simple_projection(net);
    const std::size_t n = adj.size();

    std::int64_t pair_count = 0;  // ordered reachable pairs
    std::int64_t dist_sum = 0;
    std::vector<std::int32_t> dist(n);
    std::vector<std::int32_t> queue(n);

    for (std::size_t src = 0; src < n; ++src) {
        if (adj[src].empty()) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<std::int32_t>(src);
        while (head < tail) {
            const std::int32_t u = queue[head++];
            for (const std::int32_t v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    dist_sum += dist[v];
                    ++pair_count;
                    queue[tail++] = v;
                }
            }
        }
    }
    if (pair_count == 0) return std::nullopt;
    return static_cast<double>(dist_sum) / static_cast<double>(pair_count);
}

NetworkMetrics compute_all(const TradingNetwork& net) {
    NetworkMetrics m;
    const Centralization ck = degree_centralization(net);
    m.ck_in = ck.in;
    m.ck_out = ck.out;
    m.ck = ck.net;
    const Centralization cs = strength_centralization(net);
    m.cs_in = cs.in;
    m.cs_out = cs.out;
    m.cs = cs.net;
    m.ek = assortativity_degree(net);
    m.es = assortativity_strength(net);
    m.path_length = average_path_length(net);
    return m;
}

}  // namespace tna
