#pragma once

#include "tna/network.hpp"

#include <optional>

namespace tna {

// The five topological metrics of one trading network. A field is missing
// when its definition degenerates for the window (see each operation).
struct NetworkMetrics {
    std::optional<double> ck_in, ck_out, ck;  // degree centralization
    std::optional<double> cs_in, cs_out, cs;  // strength centralization
    std::optional<double> ek;                 // degree assortativity
    std::optional<double> es;                 // strength assortativity
    std::optional<double> path_length;        // average shortest-path length
};

struct Centralization {
    std::optional<double> in, out, net;  // net = in - out
};

// Freeman-style degree centralization over multiplicity-counting degrees:
//   C^in = sum_i (k_max^in - k_i^in) / (n-1)^2,   C = C^in - C^out.
// Missing when n < 2. A component is also missing when some node's in- (out-)
// degree exceeds n-1: the (n-1)^2 normalizer assumes the simple-digraph
// maximum, and past it the quotient stops being a [0,1] centralization.
Centralization degree_centralization(const TradingNetwork& net);

// Strength analogue:
//   C_s^in = sum_i (s_max^in - s_i^in) / ((n-1) * sum_i s_i^in).
// Missing when n < 2 or total weight is zero.
Centralization strength_centralization(const TradingNetwork& net);

// Edge-sample correlation of endpoint total degrees (in + out), the edge set
// taken with multiplicity; self-loops contribute a pair with equal endpoint
// values. Missing when m < 2 or the endpoint-degree variance is zero.
std::optional<double> assortativity_degree(const TradingNetwork& net);

// Same with endpoint total strengths.
std::optional<double> assortativity_strength(const TradingNetwork& net);

// Mean shortest-path distance over mutually reachable node pairs in the
// undirected simple projection, BFS from every node. Missing when no pair is
// reachable.
std::optional<double> average_path_length(const TradingNetwork& net);

// All five metrics; degenerate networks yield missing fields, never a throw.
NetworkMetrics compute_all(const TradingNetwork& net);

}  // namespace tna
