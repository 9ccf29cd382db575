#ifndef PLS_FLOW_HPP
#define PLS_FLOW_HPP

#include "pls/graph.hpp"

#include <cstdint>
#include <vector>

namespace pls {

/// Integral s-t flow on a capacitated undirected graph. flow[e] is the
/// amount routed from edge(e).u toward edge(e).v (negative for the other
/// direction); |flow[e]| <= capacity(e).
struct FlowResult {
    std::uint64_t value = 0;
    std::vector<std::int64_t> flow; // per edge index
    std::vector<bool> source_side;  // residual reachability from s (min cut Z)
};

// Shortest-augmenting-path max flow (BFS in the residual graph). Edge
// capacities default to 0 when absent.
FlowResult max_flow(const Graph& g, int s, int t);

// Signed flow from v toward the neighbor on `port`.
std::int64_t flow_at_port(const Graph& g, const std::vector<std::int64_t>& flow, int v, int port);

// Removes positive-flow cycles (DFS on the positive-flow digraph) so the
// flow decomposes into s-t paths only; value is unchanged.
void cancel_flow_cycles(const Graph& g, std::vector<std::int64_t>& flow, int s, int t);

} // namespace pls

#endif // PLS_FLOW_HPP
