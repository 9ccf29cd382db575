#ifndef PLS_GRAPH_HPP
#define PLS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

namespace pls {

using NodeId = std::uint32_t;

/// Undirected simple graph with per-node port numbering.
///
/// Nodes carry unique 32-bit identifiers; internally they are indexed
/// 0..n-1 in insertion order. The adjacency list order of a node defines
/// its port numbering: adj(v)[p] is the edge on port p. Edges may carry an
/// optional weight and capacity.
class Graph {
public:
    struct Edge {
        int u, v; // node indices, u < v not required (insertion endpoints)
        std::optional<std::uint64_t> weight;
        std::optional<std::uint64_t> capacity;
    };
    struct PortRef {
        int to;   // neighbor node index
        int edge; // edge index
    };

    int add_node(NodeId id);
    // Endpoints given by node id; both must exist. Returns edge index.
    int add_edge(NodeId u, NodeId v,
                 std::optional<std::uint64_t> weight = std::nullopt,
                 std::optional<std::uint64_t> capacity = std::nullopt);

    // Builds a graph with explicitly ordered adjacency lists: adj_ids[i]
    // names the neighbors of ids[i] in port order. Port orders that no
    // edge-insertion sequence can produce (crossed cliques) are fine here.
    static Graph from_port_lists(const std::vector<NodeId>& ids,
                                 const std::vector<std::vector<NodeId>>& adj_ids);

    int node_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    NodeId id_of(int v) const { return ids_[v]; }
    std::optional<int> index_of(NodeId id) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const PortRef> adj(int v) const { return adj_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    // The endpoint of edge e other than node v.
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
    bool has_edge(int u, int v) const;
    // Port of v on which edge e sits, or -1.
    int port_of_edge(int v, int e) const;

    int max_degree() const;
    NodeId max_id() const;
    bool connected() const;

private:
    std::vector<NodeId> ids_;
    std::unordered_map<NodeId, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<PortRef>> adj_;
    std::set<std::pair<int, int>> edge_set_;
};

/// Min-degree peeling order and the degeneracy it certifies.
struct DegeneracyResult {
    std::vector<int> order; // elimination order, node indices
    int degeneracy = 0;
};

/// Acyclic edge orientation; out_degree is per node index.
struct Orientation {
    // For edge e with endpoints (u, v) as stored: true means oriented u -> v.
    std::vector<bool> from_u;
    std::vector<int> out_degree;
    int max_out_degree = 0;

    bool outgoing(const Graph& g, int v, int e) const {
        return g.edge(e).u == v ? from_u[e] : !from_u[e];
    }
};

struct Coloring {
    std::vector<int> color; // per node index
    int colors_used = 0;    // max color + 1
};

struct ArboricityBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
};

// Matula-Beck min-degree peeling. Among minimum-degree nodes the smallest
// id is removed first, so the ordering (and everything derived from it) is
// deterministic. Throws InvalidParams for the empty graph.
DegeneracyResult degeneracy_ordering(const Graph& g);

// Orients every edge from the earlier to the later endpoint of the peeling
// order. The result is acyclic with max out-degree equal to the degeneracy.
Orientation minimizing_orientation(const Graph& g);

// Greedy coloring in ascending id order where no two nodes at distance 1
// or 2 share a color; uses fewer than max_degree^2 + max_degree + 1 colors.
Coloring distance2_coloring(const Graph& g);

// Bounds from degeneracy (upper = deg, lower = floor(deg/2)+1, zero for
// edgeless graphs); if node_count <= exact_limit also the exact value by
// enumerating all induced subgraphs with at least 2 nodes and taking
// max ceil(m_H / (n_H - 1)).
ArboricityBounds arboricity_bounds(const Graph& g, int exact_limit = 15);

// Number of bits a color broadcast needs for graphs of this max degree.
int color_bits(int max_degree);

// Small constructors used by fixtures and tests. Nodes get ids 0..n-1.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int leaves);
// Random connected graph: spanning tree plus `extra` random edges.
Graph make_random_connected(int n, int extra, std::uint64_t seed);

} // namespace pls

#endif // PLS_GRAPH_HPP
