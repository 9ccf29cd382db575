#ifndef PLS_CLIQUE_HPP
#define PLS_CLIQUE_HPP

#include "pls/engine.hpp"

#include <cstdint>
#include <vector>

namespace pls {

/// An n-clique communication network hosting an input graph. Every node has
/// n-1 ports; the port wiring (which node sits behind which port) is part
/// of the configuration and is what crossing rewires. All input data
/// (membership bit, weight, tree mark) is attached to ports, so crossing
/// never changes any node's state.
class CliqueConfiguration {
public:
    struct Port {
        int peer = -1;      // node index behind this port
        int peer_port = -1; // the matching port index at the peer
        bool input = false; // is the communication edge an input edge
        std::uint64_t weight = 0;
        bool in_tree = false;
    };

    CliqueConfiguration() = default;
    // Canonical wiring: port p of node i leads to the p-th other node in
    // ascending id order.
    CliqueConfiguration(std::vector<NodeId> ids, std::uint64_t w_max);

    int n() const { return static_cast<int>(ids_.size()); }
    NodeId id_of(int v) const { return ids_[v]; }
    std::uint64_t w_max() const { return w_max_; }

    Port& port(int v, int p) { return ports_[v][p]; }
    const Port& port(int v, int p) const { return ports_[v][p]; }
    int port_to(int v, int u) const; // port of v wired to node u, or -1

    // Declares {u, v} an input edge with optional weight/tree mark.
    void set_input_edge(int u, int v, std::uint64_t weight = 0, bool in_tree = false);
    void set_tree_mark(int u, int v, bool in_tree);

    bool has_input_edge(int u, int v) const;
    // Consistency of the wiring and of input bits across endpoints.
    void validate() const;

    bool operator==(const CliqueConfiguration&) const = default;

private:
    std::vector<NodeId> ids_;
    std::vector<std::vector<Port>> ports_;
    std::uint64_t w_max_ = 0;
};

/// An oriented input edge (v, u) with its two port numbers.
struct OrientedEdge {
    int v = -1, u = -1;   // node indices, oriented v -> u
    int pv = -1, pu = -1; // ports of the edge at v and at u
};

// Are e1 and e2 independent: four distinct endpoints and neither crossed
// counterpart is an input edge.
bool independent(const CliqueConfiguration& cfg, const OrientedEdge& e1, const OrientedEdge& e2);

// Port-preserving crossing: replaces e1=(v1,u1), e2=(v2,u2) by (v1,u2) and
// (v2,u1) on the same ports, leaving every node's state untouched.
// Throws NotIndependent.
CliqueConfiguration cross(const CliqueConfiguration& cfg, const OrientedEdge& e1,
                          const OrientedEdge& e2);

// Greedy pairwise-independent oriented-edge selection (ascending edge order,
// each edge oriented from smaller to larger id). Returns at most `limit`
// edges when limit > 0, possibly fewer than asked.
std::vector<OrientedEdge> find_independent_edges(const CliqueConfiguration& cfg, int limit = 0);

// Engine configuration over the complete communication graph: per-port
// input bits, weights and tree marks become node state.
Configuration clique_engine_config(const CliqueConfiguration& cfg);

// Broadcast-clique MST verification: parent pointers in the labels, global
// reconstruction of the claimed tree, and the red rule checked on every
// incident non-tree input edge.
Scheme build_mst_broadcast_clique();

/// Demo transformer used by the crossing attack: messages are truncated to
/// `bits` bits and the decision is replaced by "every port shows exactly
/// the truncated message recorded in my label". Accepts whatever the base
/// prover labeled, and is sensitive only to the bits that still flow.
Scheme truncate_broadcast_scheme(const Scheme& base, int bits);

} // namespace pls

#endif // PLS_CLIQUE_HPP
