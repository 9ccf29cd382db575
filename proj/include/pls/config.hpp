#ifndef PLS_CONFIG_HPP
#define PLS_CONFIG_HPP

#include "pls/bits.hpp"
#include "pls/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pls {

/// Local input of one node. Per-port vectors are either empty (feature
/// absent) or sized exactly to the node's degree. A single `marks` vector
/// serves both edge indications (matching) and tree marks, matching the
/// one mark slot per port in the file format.
struct NodeState {
    std::vector<BitString> edge_bits;        // B_v(e) per port, b bits each
    std::vector<bool> marks;                 // I_v(e) / tree mark per port
    std::vector<std::int64_t> flow;          // f(v,u) per port
    std::vector<bool> clique_input;          // clique: is the port an input edge
    std::vector<std::uint64_t> clique_weight; // clique: input-edge weight per port (0 = none)
    bool is_source = false;
    bool is_sink = false;
    std::optional<std::uint64_t> target_k;   // k-MF target value
};

/// A graph plus per-node state: the object a predicate judges. The header
/// constants (id_bits, b, flow_bits, ...) pin all fixed-width encodings so
/// that verifier message formats are reproducible.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(Graph g);

    const Graph& graph() const { return graph_; }
    int n() const { return graph_.node_count(); }
    int m() const { return graph_.edge_count(); }

    NodeState& state(int v) { return states_[v]; }
    const NodeState& state(int v) const { return states_[v]; }

    // Header constants. id_bits/b/flow_bits may be overridden (file header);
    // finalize() derives anything left unset from the contents.
    int id_bits() const { return id_bits_; }
    int b() const { return b_; }
    int flow_bits() const { return flow_bits_; }
    std::uint64_t w_max() const { return w_max_; }
    int max_degree() const { return max_degree_; }

    void set_id_bits(int v) { id_bits_ = v; }
    void set_b(int v) { b_ = v; }
    void set_flow_bits(int v) { flow_bits_ = v; }
    void set_w_max(std::uint64_t v) { w_max_ = v; }
    // Pins the header's max degree above the graph's actual value (used by
    // compositions that must agree on encoding widths with a larger host).
    void set_max_degree(int v) { max_degree_override_ = v; }

    // Derives unset header constants and validates state vector shapes.
    void finalize();

    std::optional<std::uint64_t> port_weight(int v, int port) const;
    std::optional<std::uint64_t> port_capacity(int v, int port) const;

    // Unique source/sink node index, if designated.
    std::optional<int> source() const;
    std::optional<int> sink() const;

private:
    Graph graph_;
    std::vector<NodeState> states_;
    int id_bits_ = 0;
    int b_ = 0;
    int flow_bits_ = 0;
    std::uint64_t w_max_ = 0;
    int max_degree_ = 0;
    int max_degree_override_ = 0;
};

/// Everything a node may legally look at when computing messages and its
/// verdict: its own id, state, incident edge weights/capacities, and the
/// configuration header constants. Locality holds by construction because
/// schemes only ever receive this view.
struct LocalView {
    NodeId id = 0;
    int index = 0;
    int degree = 0;
    const NodeState* state = nullptr;
    std::vector<std::optional<std::uint64_t>> weight;   // per port
    std::vector<std::optional<std::uint64_t>> capacity; // per port
    // header constants (global knowledge)
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int id_bits = 0;
    int b = 0;
    int flow_bits = 0;
    std::uint64_t w_max = 0;
};

LocalView local_view(const Configuration& cfg, int v);

} // namespace pls

#endif // PLS_CONFIG_HPP
