#ifndef PLS_SCHEMES_HPP
#define PLS_SCHEMES_HPP

#include "pls/engine.hpp"
#include "pls/flow.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace pls {

/// Symmetric predicate over pairs of b-bit strings.
struct PsiPredicate {
    int b = 1;
    std::string name;
    std::function<bool(const BitString&, const BitString&)> fn;
};

PsiPredicate psi_equality(int b);
// psi(x, y) iff the two's-complement values satisfy val(x) == -val(y).
PsiPredicate psi_antisymmetry(int b);

// Broadcast verification of a distance-2 coloring used for addressing.
Scheme build_color_addressing();

// Matching verification in the broadcast model: composes color addressing
// with a marked-neighbor-color announcement.
Scheme build_mv_broadcast();

// Edge-psi verification: for r >= 2*degeneracy the plain orientation scheme
// (raw b-bit strings on outgoing edges), otherwise color addressing plus a
// minimizing orientation with pair lists split into r parts.
Scheme build_edge_psi(PsiPredicate psi, int r);

// Edge agreement: edge-psi with equality.
Scheme build_ea(int b, int r);

// Maximum-flow verification: a cut bit plus edge-psi antisymmetry over the
// state's flow values; the verifier checks capacity compliance, flow
// conservation and cut saturation.
Scheme build_mf(int r);

// k-maximum-flow: prover-assigned acyclic flow in the labels, a broadcast
// of k, and flow values verified only across nonzero edges.
Scheme build_kmf(std::uint64_t k, int r);

// Edge agreement built on top of a max-flow scheme: BFS tree, per-edge
// excess convergecast, and a simulated source/sink pair at the root.
Scheme ea_from_mf_reduction(const Scheme& mf_scheme, int b);

// Classic root/parent/distance spanning-tree verification (broadcast).
Scheme build_spanning_tree_baseline();

enum class Problem {
    ColorAddressing,
    MatchingVerification,
    EdgeAgreement,
    MaxFlow,
    KMaxFlow,
    SpanningTree,
    MstClique,
};

Problem problem_from_name(const std::string& name); // throws UnknownProblem

struct BoundParams {
    int b = 0;
    std::uint64_t k = 0;
    std::uint64_t f_max = 0;
    std::uint64_t w_max = 0;
    int id_bits = 0; // defaults to bit_width(max id of graph)
    int n = 0;       // defaults to graph node count
};

struct BoundReport {
    std::size_t bits = 0;
    std::string formula;
};

/// Closed-form upper bound on the message length this library's encodings
/// produce for a problem on a given graph, with alpha estimated by the
/// degeneracy. Reporting aid, never a correctness gate.
BoundReport theoretical_bound(Problem problem, const Graph& g, int r, const BoundParams& params);

/// Internals of the EA-from-MF prover, exposed for direct numeric checks.
struct ReductionWitness {
    int root = 0;
    std::vector<int> parent;                      // node index, -1 at root
    std::vector<int> depth;
    std::vector<std::int64_t> excess;             // X(v)
    std::vector<std::int64_t> subtree_excess;     // X(T_v)
    std::vector<std::vector<std::int64_t>> flows; // per node, per port
    Configuration inner;                          // the simulated flow instance
};
ReductionWitness ea_mf_reduction_witness(const Configuration& cfg, int b);

} // namespace pls

#endif // PLS_SCHEMES_HPP
