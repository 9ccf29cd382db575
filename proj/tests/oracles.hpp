#ifndef PLS_TEST_ORACLES_HPP
#define PLS_TEST_ORACLES_HPP

// Brute-force oracles for tests. These deliberately take different
// algorithmic routes than the library (subset DP instead of peeling,
// exhaustive color search instead of greedy, recursive augmentation
// instead of BFS) so that agreement is meaningful.

#include "pls/graph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace pls::testing {

// Degeneracy as min over all elimination orders of the max degree at
// removal, computed by DP over vertex subsets. Needs n <= ~20.
int brute_degeneracy(const Graph& g);

// Smallest number of colors in any coloring where no two nodes at
// distance 1 or 2 share a color. Exponential; keep n and colors small.
int brute_distance2_chromatic(const Graph& g);

// Max s-t flow by repeated DFS augmentation on an explicit residual
// matrix. Capacities per edge from the graph.
std::uint64_t brute_max_flow(const Graph& g, int s, int t);

// All spanning trees' minimum total weight per connected component,
// by enumerating edge subsets. Needs edge_count <= ~20.
// Returns the minimum weight of a spanning forest with one tree per
// component (i.e., the MST weight), or nullopt when the graph is empty.
std::uint64_t brute_msf_weight(const Graph& g);

// Whether a given edge set (by edge index) is a spanning forest with one
// tree per connected component of g.
bool is_spanning_forest_per_component(const Graph& g, const std::vector<bool>& in_set);

// Number of (possibly empty) matchings over the marked-edge encoding:
// counts subsets of edges forming a matching. Used for the fixture
// counting checks.
std::uint64_t count_matchings(const Graph& g);

} // namespace pls::testing

#endif // PLS_TEST_ORACLES_HPP
