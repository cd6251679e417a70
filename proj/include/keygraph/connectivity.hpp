#pragma once

#include <cstddef>

#include "keygraph/graph.hpp"

namespace keygraph {

/// Brute-force connectivity refuses graphs larger than this.
inline constexpr std::uint32_t kBruteForceNodeBudget = 12;

/// Smallest degree over all nodes (0 for a single isolated node).
std::size_t min_degree(const Graph& g);

/// True iff one component spans all nodes; a single node counts as connected.
bool is_connected(const Graph& g);

/// Vertex connectivity kappa: the minimum number of nodes whose deletion
/// disconnects the graph. Conventions: 0 for disconnected graphs and for
/// n = 1; n-1 for the complete graph.
///
/// Computed by node-split unit-capacity max-flow: with v a minimum-degree
/// node, kappa is the minimum s-t flow over v against each non-neighbor
/// and over each non-adjacent pair of neighbors of v.
std::size_t vertex_connectivity(const Graph& g);

/// True iff vertex_connectivity(g) >= k. Cheap necessary conditions run
/// first (min degree, then linear-time checks for k = 1, 2); the flow
/// search is entered only for k >= 3 and exits on the first cut below k.
bool is_k_connected(const Graph& g, std::size_t k);

/// Maximum number of internally vertex-disjoint u-v paths (the Menger
/// value); a direct u-v edge counts as one path.
std::size_t count_disjoint_paths(const Graph& g, Graph::Node u, Graph::Node v);

/// True iff deleting `removed` leaves a connected graph on the remaining
/// nodes (a single survivor counts as connected). At least one node must
/// remain.
bool survives_removal(const Graph& g, const NodeSet& removed);

/// Exhaustive kappa over all deletion subsets; test oracle for
/// vertex_connectivity. Throws BudgetExceededError above
/// kBruteForceNodeBudget nodes.
std::size_t brute_force_vertex_connectivity(const Graph& g);

}  // namespace keygraph
