#pragma once

// Delta-Y / Y-Delta exchanges and the closure of K7 under them, up to
// isomorphism. Both moves preserve the edge count.

#include <array>
#include <optional>
#include <vector>

#include "smallgraph/graph.hpp"

namespace smallgraph {

// Replace triangle t's edges by a fresh degree-3 vertex (label max+1,
// i.e. n+1 for graphs labeled 1..n) joined to t's vertices.
Graph delta_y(const Graph& g, const std::array<int, 3>& triangle_labels);

// Remove a degree-3 vertex and join its neighbors pairwise. Returns
// nullopt (inapplicable) when some neighbor pair is already adjacent,
// which would need a parallel edge. Throws if the degree is not 3.
std::optional<Graph> y_delta(const Graph& g, int vertex_label);

// All triangles as sorted label triples, sorted.
std::vector<std::array<int, 3>> triangles(const Graph& g);

// Isomorphism-class representatives of the closure of {K7} under both
// exchanges, in BFS discovery order, each relabeled to 1..n.
std::vector<Graph> k7_family();

}  // namespace smallgraph
