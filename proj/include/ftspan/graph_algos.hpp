#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

/// Exact shortest-path distance between u and v inside the subgraph,
/// Rat::infinity() when v is unreachable.
Rat dist(const Subgraph& g, int u, int v);

/// Distances from source to every vertex.
std::vector<Rat> dist_from(const Subgraph& g, int source);

struct PathResult {
  Rat length;                 // infinity when no path exists
  std::vector<int> edge_ids;  // in walk order from u to v
};

/// Deterministic shortest path (ties resolved by scanning incident edges in
/// ascending id order).
PathResult shortest_path(const Subgraph& g, int u, int v);

/// Kruskal forest over the subgraph's edges in (weight, id) order.  On a
/// disconnected subgraph this is the minimum spanning forest.
EdgeSet mst(const Subgraph& g);
inline EdgeSet mst(const WeightedMultigraph& g) { return mst(Subgraph::full(g)); }

/// Vertex partition into connected components; classes are sorted by their
/// smallest vertex and internally ascending.
std::vector<std::vector<int>> components(const Subgraph& g);

/// Component label per vertex (labels are the component's smallest vertex).
std::vector<int> component_labels(const Subgraph& g);

bool is_connected(const Subgraph& g);
inline bool is_connected(const WeightedMultigraph& g) { return is_connected(Subgraph::full(g)); }

/// Maximum number of pairwise edge-disjoint u-v paths (unit-capacity max
/// flow; parallel edges count separately).  When cap_limit >= 0 the search
/// stops once the flow reaches cap_limit.
int pair_edge_connectivity(const Subgraph& g, int u, int v, int cap_limit = -1);

/// Partition of the vertices into classes of the transitive "edge
/// connectivity >= c" relation.  c must be >= 1.
std::vector<std::vector<int>> connectivity_classes(const Subgraph& g, int c);

struct GirthResult {
  Rat value;  // min over simple cycles of w(C)/max-edge(C); infinity on forests
  std::optional<CycleWitness> witness;
};

/// Weighted girth via one bounded shortest-path query per candidate maximum
/// edge: for each edge e, the best cycle whose (weight, id)-largest edge is e
/// is e plus the shortest u-v path among strictly (weight, id)-smaller edges.
GirthResult weighted_girth(const Subgraph& g);

/// w(H) / w(mst(G)).  G must be connected.
Rat lightness(const Subgraph& h, const WeightedMultigraph& g);

}  // namespace ftspan
