#pragma once

#include <cstdint>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/oracles.hpp"

namespace ftspan {

struct PackingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// level edge-capped forests inside a base subgraph Q: every connectivity
/// class of Q at `level` is connected in each forest, and no Q edge is used
/// by more than two forests.
struct ForestPacking {
  int level = 0;
  std::vector<EdgeSet> forests;           // edge ids of Q's parent graph
  std::vector<std::vector<int>> classes;  // level-connectivity classes of Q
};

/// The doubled multigraph: two parallel copies of every Q edge (copies of Q
/// edge e get consecutive ids; origin maps a copy back to e).  Every vertex
/// degree becomes even and every pairwise edge connectivity doubles.
struct DoubledGraph {
  WeightedMultigraph graph;
  std::vector<int> origin;
};

DoubledGraph double_edges(const Subgraph& q);

/// Packs `level` forests covering the level-connectivity classes of q.
/// Tries, in order: spanning-tree packing in the doubled graph via matroid
/// union (exact when one class spans everything), a greedy augmenting
/// search with seeded restarts, and exhaustive search on tiny instances.
/// Every candidate is checked by verify_packing before being returned;
/// throws PackingError when no route produces a verified packing.
ForestPacking pack_forests(const Subgraph& q, int level, uint64_t seed = 0);

/// Checks forest count, containment in Q, acyclicity, per-edge multiplicity
/// <= 2, and class coverage >= level.  Failures name the violated condition
/// and a witness edge or class.
VerificationReport verify_packing(const ForestPacking& p, const Subgraph& q);

/// Forest indices (ascending) that connect the class containing u and v and
/// avoid every forbidden edge.  Both endpoints must lie in one class.  The
/// multiplicity cap makes |result| >= level - 2 * |forbidden  ∩ Q|.
std::vector<int> eligible_hosts(const ForestPacking& p, const Subgraph& q, int u, int v,
                                const EdgeSet& forbidden);

}  // namespace ftspan
