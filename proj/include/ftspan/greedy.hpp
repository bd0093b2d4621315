#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/oracles.hpp"
#include "ftspan/preserver.hpp"

namespace ftspan {

/// Ordered pairs (added edge, fault partner).  At most `cap` partners per
/// first edge, and first edges never lie in the deterministic base Q.
struct BlockingSet {
  int cap = 0;
  std::vector<std::pair<int, int>> pairs;

  std::vector<int> partners_of(int first) const;
};

/// Smallest fault set F (|F| <= f, colex-smallest among the minimum
/// cardinality) with dist_{h-F}(u, v) > k * w_uv, or nothing if every such
/// F keeps the pair within stretch.  Edges in `off_limits` are never
/// faulted.  The search branches on edges of current shortest paths, which
/// reaches every minimal witness.
std::optional<std::vector<int>> find_blocking_fault_set(const Subgraph& h, int u, int v, Rat k,
                                                        Rat w_uv, int f,
                                                        const OracleBudget& budget = {},
                                                        const EdgeSet* off_limits = nullptr);

struct GreedyOptions {
  Rat k = Rat(1);
  int f = 0;
  // preserver competition level: 2f by default, ceil((2+eta) f) when eta set
  std::optional<Rat> eta;
  DenominatorMode preserver_mode = DenominatorMode::exact;
  OracleBudget budget;
};

struct GreedyResult {
  Subgraph h;
  Subgraph q;
  BlockingSet blocks;
  std::vector<int> added;  // scan-order ids of E(H) \ Q
  int competition_f = 0;
  bool preserver_exact = false;  // false when the heuristic stood in
};

/// Fault-tolerant greedy: seed H with a competition-level preserver Q, scan
/// the remaining edges in (weight, id) order, and add an edge exactly when
/// some fault set of size <= f pushes its endpoints beyond stretch k in the
/// current H.  Witnesses are recorded as blocking pairs.
GreedyResult build_greedy(const WeightedMultigraph& g, const GreedyOptions& opt);

/// Checks the blocking-set contract: the per-first-edge cap, first edges
/// outside Q, membership in H, and that every simple cycle of H with
/// normalized weight <= k+1 whose (weight, id)-largest non-Q edge is among
/// its heaviest edges contains both ends of some pair.
VerificationReport check_blocking_set(const BlockingSet& b, const Subgraph& h, const Subgraph& q,
                                      Rat k, const OracleBudget& budget = {});

int competition_level(int f, const std::optional<Rat>& eta);

}  // namespace ftspan
