#pragma once

#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/greedy.hpp"
#include "ftspan/packing.hpp"
#include "ftspan/rng.hpp"

namespace ftspan {

enum class HostMode { single, all_eligible, q_light_heavy };

struct HostAssignment {
  int edge_id = -1;
  std::vector<int> trees;  // hosting forest indices, ascending
  bool q_heavy = false;    // only meaningful under q_light_heavy
  int q_partners = 0;      // blocking partners that lie in Q
};

struct HostGraphs {
  HostMode mode = HostMode::single;
  std::vector<Subgraph> graphs;          // per forest index: forest plus hosted edges
  std::vector<HostAssignment> assigned;  // one entry per edge of H outside Q, id order
  int heavy_threshold = 0;               // q_partners >= threshold marks an edge heavy
  Rat light_p{0};                        // replay probability for the light split
  Rat heavy_p{0};                        // reduced probability for the heavy split
};

/// Distributes every edge of H outside Q to host forests that avoid all of
/// its blocking partners: the lowest eligible forest (single), every
/// eligible forest (all_eligible), or single for heavy edges and every
/// eligible forest for light ones (q_light_heavy, heavy meaning at least
/// f - floor(sqrt(f)) partners inside Q).  Throws PackingError when an
/// edge has no eligible forest.
HostGraphs build_host_graphs(const Subgraph& h, const Subgraph& q, const BlockingSet& b,
                             const ForestPacking& p, HostMode mode);

struct Chain {
  Subgraph h1, h2, h3;
};

/// One replay of the random chain: H1 keeps the tree and samples every
/// other host-graph edge with probability p; H2 deletes the first edge of
/// each blocking pair fully present in H1; H3 drops tree edges outside
/// mst(H2).  Draws are keyed by (trial, edge id).
Chain subsample_chain(const Subgraph& ht, const Subgraph& t, const BlockingSet& b, Rat p,
                      const StreamRng& rng, uint64_t trial = 0);

/// Pass iff the weighted girth of h3 exceeds k + 1; failures carry the
/// offending cycle.
VerificationReport check_chain_girth(const Subgraph& h3, Rat k);

/// Probability that a sampled (non-tree) edge of HT reaches H2: it must be
/// drawn and no blocking partner inside HT may be drawn.  Partner draws
/// are independent, so enumerating their states collapses to a product.
Rat exact_survival_in_chain(const Subgraph& ht, const Subgraph& t, const BlockingSet& b, Rat p,
                            int edge_id);

struct ChainWeightStats {
  int trials = 0;
  Rat mean_h2{0};
  Rat mean_h3{0};
  Rat w_ht{0};
  Rat w_t{0};
  Rat reference{0};            // w(HT) * p - w(T)
  std::vector<int> h2_counts;  // per edge id: trials in which it reached H2
};

/// Replays the chain `trials` times, aggregating weights and per-edge
/// survival counts.
ChainWeightStats measure_chain_weight(const Subgraph& ht, const Subgraph& t, const BlockingSet& b,
                                      Rat p, int trials, const StreamRng& rng);

int isqrt_floor(int x);
int isqrt_ceil(int x);

}  // namespace ftspan
