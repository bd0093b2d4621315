#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/packing.hpp"
#include "ftspan/preserver.hpp"
#include "ftspan/rng.hpp"

namespace ftspan {

struct SurvivalEstimate {
  int tree_index = -1;
  int u = 0;
  int v = 0;
  int samples = 0;
  int hits = 0;

  Rat p_hat() const { return samples == 0 ? Rat(0) : Rat(hits, samples); }
};

/// Monte-Carlo estimate of the chance that u and v drift past stretch k in
/// a random subgraph: tree edges are always kept, every id in `extras` is
/// kept independently with probability p_sample.  Draws are keyed by
/// (edge_key, tree_index, sample index, extra id), so the result is a pure
/// function of the seed and the inputs.  `extras` must avoid the tree.
SurvivalEstimate estimate_survival(const Subgraph& tree, const std::vector<int>& extras, int u,
                                   int v, Rat k, Rat w_uv, Rat p_sample, int samples,
                                   const StreamRng& rng, int edge_key, int tree_index);

/// Exact value of the probability estimated above, by enumerating every
/// subset of `extras`.  Limited to |extras| <= 15.
Rat exact_survival_probability(const Subgraph& tree, const std::vector<int>& extras, int u, int v,
                               Rat k, Rat w_uv, Rat p_sample);

/// Sample count used when PolyOptions::samples is unset.
int default_sample_count(int n, double c_const);

struct PolyOptions {
  Rat k = Rat(1);
  int f = 1;
  std::optional<Rat> eta;       // voting variant only
  std::optional<Rat> sample_p;  // default 1 / max(f, 2)
  std::optional<int> samples;   // default ceil(c_const * ln(max(n, 2)))
  double c_const = 384.0;
  Rat threshold = Rat(1, 8);
  DenominatorMode preserver_mode = DenominatorMode::exact;
  uint64_t seed = 0;
  OracleBudget budget;
};

/// Which packed trees made an edge enter the spanner, with the survival
/// estimate each of them reported.
struct HostRecord {
  int edge_id = -1;
  std::vector<int> trees;
  std::vector<Rat> p_hats;
};

struct PolyResult {
  Subgraph h;
  Subgraph q;
  ForestPacking packing;
  std::vector<int> added;  // scan-order ids of E(H) \ Q
  std::vector<HostRecord> host_log;
  int competition_f = 0;
  int votes_needed = 0;  // voting variant; 1 otherwise
  bool preserver_exact = false;
  Rat sample_p{0};
  int samples = 0;
};

/// Sampling-based randomized construction: seed H with a competition-2f
/// preserver Q, pack 2f+1 forests, then scan the remaining edges by
/// (weight, id).  For each scanned edge, trees of its connectivity class
/// are tried in forest order; the first tree whose estimated survival
/// probability reaches the threshold adds the edge and becomes its host.
PolyResult build_poly(const WeightedMultigraph& g, const PolyOptions& opt);

/// Voting variant: Q at competition ceil((2+eta) f), ceil((2+eta) f)+1
/// packed forests, and every tree of the class gets an estimate.  An edge
/// enters when at least ceil(eta f)+1 trees vote (estimate >= threshold);
/// all voting trees become hosts.
PolyResult build_poly_eta(const WeightedMultigraph& g, const PolyOptions& opt);

}  // namespace ftspan
