#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/graph_algos.hpp"

namespace ftspan {

/// Enumeration limits for the brute-force checks.  These are explicit
/// configuration so callers can widen them deliberately; the defaults keep
/// every check comfortably in memory and seconds of runtime.
struct OracleBudget {
  long long max_fault_sets = 200000;  // sum of C(m, i) for i <= f
  int max_subset_bits = 16;           // full 2^m subset enumerations
  int max_cyclomatic = 8;             // cycle-space dimension for cycle listing
  long long max_search_nodes = 2000000;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A concrete violation: after deleting fault_edge_ids, the pair (u, v) has
/// dist_sub in the checked subgraph versus dist_full in the reference graph.
struct SpannerWitness {
  std::vector<int> fault_edge_ids;
  int u = -1;
  int v = -1;
  Rat dist_sub;
  Rat dist_full;
};

struct VerificationReport {
  bool pass = true;
  std::string check;   // name of the violated condition when pass is false
  std::string detail;  // human-readable elaboration
  std::optional<SpannerWitness> witness;
  std::optional<CycleWitness> cycle;

  static VerificationReport ok() { return {}; }
};

long long count_fault_sets(int universe, int max_size);

/// Visits subsets of `universe_ids` by cardinality 0..max_size, in colex
/// order within each cardinality.  Stops early when fn returns false.
void for_each_fault_set(const std::vector<int>& universe_ids, int max_size,
                        const std::function<bool(const std::vector<int>&)>& fn);

/// Definition check for fault-tolerant spanners: for every fault set F with
/// |F| <= f and every vertex pair, dist_{H-F} <= k * dist_{G-F}.  Enumerates
/// fault sets over E(G) and short-circuits on the first violation.
VerificationReport is_ft_spanner(const Subgraph& h, const WeightedMultigraph& g, Rat k, int f,
                                 const OracleBudget& budget = {});

/// Definition check for fault-tolerant connectivity preservers: for every
/// fault set F with |F| <= f, Q-F has the same connected components as G-F.
VerificationReport is_preserver_bruteforce(const Subgraph& q, const WeightedMultigraph& g, int f,
                                           const OracleBudget& budget = {});

/// All simple cycles of the subgraph (including 2-cycles of parallel edges),
/// via the cycle space of a spanning forest.  Throws BudgetExceeded when the
/// cyclomatic number exceeds the budget.
std::vector<CycleWitness> enumerate_simple_cycles(const Subgraph& g,
                                                  const OracleBudget& budget = {});

/// Minimum normalized cycle weight w(C)/max-edge(C) over all simple cycles.
GirthResult weighted_girth_bruteforce(const Subgraph& g, const OracleBudget& budget = {});

/// Minimum-weight subgraph passing is_preserver_bruteforce, by full subset
/// enumeration; ties broken toward the lexicographically smallest edge-id
/// set.  Requires m <= budget.max_subset_bits.
Subgraph min_preserver_bruteforce(const WeightedMultigraph& g, int f,
                                  const OracleBudget& budget = {});

}  // namespace ftspan
