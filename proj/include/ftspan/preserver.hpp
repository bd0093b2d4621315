#pragma once

#include "ftspan/graph.hpp"
#include "ftspan/graph_algos.hpp"
#include "ftspan/oracles.hpp"

namespace ftspan {

/// Polynomial feasibility test: Q preserves the components of G under up to
/// f edge faults iff every non-Q edge (u, v) keeps u and v at edge
/// connectivity >= f + 1 inside Q.
bool is_preserver_fast(const Subgraph& q, const WeightedMultigraph& g, int f);

/// Exact minimum-weight f-fault connectivity preserver by branch and bound
/// (heaviest-edge decisions, exclude branch first, forced-edge closure at
/// every node).  Ties go to the lexicographically smallest edge-id set.
/// Throws BudgetExceeded when the node budget runs out.
Subgraph min_weight_preserver(const WeightedMultigraph& g, int f, const OracleBudget& budget = {});

/// Reverse-delete: drop edges heaviest-first whenever feasibility survives.
/// The result is inclusion-minimal but not necessarily minimum weight.
Subgraph heuristic_preserver(const WeightedMultigraph& g, int f);

enum class DenominatorMode { exact, heuristic };

struct CompetitiveLightness {
  Rat value;
  Rat denominator;        // weight of the preserver used as the baseline
  bool denominator_exact; // false when the heuristic stood in for the optimum
};

/// w(H) divided by the weight of a minimum (or heuristic) f-fault preserver
/// of G.  In exact mode a blown budget silently degrades to the heuristic
/// denominator and reports denominator_exact = false.
CompetitiveLightness competitive_lightness(const Subgraph& h, const WeightedMultigraph& g, int f,
                                           DenominatorMode mode = DenominatorMode::exact,
                                           const OracleBudget& budget = {});

}  // namespace ftspan
