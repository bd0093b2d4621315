#include "ftspan/preserver.hpp"

#include <algorithm>

namespace ftspan {

bool is_preserver_fast(const Subgraph& q, const WeightedMultigraph& g, int f) {
  for (const Edge& e : g.edges()) {
    if (q.contains(e.id)) continue;
    if (pair_edge_connectivity(q, e.u, e.v, f + 1) < f + 1) return false;
  }
  return true;
}

namespace {

struct BnbState {
  const WeightedMultigraph* g;
  int f;
  long long nodes = 0;
  long long node_budget = 0;
  std::vector<int> order;  // edge ids, heaviest (weight, id) first
  EdgeSet best;
  Rat best_weight;
  std::vector<int> best_ids;
  bool have_best = false;

  bool feasible(const EdgeSet& avail) const {
    return is_preserver_fast(Subgraph(*g, avail), *g, f);
  }

  void offer(const EdgeSet& chosen, const Rat& w) {
    std::vector<int> ids = chosen.ids();
    if (!have_best || w < best_weight ||
        (w == best_weight &&
         std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(), best_ids.end()))) {
      best = chosen;
      best_weight = w;
      best_ids = std::move(ids);
      have_best = true;
    }
  }

  // in: committed edges; avail: in plus undecided.  Precondition: avail is
  // feasible.  pos indexes the next decision in `order`.
  void dfs(size_t pos, EdgeSet in, Rat in_weight, EdgeSet avail) {
    if (++nodes > node_budget) {
      throw BudgetExceeded("min_weight_preserver: node budget " + std::to_string(node_budget) +
                           " exhausted");
    }
    // forced-edge closure: an undecided edge whose removal breaks avail can
    // be committed outright, tightening the weight bound
    for (size_t i = pos; i < order.size(); ++i) {
      int id = order[i];
      if (!avail.contains(id) || in.contains(id)) continue;
      avail.erase(id);
      bool ok = feasible(avail);
      avail.insert(id);
      if (!ok) {
        in.insert(id);
        in_weight += g->edge(id).w;
      }
    }
    if (have_best && best_weight < in_weight) return;
    size_t next = pos;
    while (next < order.size() && (!avail.contains(order[next]) || in.contains(order[next]))) {
      ++next;
    }
    if (next == order.size()) {
      offer(in, in_weight);
      return;
    }
    int id = order[next];
    // exclude first: light solutions surface early and sharpen the bound
    EdgeSet without = avail;
    without.erase(id);
    if (feasible(without)) dfs(next + 1, in, in_weight, without);
    if (!have_best || in_weight + g->edge(id).w <= best_weight) {
      EdgeSet in2 = in;
      in2.insert(id);
      dfs(next + 1, std::move(in2), in_weight + g->edge(id).w, std::move(avail));
    }
  }
};

}  // namespace

Subgraph min_weight_preserver(const WeightedMultigraph& g, int f, const OracleBudget& budget) {
  if (f == 0) return Subgraph(g, mst(g));
  BnbState s;
  s.g = &g;
  s.f = f;
  s.node_budget = budget.max_search_nodes;
  s.order.resize(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) s.order[i] = i;
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return edge_order_less(g.edge(b).w, b, g.edge(a).w, a);
  });
  s.dfs(0, EdgeSet(g.edge_count()), Rat(0), EdgeSet::full(g.edge_count()));
  return Subgraph(g, s.best);
}

Subgraph heuristic_preserver(const WeightedMultigraph& g, int f) {
  std::vector<int> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return edge_order_less(g.edge(b).w, b, g.edge(a).w, a);
  });
  Subgraph q = Subgraph::full(g);
  for (int id : order) {
    q.edges.erase(id);
    if (!is_preserver_fast(q, g, f)) q.edges.insert(id);
  }
  return q;
}

CompetitiveLightness competitive_lightness(const Subgraph& h, const WeightedMultigraph& g, int f,
                                           DenominatorMode mode, const OracleBudget& budget) {
  Subgraph q(g, EdgeSet(g.edge_count()));
  bool exact = false;
  if (f == 0) {
    q.edges = mst(g);
    exact = true;
  } else if (mode == DenominatorMode::exact) {
    try {
      q = min_weight_preserver(g, f, budget);
      exact = true;
    } catch (const BudgetExceeded&) {
      q = heuristic_preserver(g, f);
    }
  } else {
    q = heuristic_preserver(g, f);
  }
  Rat denom = q.weight();
  if (!(denom > Rat(0))) throw InputError("competitive lightness needs a nonempty baseline");
  return CompetitiveLightness{h.weight() / denom, denom, exact};
}

}  // namespace ftspan
