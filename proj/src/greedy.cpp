#include "ftspan/greedy.hpp"

#include <algorithm>
#include <set>

namespace ftspan {

std::vector<int> BlockingSet::partners_of(int first) const {
  std::vector<int> out;
  for (const auto& [a, b] : pairs) {
    if (a == first) out.push_back(b);
  }
  return out;
}

int competition_level(int f, const std::optional<Rat>& eta) {
  if (!eta) return 2 * f;
  if (*eta <= Rat(0)) throw InputError("eta must be positive");
  Rat level = (Rat(2) + *eta) * Rat(f);
  long long whole = level.num() / level.den();
  if (Rat(whole) < level) ++whole;  // ceiling; rounding up only strengthens Q
  return static_cast<int>(whole);
}

std::optional<std::vector<int>> find_blocking_fault_set(const Subgraph& h, int u, int v, Rat k,
                                                        Rat w_uv, int f,
                                                        const OracleBudget& budget,
                                                        const EdgeSet* off_limits) {
  Rat bound = k * w_uv;
  long long nodes = 0;
  std::optional<std::vector<int>> best;

  for (int target = 0; target <= f; ++target) {
    std::set<std::vector<int>> seen;
    std::function<void(std::vector<int>&)> dfs = [&](std::vector<int>& fault) {
      if (++nodes > budget.max_search_nodes) {
        throw BudgetExceeded("find_blocking_fault_set: node budget exhausted");
      }
      Subgraph hf = h;
      for (int id : fault) hf.edges.erase(id);
      PathResult p = shortest_path(hf, u, v);
      if (p.length > bound) {
        if (static_cast<int>(fault.size()) == target) {
          if (!best || colex_less(fault, *best)) best = fault;
        }
        return;  // violating already; smaller witnesses were handled earlier
      }
      if (static_cast<int>(fault.size()) == target) return;
      // every witness extending `fault` must hit the current short path
      std::vector<int> branch = p.edge_ids;
      std::sort(branch.begin(), branch.end());
      for (int id : branch) {
        if (off_limits && off_limits->contains(id)) continue;
        std::vector<int> next = fault;
        next.insert(std::lower_bound(next.begin(), next.end(), id), id);
        if (!seen.insert(next).second) continue;
        dfs(next);
      }
    };
    std::vector<int> start;
    dfs(start);
    if (best) return best;
  }
  return std::nullopt;
}

GreedyResult build_greedy(const WeightedMultigraph& g, const GreedyOptions& opt) {
  if (opt.f < 0) throw InputError("fault bound must be >= 0");
  if (opt.k < Rat(1)) throw InputError("stretch must be >= 1");
  GreedyResult r;
  r.competition_f = competition_level(opt.f, opt.eta);
  if (opt.preserver_mode == DenominatorMode::exact) {
    try {
      r.q = min_weight_preserver(g, r.competition_f, opt.budget);
      r.preserver_exact = true;
    } catch (const BudgetExceeded&) {
      r.q = heuristic_preserver(g, r.competition_f);
    }
  } else {
    r.q = heuristic_preserver(g, r.competition_f);
  }
  r.h = r.q;
  r.blocks.cap = opt.f;

  std::vector<int> scan;
  for (const Edge& e : g.edges()) {
    if (!r.q.contains(e.id)) scan.push_back(e.id);
  }
  std::sort(scan.begin(), scan.end(), [&](int a, int b) {
    return edge_order_less(g.edge(a).w, a, g.edge(b).w, b);
  });
  for (int id : scan) {
    const Edge& e = g.edge(id);
    auto witness = find_blocking_fault_set(r.h, e.u, e.v, opt.k, e.w, opt.f, opt.budget);
    if (!witness) continue;
    r.h.edges.insert(id);
    r.added.push_back(id);
    for (int partner : *witness) r.blocks.pairs.emplace_back(id, partner);
  }
  return r;
}

VerificationReport check_blocking_set(const BlockingSet& b, const Subgraph& h, const Subgraph& q,
                                      Rat k, const OracleBudget& budget) {
  const WeightedMultigraph& g = *h.parent;
  VerificationReport r;
  auto fail = [&](const std::string& check, const std::string& detail) {
    r.pass = false;
    r.check = check;
    r.detail = detail;
    return r;
  };
  std::vector<int> first_count(g.edge_count(), 0);
  for (const auto& [e1, e2] : b.pairs) {
    if (!h.contains(e1) || !h.contains(e2)) {
      return fail("membership", "pair (" + std::to_string(e1) + ", " + std::to_string(e2) +
                                    ") leaves the spanner");
    }
    if (q.contains(e1)) {
      return fail("first-outside-base", "first edge " + std::to_string(e1) + " is a base edge");
    }
    if (++first_count[e1] > b.cap) {
      return fail("cap", "edge " + std::to_string(e1) + " heads more than " +
                             std::to_string(b.cap) + " pairs");
    }
  }
  for (const CycleWitness& c : enumerate_simple_cycles(h, budget)) {
    if (c.normalized_weight() > k + Rat(1)) continue;
    // the cycle only needs blocking when its (weight, id)-largest edge
    // outside the base is one of its heaviest edges
    int outside = -1;
    for (int id : c.edge_ids) {
      if (q.contains(id)) continue;
      if (outside < 0 || edge_order_less(g.edge(outside).w, outside, g.edge(id).w, id)) {
        outside = id;
      }
    }
    if (outside < 0 || g.edge(outside).w != c.max_edge_weight) continue;
    EdgeSet members(g.edge_count());
    for (int id : c.edge_ids) members.insert(id);
    bool blocked = false;
    for (const auto& [e1, e2] : b.pairs) {
      if (members.contains(e1) && members.contains(e2)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      r.pass = false;
      r.check = "unblocked-cycle";
      r.detail = "normalized weight " + c.normalized_weight().str();
      r.cycle = c;
      return r;
    }
  }
  return r;
}

}  // namespace ftspan
