#include "ftspan/oracles.hpp"

#include <algorithm>
#include <map>

namespace ftspan {

long long count_fault_sets(int universe, int max_size) {
  long long total = 0;
  long long binom = 1;
  for (int i = 0; i <= std::min(max_size, universe); ++i) {
    total += binom;
    if (total > (1LL << 62) / 2) return 1LL << 62;
    binom = binom * (universe - i) / (i + 1);
  }
  return total;
}

void for_each_fault_set(const std::vector<int>& universe_ids, int max_size,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  int m = static_cast<int>(universe_ids.size());
  max_size = std::min(max_size, m);
  std::vector<int> sorted = universe_ids;
  std::sort(sorted.begin(), sorted.end());

  // Iterative colex enumeration per cardinality: indices i_0 < .. < i_{s-1},
  // advanced in colex order (rightmost position grows last).
  for (int s = 0; s <= max_size; ++s) {
    if (s == 0) {
      if (!fn({})) return;
      continue;
    }
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> subset(s);
      for (int i = 0; i < s; ++i) subset[i] = sorted[idx[i]];
      if (!fn(subset)) return;
      // next subset in colex order: bump the lowest index that can move
      // without touching the ones above it
      int j = 0;
      while (j + 1 < s && idx[j] + 1 == idx[j + 1]) ++j;
      if (j == s - 1 && idx[j] + 1 == m) break;
      ++idx[j];
      for (int i = 0; i < j; ++i) idx[i] = i;
    }
  }
}

namespace {

void check_fault_budget(int universe, int f, const OracleBudget& budget, const char* who) {
  long long need = count_fault_sets(universe, f);
  if (need > budget.max_fault_sets) {
    throw BudgetExceeded(std::string(who) + ": " + std::to_string(need) +
                         " fault sets exceed budget " + std::to_string(budget.max_fault_sets));
  }
}

}  // namespace

VerificationReport is_ft_spanner(const Subgraph& h, const WeightedMultigraph& g, Rat k, int f,
                                 const OracleBudget& budget) {
  check_fault_budget(g.edge_count(), f, budget, "is_ft_spanner");
  std::vector<int> universe(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) universe[i] = i;

  VerificationReport report;
  for_each_fault_set(universe, f, [&](const std::vector<int>& fault) {
    Subgraph gf(g, EdgeSet::full(g.edge_count()));
    Subgraph hf(g, h.edges);
    for (int id : fault) {
      gf.edges.erase(id);
      hf.edges.erase(id);
    }
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      std::vector<Rat> dg = dist_from(gf, u);
      std::vector<Rat> dh = dist_from(hf, u);
      for (int v = u + 1; v < n; ++v) {
        if (!dg[v].is_finite()) continue;
        if (dh[v] > k * dg[v]) {
          report.pass = false;
          report.check = "stretch";
          report.witness = SpannerWitness{fault, u, v, dh[v], dg[v]};
          report.detail = "dist exceeds " + k.str() + " * base distance under " +
                          std::to_string(fault.size()) + " faults";
          return false;
        }
      }
    }
    return true;
  });
  return report;
}

VerificationReport is_preserver_bruteforce(const Subgraph& q, const WeightedMultigraph& g, int f,
                                           const OracleBudget& budget) {
  check_fault_budget(g.edge_count(), f, budget, "is_preserver_bruteforce");
  std::vector<int> universe(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) universe[i] = i;

  VerificationReport report;
  for_each_fault_set(universe, f, [&](const std::vector<int>& fault) {
    Subgraph gf(g, EdgeSet::full(g.edge_count()));
    Subgraph qf(g, q.edges);
    for (int id : fault) {
      gf.edges.erase(id);
      qf.edges.erase(id);
    }
    std::vector<int> lg = component_labels(gf);
    std::vector<int> lq = component_labels(qf);
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        // Q is a subgraph of G, so only the "connected in G, split in Q"
        // direction can fail.
        if (lg[u] == lg[v] && lq[u] != lq[v]) {
          report.pass = false;
          report.check = "connectivity";
          report.witness = SpannerWitness{fault, u, v, Rat::infinity(), dist(gf, u, v)};
          report.detail = "pair split by " + std::to_string(fault.size()) + " faults";
          return false;
        }
      }
    }
    return true;
  });
  return report;
}

namespace {

std::optional<CycleWitness> order_cycle(const WeightedMultigraph& g, const EdgeSet& edges) {
  std::vector<int> ids = edges.ids();
  if (ids.size() < 2) return std::nullopt;
  std::map<int, std::vector<int>> incident;
  for (int id : ids) {
    incident[g.edge(id).u].push_back(id);
    incident[g.edge(id).v].push_back(id);
  }
  for (auto& [v, inc] : incident) {
    if (inc.size() != 2) return std::nullopt;
  }
  // walk the cycle starting at the smallest edge id
  CycleWitness w;
  w.total_weight = Rat(0);
  w.max_edge_weight = Rat(0);
  int start_edge = ids.front();
  int start = g.edge(start_edge).u;
  int at = start;
  int via = start_edge;
  do {
    const Edge& e = g.edge(via);
    w.edge_ids.push_back(via);
    w.total_weight += e.w;
    if (w.max_edge_weight < e.w) w.max_edge_weight = e.w;
    at = e.other(at);
    const auto& inc = incident.at(at);
    via = inc[0] == via ? inc[1] : inc[0];
  } while (at != start && w.edge_ids.size() <= ids.size());
  if (at != start || w.edge_ids.size() != ids.size()) return std::nullopt;
  return w;
}

}  // namespace

std::vector<CycleWitness> enumerate_simple_cycles(const Subgraph& g, const OracleBudget& budget) {
  const WeightedMultigraph& G = *g.parent;
  // spanning forest by ascending edge id; the rest generate the cycle space
  EdgeSet forest(G.edge_count());
  {
    std::vector<int> label(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v) label[v] = v;
    std::function<int(int)> find = [&](int x) {
      while (label[x] != x) x = label[x] = label[label[x]];
      return x;
    };
    for (int id : g.edges.ids()) {
      int a = find(G.edge(id).u), b = find(G.edge(id).v);
      if (a != b) {
        label[std::max(a, b)] = std::min(a, b);
        forest.insert(id);
      }
    }
  }
  std::vector<int> chords;
  for (int id : g.edges.ids()) {
    if (!forest.contains(id)) chords.push_back(id);
  }
  int k = static_cast<int>(chords.size());
  if (k > budget.max_cyclomatic) {
    throw BudgetExceeded("enumerate_simple_cycles: cyclomatic number " + std::to_string(k) +
                         " exceeds budget " + std::to_string(budget.max_cyclomatic));
  }
  std::vector<EdgeSet> fundamental;
  Subgraph forest_sub(G, forest);
  for (int id : chords) {
    PathResult p = shortest_path(forest_sub, G.edge(id).u, G.edge(id).v);
    EdgeSet cyc(G.edge_count());
    for (int pe : p.edge_ids) cyc.insert(pe);
    cyc.insert(id);
    fundamental.push_back(cyc);
  }
  std::vector<CycleWitness> out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
    EdgeSet acc(G.edge_count());
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) acc ^= fundamental[i];
    }
    if (auto w = order_cycle(G, acc)) out.push_back(std::move(*w));
  }
  return out;
}

GirthResult weighted_girth_bruteforce(const Subgraph& g, const OracleBudget& budget) {
  GirthResult best{Rat::infinity(), std::nullopt};
  for (CycleWitness& c : enumerate_simple_cycles(g, budget)) {
    Rat value = c.normalized_weight();
    if (!best.witness || value < best.value) {
      best.value = value;
      best.witness = std::move(c);
    }
  }
  return best;
}

Subgraph min_preserver_bruteforce(const WeightedMultigraph& g, int f, const OracleBudget& budget) {
  int m = g.edge_count();
  if (m > budget.max_subset_bits) {
    throw BudgetExceeded("min_preserver_bruteforce: " + std::to_string(m) +
                         " edges exceed subset budget " + std::to_string(budget.max_subset_bits));
  }
  std::optional<EdgeSet> best;
  Rat best_w;
  std::vector<int> best_ids;
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
    Rat w(0);
    EdgeSet edges(m);
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        edges.insert(i);
        w += g.edge(i).w;
      }
    }
    if (best) {
      if (best_w < w) continue;
      if (w == best_w) {
        std::vector<int> ids = edges.ids();
        if (!std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(),
                                          best_ids.end())) {
          continue;
        }
      }
    }
    Subgraph q(g, edges);
    if (is_preserver_bruteforce(q, g, f, budget).pass) {
      best = edges;
      best_w = w;
      best_ids = edges.ids();
    }
  }
  return Subgraph(g, *best);  // the full edge set is always feasible
}

}  // namespace ftspan
