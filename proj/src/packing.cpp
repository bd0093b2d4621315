#include "ftspan/packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ftspan/graph_algos.hpp"
#include "ftspan/rng.hpp"

namespace ftspan {

DoubledGraph double_edges(const Subgraph& q) {
  const WeightedMultigraph& G = *q.parent;
  DoubledGraph d{WeightedMultigraph(G.vertex_count()), {}};
  for (int id : q.edges.ids()) {
    const Edge& e = G.edge(id);
    d.graph.add_edge(e.u, e.v, e.w);
    d.graph.add_edge(e.u, e.v, e.w);
    d.origin.push_back(id);
    d.origin.push_back(id);
  }
  return d;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

bool forest_connects_class(const WeightedMultigraph& g, const EdgeSet& forest,
                           const std::vector<int>& cls) {
  Dsu dsu(g.vertex_count());
  for (int id : forest.ids()) dsu.unite(g.edge(id).u, g.edge(id).v);
  int rep = dsu.find(cls.front());
  for (int v : cls) {
    if (dsu.find(v) != rep) return false;
  }
  return true;
}

/// Spanning-tree packing in the doubled graph by graphic matroid union.
/// Returns `level` spanning trees of copies, or nothing if the packing
/// falls short.
std::optional<std::vector<std::vector<int>>> matroid_union_spanning(const DoubledGraph& dg,
                                                                    int level) {
  const WeightedMultigraph& g = dg.graph;
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<int> assigned(m, -1);  // copy id -> forest index or -1
  std::vector<EdgeSet> forests(level, EdgeSet(m));

  auto forest_path = [&](int fi, int a, int b) {
    // edge ids along the unique a-b path in forest fi; empty if separated
    std::vector<int> prev_edge(n, -1), prev_vertex(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> bfs;
    bfs.push(a);
    seen[a] = true;
    while (!bfs.empty() && !seen[b]) {
      int v = bfs.front();
      bfs.pop();
      for (int id : g.incident(v)) {
        if (!forests[fi].contains(id)) continue;
        int to = g.edge(id).other(v);
        if (seen[to]) continue;
        seen[to] = true;
        prev_edge[to] = id;
        prev_vertex[to] = v;
        bfs.push(to);
      }
    }
    std::vector<int> path;
    if (!seen[b]) return path;
    for (int x = b; x != a; x = prev_vertex[x]) path.push_back(prev_edge[x]);
    return path;
  };

  auto independent = [&](int fi, int copy) {
    Dsu dsu(n);
    for (int id : forests[fi].ids()) dsu.unite(g.edge(id).u, g.edge(id).v);
    return dsu.find(g.edge(copy).u) != dsu.find(g.edge(copy).v);
  };

  for (int x = 0; x < m; ++x) {
    // BFS over elements in the exchange structure, shortest chain first
    std::vector<int> parent(m, -2), via_forest(m, -1);
    parent[x] = -1;
    std::queue<int> bfs;
    bfs.push(x);
    int done_elem = -1, done_forest = -1;
    while (!bfs.empty() && done_elem < 0) {
      int a = bfs.front();
      bfs.pop();
      for (int fi = 0; fi < level && done_elem < 0; ++fi) {
        if (assigned[a] == fi) continue;
        if (independent(fi, a)) {
          done_elem = a;
          done_forest = fi;
          break;
        }
        for (int b : forest_path(fi, g.edge(a).u, g.edge(a).v)) {
          if (parent[b] == -2) {
            parent[b] = a;
            via_forest[b] = fi;
            bfs.push(b);
          }
        }
      }
    }
    if (done_elem < 0) continue;  // x cannot be packed; rank reached
    // apply the exchange chain from the free placement back to x
    int elem = done_elem;
    int fi = done_forest;
    for (;;) {
      if (assigned[elem] >= 0) forests[assigned[elem]].erase(elem);
      forests[fi].insert(elem);
      assigned[elem] = fi;
      if (parent[elem] == -1) break;
      fi = via_forest[elem];
      elem = parent[elem];
      // elem enters fi, evicting the element we just moved
    }
    // shortest chains keep every forest acyclic; spot-check cheaply
    for (int f2 = 0; f2 < level; ++f2) {
      Dsu dsu(n);
      for (int id : forests[f2].ids()) {
        if (!dsu.unite(g.edge(id).u, g.edge(id).v)) return std::nullopt;
      }
    }
  }
  for (const EdgeSet& f : forests) {
    if (f.size() != n - 1) return std::nullopt;
  }
  std::vector<std::vector<int>> out;
  for (const EdgeSet& f : forests) out.push_back(f.ids());
  return out;
}

struct GrowContext {
  const WeightedMultigraph* g;
  std::vector<int> q_ids;
  const std::vector<std::vector<int>>* required;
  int level;
};

/// One greedy attempt: connect every required class in every forest via
/// cheapest augmenting paths over the forest's contracted components.
/// jitter > 0 perturbs edge preferences for restarts.
std::optional<std::vector<EdgeSet>> grow_attempt(const GrowContext& ctx, const StreamRng& rng,
                                                 uint64_t attempt) {
  const WeightedMultigraph& g = *ctx.g;
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<int> cap(m, 0);
  for (int id : ctx.q_ids) cap[id] = 2;
  std::vector<EdgeSet> forests(ctx.level, EdgeSet(m));

  auto edge_cost = [&](int id) -> long long {
    long long base = cap[id] == 2 ? 2 : 5;
    if (attempt == 0) return base * 16;
    return base * 16 + static_cast<long long>(rng.uniform(16, attempt, id));
  };

  for (const std::vector<int>& cls : *ctx.required) {
    for (int fi = 0; fi < ctx.level; ++fi) {
      for (;;) {
        Dsu dsu(n);
        for (int id : forests[fi].ids()) dsu.unite(g.edge(id).u, g.edge(id).v);
        int source = dsu.find(cls.front());
        bool connected = true;
        std::vector<bool> is_target(n, false);
        for (int v : cls) {
          int r = dsu.find(v);
          if (r != source) {
            connected = false;
            is_target[r] = true;
          }
        }
        if (connected) break;
        // Dijkstra over contracted components; only capacity-bearing edges
        // cross between components
        std::vector<long long> dist(n, -1);
        std::vector<std::pair<int, int>> prev(n, {-1, -1});  // (edge, from-rep)
        using Item = std::pair<long long, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[source] = 0;
        pq.push({0, source});
        int reached = -1;
        while (!pq.empty()) {
          auto [dv, v] = pq.top();
          pq.pop();
          if (dv != dist[v]) continue;
          if (is_target[v]) {
            reached = v;
            break;
          }
          for (int id : ctx.q_ids) {
            if (cap[id] == 0) continue;
            const Edge& e = g.edge(id);
            int ra = dsu.find(e.u), rb = dsu.find(e.v);
            int to;
            if (ra == v && rb != v) {
              to = rb;
            } else if (rb == v && ra != v) {
              to = ra;
            } else {
              continue;
            }
            long long nd = dv + edge_cost(id);
            if (dist[to] < 0 || nd < dist[to]) {
              dist[to] = nd;
              prev[to] = {id, v};
              pq.push({nd, to});
            }
          }
        }
        if (reached < 0) return std::nullopt;
        for (int at = reached; at != source;) {
          auto [id, from] = prev[at];
          forests[fi].insert(id);
          --cap[id];
          at = from;
        }
      }
    }
  }
  return forests;
}

void prune_forests(const WeightedMultigraph& g, std::vector<EdgeSet>& forests,
                   const std::vector<std::vector<int>>& required) {
  for (EdgeSet& forest : forests) {
    std::vector<int> ids = forest.ids();
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
      forest.erase(*it);
      bool ok = true;
      for (const auto& cls : required) {
        if (!forest_connects_class(g, forest, cls)) {
          ok = false;
          break;
        }
      }
      if (!ok) forest.insert(*it);
    }
  }
}

/// Exhaustive route for tiny Q: enumerate minimal covering forests once,
/// then search for `level` of them within the per-edge capacity.
std::optional<std::vector<EdgeSet>> exhaustive_pack(const GrowContext& ctx) {
  const WeightedMultigraph& g = *ctx.g;
  int mq = static_cast<int>(ctx.q_ids.size());
  if (mq > 12) return std::nullopt;
  std::vector<uint32_t> candidates;
  for (uint32_t mask = 0; mask < (uint32_t(1) << mq); ++mask) {
    EdgeSet forest(g.edge_count());
    Dsu dsu(g.vertex_count());
    bool acyclic = true;
    for (int i = 0; i < mq && acyclic; ++i) {
      if (mask >> i & 1) {
        forest.insert(ctx.q_ids[i]);
        acyclic = dsu.unite(g.edge(ctx.q_ids[i]).u, g.edge(ctx.q_ids[i]).v);
      }
    }
    if (!acyclic) continue;
    bool covers = true;
    for (const auto& cls : *ctx.required) {
      if (!forest_connects_class(g, forest, cls)) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    bool minimal = true;
    for (int i = 0; i < mq && minimal; ++i) {
      if (!(mask >> i & 1)) continue;
      forest.erase(ctx.q_ids[i]);
      bool still = true;
      for (const auto& cls : *ctx.required) {
        if (!forest_connects_class(g, forest, cls)) {
          still = false;
          break;
        }
      }
      forest.insert(ctx.q_ids[i]);
      if (still) minimal = false;
    }
    if (minimal) candidates.push_back(mask);
  }
  std::vector<int> use(mq, 0);
  std::vector<uint32_t> chosen;
  long long nodes = 0;
  std::function<bool(int)> dfs = [&](int depth) {
    if (++nodes > 500000) return false;
    if (depth == ctx.level) return true;
    for (uint32_t mask : candidates) {
      bool fits = true;
      for (int i = 0; i < mq && fits; ++i) {
        if ((mask >> i & 1) && use[i] == 2) fits = false;
      }
      if (!fits) continue;
      for (int i = 0; i < mq; ++i) {
        if (mask >> i & 1) ++use[i];
      }
      chosen.push_back(mask);
      if (dfs(depth + 1)) return true;
      chosen.pop_back();
      for (int i = 0; i < mq; ++i) {
        if (mask >> i & 1) --use[i];
      }
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::vector<EdgeSet> forests;
  for (uint32_t mask : chosen) {
    EdgeSet forest(g.edge_count());
    for (int i = 0; i < mq; ++i) {
      if (mask >> i & 1) forest.insert(ctx.q_ids[i]);
    }
    forests.push_back(forest);
  }
  return forests;
}

}  // namespace

ForestPacking pack_forests(const Subgraph& q, int level, uint64_t seed) {
  if (level < 1) throw InputError("packing level must be >= 1");
  const WeightedMultigraph& g = *q.parent;
  ForestPacking p;
  p.level = level;
  p.classes = connectivity_classes(q, level);
  std::vector<std::vector<int>> required;
  for (const auto& cls : p.classes) {
    if (cls.size() >= 2) required.push_back(cls);
  }
  if (required.empty()) {
    p.forests.assign(level, EdgeSet(g.edge_count()));
    return p;
  }

  auto finish = [&](std::vector<EdgeSet> forests) -> std::optional<ForestPacking> {
    ForestPacking candidate = p;
    candidate.forests = std::move(forests);
    if (verify_packing(candidate, q).pass) return candidate;
    return std::nullopt;
  };

  // route 1: one class spanning every vertex means Q is level-edge-connected,
  // so the doubled graph packs `level` spanning trees exactly
  if (p.classes.size() == 1 && static_cast<int>(p.classes[0].size()) == g.vertex_count() &&
      g.vertex_count() >= 2) {
    DoubledGraph dg = double_edges(q);
    if (auto trees = matroid_union_spanning(dg, level)) {
      std::vector<EdgeSet> forests(level, EdgeSet(g.edge_count()));
      for (int fi = 0; fi < level; ++fi) {
        for (int copy : (*trees)[fi]) forests[fi].insert(dg.origin[copy]);
      }
      if (auto done = finish(std::move(forests))) return *done;
    }
  }

  // route 2: greedy augmenting growth with seeded restarts
  GrowContext ctx{&g, q.edges.ids(), &required, level};
  StreamRng rng(seed);
  std::sort(required.begin(), required.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  for (uint64_t attempt = 0; attempt < 40; ++attempt) {
    if (auto forests = grow_attempt(ctx, rng, attempt)) {
      prune_forests(g, *forests, required);
      if (auto done = finish(std::move(*forests))) return *done;
    }
  }

  // route 3: exhaustive on tiny instances
  if (auto forests = exhaustive_pack(ctx)) {
    if (auto done = finish(std::move(*forests))) return *done;
  }
  throw PackingError("pack_forests: no verified packing at level " + std::to_string(level));
}

VerificationReport verify_packing(const ForestPacking& p, const Subgraph& q) {
  const WeightedMultigraph& g = *q.parent;
  VerificationReport r;
  auto fail = [&](const std::string& check, const std::string& detail) {
    r.pass = false;
    r.check = check;
    r.detail = detail;
    return r;
  };
  if (static_cast<int>(p.forests.size()) != p.level) {
    return fail("forest-count", std::to_string(p.forests.size()) + " forests for level " +
                                    std::to_string(p.level));
  }
  std::vector<int> multiplicity(g.edge_count(), 0);
  for (size_t fi = 0; fi < p.forests.size(); ++fi) {
    Dsu dsu(g.vertex_count());
    for (int id : p.forests[fi].ids()) {
      if (!q.contains(id)) {
        return fail("containment", "forest " + std::to_string(fi) + " uses non-base edge " +
                                       std::to_string(id));
      }
      if (!dsu.unite(g.edge(id).u, g.edge(id).v)) {
        return fail("acyclicity",
                    "forest " + std::to_string(fi) + " closes a cycle at edge " +
                        std::to_string(id));
      }
      ++multiplicity[id];
    }
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    if (multiplicity[id] > 2) {
      return fail("multiplicity", "edge " + std::to_string(id) + " used by " +
                                      std::to_string(multiplicity[id]) + " forests");
    }
  }
  for (const auto& cls : p.classes) {
    if (cls.size() < 2) continue;
    int coverage = 0;
    for (const EdgeSet& forest : p.forests) {
      if (forest_connects_class(g, forest, cls)) ++coverage;
    }
    if (coverage < p.level) {
      return fail("coverage", "class at vertex " + std::to_string(cls.front()) +
                                  " connected in only " + std::to_string(coverage) + "/" +
                                  std::to_string(p.level) + " forests");
    }
  }
  return r;
}

std::vector<int> eligible_hosts(const ForestPacking& p, const Subgraph& q, int u, int v,
                                const EdgeSet& forbidden) {
  const WeightedMultigraph& g = *q.parent;
  const std::vector<int>* cls = nullptr;
  for (const auto& candidate : p.classes) {
    bool has_u = std::find(candidate.begin(), candidate.end(), u) != candidate.end();
    bool has_v = std::find(candidate.begin(), candidate.end(), v) != candidate.end();
    if (has_u && has_v) {
      cls = &candidate;
      break;
    }
    if (has_u || has_v) break;  // classes partition vertices; a split pair has no host
  }
  if (!cls) throw InputError("eligible_hosts: endpoints are not in one class");
  std::vector<int> out;
  for (size_t fi = 0; fi < p.forests.size(); ++fi) {
    if (p.forests[fi].intersects(forbidden)) continue;
    if (forest_connects_class(g, p.forests[fi], *cls)) out.push_back(static_cast<int>(fi));
  }
  return out;
}

}  // namespace ftspan
