#include "ftspan/graph_algos.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ftspan {

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
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smallest vertex as representative
    return true;
  }
};

struct PqItem {
  Rat d;
  int v;
  bool operator>(const PqItem& o) const {
    if (d != o.d) return o.d < d;
    return v > o.v;
  }
};

std::vector<Rat> dijkstra(const Subgraph& g, int source, int target, std::vector<int>* pred_edge) {
  const WeightedMultigraph& G = *g.parent;
  int n = G.vertex_count();
  std::vector<Rat> d(n, Rat::infinity());
  std::vector<bool> done(n, false);
  if (pred_edge) pred_edge->assign(n, -1);
  std::priority_queue<PqItem, std::vector<PqItem>, std::greater<>> pq;
  d[source] = Rat(0);
  pq.push({Rat(0), source});
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = true;
    if (v == target) break;
    for (int id : G.incident(v)) {
      if (!g.contains(id)) continue;
      const Edge& e = G.edge(id);
      int to = e.other(v);
      if (done[to]) continue;
      Rat nd = dv + e.w;
      if (nd < d[to]) {
        d[to] = nd;
        if (pred_edge) (*pred_edge)[to] = id;
        pq.push({nd, to});
      }
    }
  }
  return d;
}

}  // namespace

Rat dist(const Subgraph& g, int u, int v) {
  if (u == v) return Rat(0);
  return dijkstra(g, u, v, nullptr)[v];
}

std::vector<Rat> dist_from(const Subgraph& g, int source) {
  return dijkstra(g, source, -1, nullptr);
}

PathResult shortest_path(const Subgraph& g, int u, int v) {
  std::vector<int> pred;
  std::vector<Rat> d = dijkstra(g, u, v, &pred);
  PathResult r;
  r.length = u == v ? Rat(0) : d[v];
  if (!r.length.is_finite()) return r;
  const WeightedMultigraph& G = *g.parent;
  for (int x = v; x != u;) {
    int id = pred[x];
    r.edge_ids.push_back(id);
    x = G.edge(id).other(x);
  }
  std::reverse(r.edge_ids.begin(), r.edge_ids.end());
  return r;
}

EdgeSet mst(const Subgraph& g) {
  const WeightedMultigraph& G = *g.parent;
  std::vector<int> order = g.edges.ids();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return edge_order_less(G.edge(a).w, a, G.edge(b).w, b);
  });
  Dsu dsu(G.vertex_count());
  EdgeSet out(G.edge_count());
  for (int id : order) {
    const Edge& e = G.edge(id);
    if (dsu.unite(e.u, e.v)) out.insert(id);
  }
  return out;
}

std::vector<int> component_labels(const Subgraph& g) {
  const WeightedMultigraph& G = *g.parent;
  Dsu dsu(G.vertex_count());
  for (int id : g.edges.ids()) {
    const Edge& e = G.edge(id);
    dsu.unite(e.u, e.v);
  }
  std::vector<int> label(G.vertex_count());
  for (int v = 0; v < G.vertex_count(); ++v) label[v] = dsu.find(v);
  return label;
}

std::vector<std::vector<int>> components(const Subgraph& g) {
  std::vector<int> label = component_labels(g);
  int n = static_cast<int>(label.size());
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int rep = label[v];
    if (slot[rep] < 0) {
      slot[rep] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[rep]].push_back(v);
  }
  return out;
}

bool is_connected(const Subgraph& g) {
  return g.parent->vertex_count() <= 1 || components(g).size() == 1;
}

namespace {

/// Unit-capacity Dinic specialized to undirected edges: each edge becomes a
/// forward/backward arc pair that serve as each other's residual.
class UnitDinic {
 public:
  UnitDinic(const Subgraph& g, int s, int t) : s_(s), t_(t) {
    const WeightedMultigraph& G = *g.parent;
    head_.assign(G.vertex_count(), -1);
    for (int id : g.edges.ids()) {
      const Edge& e = G.edge(id);
      add_arc(e.u, e.v);
      add_arc(e.v, e.u);
    }
  }

  int max_flow(int limit) {
    int flow = 0;
    while (limit < 0 || flow < limit) {
      if (!bfs()) break;
      iter_ = head_;
      while (limit < 0 || flow < limit) {
        if (!dfs(s_)) break;
        ++flow;
      }
    }
    return flow;
  }

 private:
  void add_arc(int from, int to) {
    arcs_.push_back({to, head_[from], 1});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
  }

  bool bfs() {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s_] = 0;
    q.push(s_);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t_] >= 0;
  }

  bool dfs(int v) {
    if (v == t_) return true;
    for (int& a = iter_[v]; a >= 0; a = arcs_[a].next) {
      int to = arcs_[a].to;
      if (arcs_[a].cap > 0 && level_[to] == level_[v] + 1 && dfs(to)) {
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        return true;
      }
    }
    level_[v] = -1;
    return false;
  }

  struct Arc {
    int to;
    int next;
    int cap;
  };
  int s_, t_;
  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
};

}  // namespace

int pair_edge_connectivity(const Subgraph& g, int u, int v, int cap_limit) {
  if (u == v) throw InputError("edge connectivity needs distinct endpoints");
  UnitDinic dinic(g, u, v);
  return dinic.max_flow(cap_limit);
}

std::vector<std::vector<int>> connectivity_classes(const Subgraph& g, int c) {
  if (c < 1) throw InputError("connectivity level must be >= 1");
  const WeightedMultigraph& G = *g.parent;
  int n = G.vertex_count();
  Dsu dsu(n);
  if (c == 1) {
    for (int id : g.edges.ids()) {
      const Edge& e = G.edge(id);
      dsu.unite(e.u, e.v);
    }
  } else {
    std::vector<int> comp = component_labels(g);
    // "lambda >= c" is transitive, so a union-find over pairwise max-flow
    // queries suffices; same-class pairs are skipped.
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (comp[u] != comp[v] || dsu.find(u) == dsu.find(v)) continue;
        if (pair_edge_connectivity(g, u, v, c) >= c) dsu.unite(u, v);
      }
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int rep = dsu.find(v);
    if (slot[rep] < 0) {
      slot[rep] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[rep]].push_back(v);
  }
  return out;
}

GirthResult weighted_girth(const Subgraph& g) {
  const WeightedMultigraph& G = *g.parent;
  GirthResult best{Rat::infinity(), std::nullopt};
  for (int id : g.edges.ids()) {
    const Edge& e = G.edge(id);
    Subgraph restricted(G, EdgeSet(G.edge_count()));
    for (int other : g.edges.ids()) {
      if (other != id && edge_order_less(G.edge(other).w, other, e.w, id)) {
        restricted.edges.insert(other);
      }
    }
    PathResult path = shortest_path(restricted, e.u, e.v);
    if (!path.length.is_finite()) continue;
    Rat candidate = (e.w + path.length) / e.w;
    if (!best.witness || candidate < best.value) {
      best.value = candidate;
      CycleWitness cw;
      cw.edge_ids = path.edge_ids;
      cw.edge_ids.push_back(id);
      cw.total_weight = e.w + path.length;
      cw.max_edge_weight = e.w;
      best.witness = std::move(cw);
    }
  }
  return best;
}

Rat lightness(const Subgraph& h, const WeightedMultigraph& g) {
  if (!is_connected(g)) throw InputError("lightness requires a connected base graph");
  Subgraph tree(g, mst(g));
  return h.weight() / tree.weight();
}

}  // namespace ftspan
