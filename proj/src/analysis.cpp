#include "ftspan/analysis.hpp"

#include <algorithm>

#include "ftspan/graph_algos.hpp"

namespace ftspan {

int isqrt_floor(int x) {
  if (x < 0) throw InputError("square root of a negative count");
  int s = 0;
  while (static_cast<long long>(s + 1) * (s + 1) <= x) ++s;
  return s;
}

int isqrt_ceil(int x) {
  int s = isqrt_floor(x);
  return s * s == x ? s : s + 1;
}

HostGraphs build_host_graphs(const Subgraph& h, const Subgraph& q, const BlockingSet& b,
                             const ForestPacking& p, HostMode mode) {
  const WeightedMultigraph& g = *h.parent;
  int f = b.cap;
  HostGraphs out;
  out.mode = mode;
  out.heavy_threshold = f - isqrt_floor(f);
  out.light_p = Rat(1, std::max(f, 1));
  out.heavy_p = Rat(1, std::max(isqrt_ceil(f), 1));
  out.graphs.reserve(p.forests.size());
  for (const EdgeSet& forest : p.forests) out.graphs.emplace_back(g, forest);

  for (const Edge& e : g.edges()) {
    if (!h.contains(e.id) || q.contains(e.id)) continue;
    HostAssignment a;
    a.edge_id = e.id;
    EdgeSet forbidden(g.edge_count());
    for (int partner : b.partners_of(e.id)) {
      forbidden.insert(partner);
      if (q.contains(partner)) ++a.q_partners;
    }
    std::vector<int> eligible = eligible_hosts(p, q, e.u, e.v, forbidden);
    if (eligible.empty()) {
      throw PackingError("no eligible host forest for edge " + std::to_string(e.id));
    }
    a.q_heavy = mode == HostMode::q_light_heavy && a.q_partners >= out.heavy_threshold;
    bool spread = mode == HostMode::all_eligible || (mode == HostMode::q_light_heavy && !a.q_heavy);
    if (spread) {
      a.trees = eligible;
    } else {
      a.trees = {eligible.front()};
    }
    for (int fi : a.trees) out.graphs[fi].edges.insert(e.id);
    out.assigned.push_back(std::move(a));
  }
  return out;
}

Chain subsample_chain(const Subgraph& ht, const Subgraph& t, const BlockingSet& b, Rat p,
                      const StreamRng& rng, uint64_t trial) {
  if (!t.edges.is_subset_of(ht.edges)) throw InputError("tree must lie inside the host graph");
  if (p < Rat(0) || p > Rat(1)) throw InputError("sample probability outside [0, 1]");
  Chain c{ht, ht, ht};
  c.h1.edges = t.edges;
  for (int id : ht.edges.ids()) {
    if (t.contains(id)) continue;
    if (rng.bernoulli(p, trial, static_cast<uint64_t>(id))) c.h1.edges.insert(id);
  }
  c.h2.edges = c.h1.edges;
  for (const auto& [first, second] : b.pairs) {
    if (c.h1.contains(first) && c.h1.contains(second)) c.h2.edges.erase(first);
  }
  c.h3.edges = c.h2.edges;
  EdgeSet keep = mst(c.h2);
  for (int id : t.edges.ids()) {
    if (!keep.contains(id)) c.h3.edges.erase(id);
  }
  return c;
}

VerificationReport check_chain_girth(const Subgraph& h3, Rat k) {
  GirthResult gr = weighted_girth(h3);
  VerificationReport r;
  r.check = "chain-girth";
  if (gr.value > k + Rat(1)) return r;
  r.pass = false;
  r.detail = "weighted girth " + gr.value.str() + " is not above " + (k + Rat(1)).str();
  r.cycle = gr.witness;
  return r;
}

Rat exact_survival_in_chain(const Subgraph& ht, const Subgraph& t, const BlockingSet& b, Rat p,
                            int edge_id) {
  if (!ht.contains(edge_id)) throw InputError("edge outside the host graph");
  if (t.contains(edge_id)) throw InputError("tree edges survive deterministically");
  Rat prob = p;
  for (int partner : b.partners_of(edge_id)) {
    if (!ht.contains(partner)) continue;
    if (t.contains(partner)) return Rat(0);  // the partner is always present
    prob = prob * (Rat(1) - p);
  }
  return prob;
}

ChainWeightStats measure_chain_weight(const Subgraph& ht, const Subgraph& t, const BlockingSet& b,
                                      Rat p, int trials, const StreamRng& rng) {
  if (trials < 1) throw InputError("trials must be >= 1");
  ChainWeightStats s;
  s.trials = trials;
  s.w_ht = ht.weight();
  s.w_t = t.weight();
  s.reference = s.w_ht * p - s.w_t;
  s.h2_counts.assign(ht.parent->edge_count(), 0);
  Rat sum2(0);
  Rat sum3(0);
  for (int i = 0; i < trials; ++i) {
    Chain c = subsample_chain(ht, t, b, p, rng, static_cast<uint64_t>(i));
    sum2 = sum2 + c.h2.weight();
    sum3 = sum3 + c.h3.weight();
    for (int id : c.h2.edges.ids()) ++s.h2_counts[id];
  }
  s.mean_h2 = sum2 / Rat(trials);
  s.mean_h3 = sum3 / Rat(trials);
  return s;
}

}  // namespace ftspan
