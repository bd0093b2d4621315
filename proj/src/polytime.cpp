#include "ftspan/polytime.hpp"

#include <algorithm>
#include <cmath>

#include "ftspan/graph_algos.hpp"
#include "ftspan/greedy.hpp"

namespace ftspan {

namespace {

long long rat_ceil(const Rat& x) {
  long long whole = x.num() / x.den();
  if (Rat(whole) < x) ++whole;
  return whole;
}

/// Per-forest lookup: component label of every vertex plus the forest edges
/// of each component, so the host tree of a pair is a table access.
struct ForestIndex {
  std::vector<int> label;
  std::vector<std::vector<int>> edges_of;
};

ForestIndex index_forest(const WeightedMultigraph& g, const EdgeSet& forest) {
  ForestIndex idx;
  Subgraph sub(g, forest);
  idx.label = component_labels(sub);
  int classes = 0;
  for (int l : idx.label) classes = std::max(classes, l + 1);
  idx.edges_of.resize(classes);
  for (int id : forest.ids()) idx.edges_of[idx.label[g.edge(id).u]].push_back(id);
  return idx;
}

}  // namespace

int default_sample_count(int n, double c_const) {
  if (!(c_const > 0)) throw InputError("sample constant must be positive");
  double raw = c_const * std::log(static_cast<double>(std::max(n, 2)));
  return std::max(static_cast<int>(std::ceil(raw)), 1);
}

SurvivalEstimate estimate_survival(const Subgraph& tree, const std::vector<int>& extras, int u,
                                   int v, Rat k, Rat w_uv, Rat p_sample, int samples,
                                   const StreamRng& rng, int edge_key, int tree_index) {
  if (samples < 1) throw InputError("sample count must be positive");
  if (p_sample < Rat(0) || p_sample > Rat(1)) throw InputError("sample probability outside [0, 1]");
  for (int id : extras) {
    if (tree.contains(id)) throw InputError("sampled edges must avoid the tree");
  }
  SurvivalEstimate est;
  est.tree_index = tree_index;
  est.u = u;
  est.v = v;
  est.samples = samples;
  Rat bound = k * w_uv;
  for (int i = 0; i < samples; ++i) {
    Subgraph s = tree;
    for (int id : extras) {
      if (rng.bernoulli(p_sample, static_cast<uint64_t>(edge_key),
                        static_cast<uint64_t>(tree_index), static_cast<uint64_t>(i),
                        static_cast<uint64_t>(id))) {
        s.edges.insert(id);
      }
    }
    if (dist(s, u, v) > bound) ++est.hits;
  }
  return est;
}

Rat exact_survival_probability(const Subgraph& tree, const std::vector<int>& extras, int u, int v,
                               Rat k, Rat w_uv, Rat p_sample) {
  if (extras.size() > 15) throw InputError("exact survival limited to 15 undetermined edges");
  if (p_sample < Rat(0) || p_sample > Rat(1)) throw InputError("sample probability outside [0, 1]");
  for (int id : extras) {
    if (tree.contains(id)) throw InputError("sampled edges must avoid the tree");
  }
  Rat bound = k * w_uv;
  Rat total(0);
  int m = static_cast<int>(extras.size());
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    Subgraph s = tree;
    Rat prob(1);
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1u) {
        s.edges.insert(extras[j]);
        prob = prob * p_sample;
      } else {
        prob = prob * (Rat(1) - p_sample);
      }
    }
    if (dist(s, u, v) > bound) total = total + prob;
  }
  return total;
}

namespace {

PolyResult build_common(const WeightedMultigraph& g, const PolyOptions& opt, bool voting) {
  if (opt.f < 1) throw InputError("fault bound must be >= 1");
  if (opt.k < Rat(1)) throw InputError("stretch must be >= 1");
  if (opt.threshold <= Rat(0) || opt.threshold > Rat(1)) {
    throw InputError("threshold outside (0, 1]");
  }
  if (voting && !opt.eta) throw InputError("voting variant needs eta");
  if (!voting && opt.eta) throw InputError("eta only applies to the voting variant");

  PolyResult r;
  r.competition_f = voting ? competition_level(opt.f, opt.eta) : 2 * opt.f;
  r.votes_needed = voting ? static_cast<int>(rat_ceil(*opt.eta * Rat(opt.f))) + 1 : 1;
  r.sample_p = opt.sample_p.value_or(Rat(1, std::max(opt.f, 2)));
  if (r.sample_p <= Rat(0) || r.sample_p > Rat(1)) {
    throw InputError("sample probability outside (0, 1]");
  }
  r.samples = opt.samples ? *opt.samples : default_sample_count(g.vertex_count(), opt.c_const);
  if (r.samples < 1) throw InputError("sample count must be positive");

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

  int level = r.competition_f + 1;
  r.packing = pack_forests(r.q, level, opt.seed);
  std::vector<ForestIndex> index;
  index.reserve(r.packing.forests.size());
  for (const EdgeSet& forest : r.packing.forests) index.push_back(index_forest(g, forest));

  r.h = r.q;
  StreamRng rng(opt.seed);

  std::vector<int> scan;
  for (const Edge& e : g.edges()) {
    if (!r.q.contains(e.id)) scan.push_back(e.id);
  }
  std::sort(scan.begin(), scan.end(), [&](int a, int b) {
    return edge_order_less(g.edge(a).w, a, g.edge(b).w, b);
  });

  for (int id : scan) {
    const Edge& e = g.edge(id);
    HostRecord rec;
    rec.edge_id = id;
    for (int fi = 0; fi < static_cast<int>(index.size()); ++fi) {
      const ForestIndex& fx = index[fi];
      if (fx.label[e.u] != fx.label[e.v]) {
        // the preserver guarantee makes u, v level-connected in Q, so every
        // packed forest must join them
        throw PackingError("packed forest misses a scanned pair");
      }
      EdgeSet tree(g.edge_count());
      for (int tid : fx.edges_of[fx.label[e.u]]) tree.insert(tid);
      SurvivalEstimate est = estimate_survival(Subgraph(g, tree), r.added, e.u, e.v, opt.k, e.w,
                                               r.sample_p, r.samples, rng, id, fi);
      if (est.p_hat() >= opt.threshold) {
        rec.trees.push_back(fi);
        rec.p_hats.push_back(est.p_hat());
        if (!voting) break;  // first trigger hosts the edge
      }
    }
    if (static_cast<int>(rec.trees.size()) >= r.votes_needed) {
      r.h.edges.insert(id);
      r.added.push_back(id);
      r.host_log.push_back(std::move(rec));
    }
  }
  return r;
}

}  // namespace

PolyResult build_poly(const WeightedMultigraph& g, const PolyOptions& opt) {
  return build_common(g, opt, false);
}

PolyResult build_poly_eta(const WeightedMultigraph& g, const PolyOptions& opt) {
  return build_common(g, opt, true);
}

}  // namespace ftspan
