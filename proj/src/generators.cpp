#include "ftspan/generators.hpp"

#include "ftspan/graph_algos.hpp"
#include "ftspan/rng.hpp"

namespace ftspan {

WeightedMultigraph gen_triangle(Rat heavy_weight) {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, Rat(1));
  g.add_edge(0, 2, Rat(1));
  g.add_edge(1, 2, heavy_weight);
  return g;
}

WeightedMultigraph gen_cycle_chords(int n, Rat k, Rat eps) {
  if (n < 3) throw InputError("gen_cycle_chords needs n >= 3");
  Rat chord = Rat(2 * n - 2) / k - eps;
  if (chord <= Rat(0)) throw InputError("chord weight must stay positive");
  WeightedMultigraph g(2 * n);
  for (int i = 0; i < 2 * n; ++i) g.add_edge(i, (i + 1) % (2 * n), Rat(1));
  for (int j = 0; j < n; ++j) g.add_edge(2 * j, (2 * j + 2) % (2 * n), chord);
  return g;
}

WeightedMultigraph gen_cloud_cycle(int m, int f, Rat k, Rat eps) {
  if (m < 3 || f < 1) throw InputError("gen_cloud_cycle needs m >= 3, f >= 1");
  Rat heavy = Rat(2 * m - 2) / k - eps;
  if (heavy <= Rat(0)) throw InputError("hub edge weight must stay positive");
  WeightedMultigraph g(m + m * f);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < f; ++j) {
      int cloud = m + i * f + j;
      g.add_edge(i, cloud, Rat(1));
      g.add_edge((i + 1) % m, cloud, Rat(1));
    }
  }
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m, heavy);
  return g;
}

int blowup_copies(int f, int c) {
  long long target = static_cast<long long>(c) * f + 1;
  int p = 1;
  while (static_cast<long long>(p) * p < target) ++p;
  return p;
}

WeightedMultigraph gen_cloud_blowup(const WeightedMultigraph& base, int f, int c) {
  if (f < 1 || c < 1) throw InputError("gen_cloud_blowup needs f >= 1, c >= 1");
  int p = blowup_copies(f, c);
  WeightedMultigraph g(base.vertex_count() * p);
  for (const Edge& e : base.edges()) {
    for (int t1 = 0; t1 < p; ++t1) {
      for (int t2 = 0; t2 < p; ++t2) {
        g.add_edge(e.u * p + t1, e.v * p + t2, e.w);
      }
    }
  }
  return g;
}

WeightedMultigraph gen_random(int n, Rat edge_prob, WeightRange weights, uint64_t seed) {
  if (n < 1) throw InputError("gen_random needs n >= 1");
  if (weights.lo > weights.hi || weights.lo < 1 || weights.den < 1) {
    throw InputError("bad weight range");
  }
  StreamRng rng(seed);
  uint64_t span = static_cast<uint64_t>((weights.hi - weights.lo) * weights.den + 1);
  for (uint64_t attempt = 0; attempt < 64; ++attempt) {
    WeightedMultigraph g(n);
    uint64_t pair_index = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++pair_index) {
        if (!rng.bernoulli(edge_prob, attempt, pair_index, 0)) continue;
        long long num =
            weights.lo * weights.den + static_cast<long long>(rng.uniform(span, attempt, pair_index, 1));
        g.add_edge(u, v, Rat(num, weights.den));
      }
    }
    if (is_connected(g)) return g;
  }
  throw InputError("gen_random: no connected sample after 64 attempts");
}

}  // namespace ftspan
