#include <random>

#include "doctest.h"
#include "ftspan/analysis.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/graph_algos.hpp"

using namespace ftspan;

namespace {

WeightedMultigraph random_connected(int n, double p, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> wdist(1, 9);
  for (;;) {
    WeightedMultigraph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng) < p) g.add_edge(u, v, Rat(wdist(rng)));
      }
    }
    if (is_connected(g)) return g;
  }
}

/// Two terminals joined by `paths` disjoint unit two-edge paths and two
/// parallel direct edges of weight 3/2.  The paths are forced into any
/// competition-level preserver; the greedy scan then adds both direct
/// edges, pairing the second with the first.
WeightedMultigraph parallel_paths(int paths) {
  WeightedMultigraph g(2 + paths);
  for (int i = 0; i < paths; ++i) {
    g.add_edge(0, 2 + i, Rat(1));
    g.add_edge(2 + i, 1, Rat(1));
  }
  g.add_edge(0, 1, Rat(3, 2));
  g.add_edge(0, 1, Rat(3, 2));
  return g;
}

}  // namespace

TEST_CASE("integer square roots") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(2) == 1);
  CHECK(isqrt_floor(4) == 2);
  CHECK(isqrt_floor(8) == 2);
  CHECK(isqrt_ceil(4) == 2);
  CHECK(isqrt_ceil(5) == 3);
  CHECK_THROWS_AS(isqrt_floor(-1), InputError);
}

TEST_CASE("zero faults: one forest hosts everything and the chain stays light") {
  std::mt19937 mt(151);
  WeightedMultigraph g = random_connected(8, 0.5, mt);
  GreedyOptions opt;
  opt.k = Rat(3);
  opt.f = 0;
  GreedyResult r = build_greedy(g, opt);
  ForestPacking pack = pack_forests(r.q, 1);
  HostGraphs hg = build_host_graphs(r.h, r.q, r.blocks, pack, HostMode::single);
  REQUIRE(hg.graphs.size() == 1);
  CHECK(hg.graphs[0].edges == r.h.edges);
  for (const HostAssignment& a : hg.assigned) CHECK(a.trees == std::vector<int>{0});

  Subgraph t(g, pack.forests[0]);
  StreamRng rng(9);
  for (uint64_t trial = 0; trial < 20; ++trial) {
    Chain c = subsample_chain(hg.graphs[0], t, r.blocks, Rat(1, 2), rng, trial);
    CHECK(c.h3.edges.is_subset_of(c.h2.edges));
    CHECK(c.h2.edges.is_subset_of(c.h1.edges));
    CHECK(c.h1.edges.is_subset_of(hg.graphs[0].edges));
    CHECK(check_chain_girth(c.h3, opt.k).pass);
  }
}

TEST_CASE("parallel-path instance: frozen trace and deterministic girth repair") {
  WeightedMultigraph g = parallel_paths(3);
  GreedyOptions opt;
  opt.k = Rat(1);
  opt.f = 1;
  GreedyResult r = build_greedy(g, opt);
  EdgeSet core(8);
  for (int i = 0; i < 6; ++i) core.insert(i);
  REQUIRE(r.q.edges == core);
  REQUIRE(r.added == std::vector<int>{6, 7});
  REQUIRE(r.blocks.pairs == std::vector<std::pair<int, int>>{{7, 6}});

  ForestPacking pack = pack_forests(r.q, 3);
  HostGraphs hg = build_host_graphs(r.h, r.q, r.blocks, pack, HostMode::single);
  // the blocking partner is not a base edge, so every forest is eligible
  // and the lowest index hosts both added edges
  REQUIRE(hg.assigned.size() == 2);
  CHECK(hg.assigned[0].trees == std::vector<int>{0});
  CHECK(hg.assigned[1].trees == std::vector<int>{0});
  CHECK(hg.assigned[1].q_partners == 0);

  Subgraph t(g, pack.forests[0]);
  StreamRng rng(13);
  // probability one: both added edges drawn, the pair fires, edge 7 dies
  Chain c = subsample_chain(hg.graphs[0], t, r.blocks, Rat(1), rng);
  CHECK(c.h1.edges == hg.graphs[0].edges);
  CHECK(c.h2.contains(6));
  CHECK_FALSE(c.h2.contains(7));
  CHECK(t.edges.is_subset_of(c.h2.edges));
  VerificationReport ok = check_chain_girth(c.h3, opt.k);
  CHECK(ok.pass);
  CHECK(ok.check == "chain-girth");

  // skipping the pair deletion leaves the two parallel edges as a cycle of
  // normalized weight exactly k + 1
  Subgraph corrupt = c.h1;
  EdgeSet keep = mst(corrupt);
  for (int id : t.edges.ids()) {
    if (!keep.contains(id)) corrupt.edges.erase(id);
  }
  VerificationReport bad = check_chain_girth(corrupt, opt.k);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.cycle);
  CHECK(bad.cycle->normalized_weight() == Rat(2));
  std::vector<int> cyc = bad.cycle->edge_ids;
  std::sort(cyc.begin(), cyc.end());
  CHECK(cyc == std::vector<int>{6, 7});
}

TEST_CASE("all-eligible hosting reaches the vote-count guarantee") {
  WeightedMultigraph g = parallel_paths(3);
  GreedyOptions opt;
  opt.k = Rat(1);
  opt.f = 1;
  opt.eta = Rat(1);  // competition ceil(3f) = 3, packing level 4
  GreedyResult r = build_greedy(g, opt);
  REQUIRE(r.competition_f == 3);
  // connectivity 4 between the terminals needs one direct edge inside Q,
  // so only edge 7 scans and its blocking partner 6 is now a base edge
  EdgeSet expect_q(8);
  for (int i = 0; i < 7; ++i) expect_q.insert(i);
  REQUIRE(r.q.edges == expect_q);
  REQUIRE(r.added == std::vector<int>{7});
  REQUIRE(r.blocks.pairs == std::vector<std::pair<int, int>>{{7, 6}});

  ForestPacking pack = pack_forests(r.q, r.competition_f + 1);
  HostGraphs hg = build_host_graphs(r.h, r.q, r.blocks, pack, HostMode::all_eligible);
  REQUIRE(hg.assigned.size() == 1);
  CHECK(hg.assigned[0].q_partners == 1);
  for (const HostAssignment& a : hg.assigned) {
    CHECK(static_cast<int>(a.trees.size()) >= 1 + 1);  // >= ceil(eta f) + 1
    for (int fi : a.trees) {
      for (int partner : r.blocks.partners_of(a.edge_id)) {
        CHECK_FALSE(pack.forests[fi].contains(partner));
      }
    }
  }
}

TEST_CASE("q-light-heavy split on a synthetic blocking set") {
  WeightedMultigraph g = parallel_paths(5);  // edge ids 0..9 core, 10 and 11 direct
  EdgeSet core(12);
  for (int i = 0; i < 10; ++i) core.insert(i);
  Subgraph q(g, core);
  Subgraph h = Subgraph::full(g);
  ForestPacking pack = pack_forests(q, 5);

  BlockingSet b;
  b.cap = 2;  // f = 2: heavy threshold is 2 - floor(sqrt 2) = 1
  b.pairs = {{10, 0}, {10, 1}, {11, 10}};
  HostGraphs hg = build_host_graphs(h, q, b, pack, HostMode::q_light_heavy);
  CHECK(hg.heavy_threshold == 1);
  CHECK(hg.light_p == Rat(1, 2));
  CHECK(hg.heavy_p == Rat(1, 2));
  REQUIRE(hg.assigned.size() == 2);

  const HostAssignment& heavy = hg.assigned[0];
  CHECK(heavy.edge_id == 10);
  CHECK(heavy.q_partners == 2);
  CHECK(heavy.q_heavy);
  REQUIRE(heavy.trees.size() == 1);
  CHECK_FALSE(pack.forests[heavy.trees[0]].contains(0));
  CHECK_FALSE(pack.forests[heavy.trees[0]].contains(1));

  const HostAssignment& light = hg.assigned[1];
  CHECK(light.edge_id == 11);
  CHECK(light.q_partners == 0);
  CHECK_FALSE(light.q_heavy);
  CHECK(static_cast<int>(light.trees.size()) >= isqrt_ceil(2) + 1);

  // partners covering every forest leave no host at all
  BlockingSet blocked;
  blocked.cap = 10;
  for (int i = 0; i < 10; ++i) blocked.pairs.push_back({10, i});
  CHECK_THROWS_AS(build_host_graphs(h, q, blocked, pack, HostMode::single), PackingError);
}

TEST_CASE("chain girth holds on every seeded replay") {
  std::mt19937 mt(157);
  std::vector<std::pair<WeightedMultigraph, int>> instances;
  instances.push_back({gen_cycle_chords(5, Rat(2), Rat(1, 4)), 1});
  instances.push_back({parallel_paths(3), 1});
  for (int rep = 0; rep < 3; ++rep) instances.push_back({random_connected(7, 0.5, mt), 1 + rep % 2});

  for (auto& [g, f] : instances) {
    GreedyOptions opt;
    opt.k = Rat(2);
    opt.f = f;
    GreedyResult r = build_greedy(g, opt);
    ForestPacking pack = pack_forests(r.q, 2 * f + 1);
    HostGraphs hg = build_host_graphs(r.h, r.q, r.blocks, pack, HostMode::single);
    StreamRng rng(500 + f);
    for (size_t fi = 0; fi < hg.graphs.size(); ++fi) {
      Subgraph t(g, pack.forests[fi]);
      for (uint64_t trial = 0; trial < 100; ++trial) {
        Chain c = subsample_chain(hg.graphs[fi], t, r.blocks, Rat(1, 2), rng, trial);
        CHECK(check_chain_girth(c.h3, opt.k).pass);
      }
    }
  }
}

TEST_CASE("chain edge cases: probability zero and one") {
  WeightedMultigraph g = parallel_paths(3);
  EdgeSet core(8);
  for (int i = 0; i < 6; ++i) core.insert(i);
  Subgraph q(g, core);
  ForestPacking pack = pack_forests(q, 3);
  Subgraph t(g, pack.forests[0]);
  Subgraph ht = t;
  ht.edges.insert(6);
  ht.edges.insert(7);
  StreamRng rng(21);

  BlockingSet empty;
  Chain all = subsample_chain(ht, t, empty, Rat(1), rng);
  CHECK(all.h2.edges == ht.edges);
  Chain none = subsample_chain(ht, t, empty, Rat(0), rng);
  CHECK(none.h1.edges == t.edges);
  CHECK(none.h3.edges == mst(t));

  ChainWeightStats full = measure_chain_weight(ht, t, empty, Rat(1), 5, rng);
  CHECK(full.mean_h2 == ht.weight());
  ChainWeightStats drained = measure_chain_weight(ht, t, empty, Rat(0), 5, rng);
  CHECK(drained.mean_h3 <= t.weight());
  CHECK(drained.reference == Rat(0) - t.weight());
}

TEST_CASE("replay survival frequencies match the exact product formula") {
  WeightedMultigraph g = parallel_paths(3);
  EdgeSet core(8);
  for (int i = 0; i < 6; ++i) core.insert(i);
  Subgraph q(g, core);
  ForestPacking pack = pack_forests(q, 3);
  Subgraph t(g, pack.forests[0]);
  Subgraph ht = t;
  ht.edges.insert(6);
  ht.edges.insert(7);
  BlockingSet b;
  b.cap = 1;
  b.pairs = {{7, 6}};

  CHECK(exact_survival_in_chain(ht, t, b, Rat(1, 2), 6) == Rat(1, 2));
  CHECK(exact_survival_in_chain(ht, t, b, Rat(1, 2), 7) == Rat(1, 4));
  CHECK_THROWS_AS(exact_survival_in_chain(ht, t, b, Rat(1, 2), *t.edges.ids().begin()),
                  InputError);

  StreamRng rng(77);
  ChainWeightStats stats = measure_chain_weight(ht, t, b, Rat(1, 2), 400, rng);
  for (int id : t.edges.ids()) CHECK(stats.h2_counts[id] == 400);
  Rat freq6(stats.h2_counts[6], 400);
  Rat freq7(stats.h2_counts[7], 400);
  auto absdiff = [](Rat a, Rat b2) { return a < b2 ? b2 - a : a - b2; };
  CHECK(absdiff(freq6, Rat(1, 2)) <= Rat(1, 8));
  CHECK(absdiff(freq7, Rat(1, 4)) <= Rat(1, 8));

  // a partner inside the tree pins survival at zero
  BlockingSet pinned;
  pinned.cap = 1;
  pinned.pairs = {{6, *t.edges.ids().begin()}};
  CHECK(exact_survival_in_chain(ht, t, pinned, Rat(1, 2), 6) == Rat(0));

  // identical trial and seed reproduce the chain; different trials move it
  Chain c1 = subsample_chain(ht, t, b, Rat(1, 2), rng, 4);
  Chain c2 = subsample_chain(ht, t, b, Rat(1, 2), rng, 4);
  CHECK(c1.h1.edges == c2.h1.edges);
  bool moved = false;
  for (uint64_t trial = 0; trial < 20 && !moved; ++trial) {
    moved = !(subsample_chain(ht, t, b, Rat(1, 2), rng, trial).h1.edges == c1.h1.edges);
  }
  CHECK(moved);
}
