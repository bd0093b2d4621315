#include <random>

#include "doctest.h"
#include "ftspan/generators.hpp"
#include "ftspan/greedy.hpp"
#include "ftspan/polytime.hpp"

using namespace ftspan;

namespace {

WeightedMultigraph complete_unit(int n) {
  WeightedMultigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, Rat(1));
  }
  return g;
}

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

}  // namespace

TEST_CASE("default sample count follows ceil(c ln n) with a floor at n = 2") {
  CHECK(default_sample_count(2, 384.0) == 267);
  CHECK(default_sample_count(12, 384.0) == 955);
  CHECK(default_sample_count(1, 384.0) == 267);  // clamped to n = 2
  CHECK(default_sample_count(100, 0.01) == 1);
  CHECK_THROWS_AS(default_sample_count(5, 0.0), InputError);
}

TEST_CASE("survival estimate without undetermined edges is deterministic") {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, Rat(1));
  g.add_edge(1, 2, Rat(1));
  g.add_edge(0, 2, Rat(1));
  EdgeSet path(3);
  path.insert(0);
  path.insert(1);
  Subgraph tree(g, path);
  StreamRng rng(7);

  // tree distance 2 vs bound k * w = 1: every sample violates the stretch
  SurvivalEstimate hot = estimate_survival(tree, {}, 0, 2, Rat(1), Rat(1), Rat(1, 2), 40, rng, 2, 0);
  CHECK(hot.hits == 40);
  CHECK(hot.p_hat() == Rat(1));
  // bound 3: no sample can violate it
  SurvivalEstimate cold = estimate_survival(tree, {}, 0, 2, Rat(3), Rat(1), Rat(1, 2), 40, rng, 2, 0);
  CHECK(cold.p_hat() == Rat(0));
}

TEST_CASE("sampling probability one includes every undetermined edge") {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, Rat(1));
  g.add_edge(1, 2, Rat(1));
  g.add_edge(0, 2, Rat(1));
  EdgeSet path(3);
  path.insert(0);
  path.insert(1);
  Subgraph tree(g, path);
  StreamRng rng(7);
  // edge (0, 2) always sampled, so the pair never exceeds stretch 1
  SurvivalEstimate est = estimate_survival(tree, {2}, 0, 2, Rat(1), Rat(1), Rat(1), 30, rng, 9, 1);
  CHECK(est.p_hat() == Rat(0));
  CHECK_THROWS_AS(estimate_survival(tree, {0}, 0, 2, Rat(1), Rat(1), Rat(1, 2), 5, rng, 0, 0),
                  InputError);
}

TEST_CASE("exact survival probability on a hand-checked instance") {
  // path 0-1-2-3 plus shortcuts (0,2) and (1,3); bound 2, tree distance 3:
  // the pair survives exactly when both shortcuts are left out
  WeightedMultigraph g(4);
  g.add_edge(0, 1, Rat(1));
  g.add_edge(1, 2, Rat(1));
  g.add_edge(2, 3, Rat(1));
  g.add_edge(0, 2, Rat(1));
  g.add_edge(1, 3, Rat(1));
  g.add_edge(0, 3, Rat(5));
  EdgeSet path(6);
  path.insert(0);
  path.insert(1);
  path.insert(2);
  Subgraph tree(g, path);

  CHECK(exact_survival_probability(tree, {3, 4, 5}, 0, 3, Rat(1), Rat(2), Rat(1, 2)) == Rat(1, 4));
  CHECK(exact_survival_probability(tree, {3, 4, 5}, 0, 3, Rat(1), Rat(2), Rat(1, 3)) == Rat(4, 9));
  CHECK(exact_survival_probability(tree, {}, 0, 3, Rat(1), Rat(2), Rat(1, 2)) == Rat(1));
  CHECK(exact_survival_probability(tree, {}, 0, 3, Rat(1), Rat(4), Rat(1, 2)) == Rat(0));
}

TEST_CASE("estimates concentrate around the exact probability") {
  WeightedMultigraph g(4);
  g.add_edge(0, 1, Rat(1));
  g.add_edge(1, 2, Rat(1));
  g.add_edge(2, 3, Rat(1));
  g.add_edge(0, 2, Rat(1));
  g.add_edge(1, 3, Rat(1));
  g.add_edge(0, 3, Rat(5));
  EdgeSet path(6);
  path.insert(0);
  path.insert(1);
  path.insert(2);
  Subgraph tree(g, path);
  std::vector<int> extras{3, 4, 5};

  Rat exact = exact_survival_probability(tree, extras, 0, 3, Rat(1), Rat(2), Rat(1, 2));
  int samples = default_sample_count(12, 384.0);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    StreamRng rng(seed);
    SurvivalEstimate est =
        estimate_survival(tree, extras, 0, 3, Rat(1), Rat(2), Rat(1, 2), samples, rng, 0, 0);
    Rat dev = est.p_hat() - exact;
    if (dev < Rat(0)) dev = Rat(0) - dev;
    CHECK(dev <= Rat(1, 8));
  }
  // same seed, same inputs: bitwise identical estimate
  StreamRng rng(42);
  SurvivalEstimate a = estimate_survival(tree, extras, 0, 3, Rat(1), Rat(2), Rat(1, 2), 200, rng, 3, 1);
  SurvivalEstimate b = estimate_survival(tree, extras, 0, 3, Rat(1), Rat(2), Rat(1, 2), 200, rng, 3, 1);
  CHECK(a.hits == b.hits);
}

TEST_CASE("a fault set avoiding the tree forces survival probability >= 1/4") {
  std::mt19937 mt(131);
  int found = 0;
  for (int rep = 0; rep < 40; ++rep) {
    WeightedMultigraph g = random_connected(7, 0.4, mt);
    if (g.edge_count() > 15 + 6) continue;
    EdgeSet tree_ids = mst(g);
    Subgraph tree(g, tree_ids);
    for (int f : {1, 2, 3}) {
      Rat p = Rat(1, std::max(f, 2));
      for (const Edge& e : g.edges()) {
        if (tree_ids.contains(e.id)) continue;
        std::vector<int> extras;
        for (const Edge& o : g.edges()) {
          if (o.id != e.id && !tree_ids.contains(o.id)) extras.push_back(o.id);
        }
        Subgraph host(g, tree_ids);
        for (int id : extras) host.edges.insert(id);
        auto witness =
            find_blocking_fault_set(host, e.u, e.v, Rat(2), e.w, f, {}, &tree_ids);
        if (!witness) continue;
        ++found;
        Rat survival = exact_survival_probability(tree, extras, e.u, e.v, Rat(2), e.w, p);
        CHECK(survival >= Rat(1, 4));
        Rat floor(1);
        for (int i = 0; i < f; ++i) floor = floor * (Rat(1) - p);
        CHECK(survival >= floor);
      }
    }
  }
  CHECK(found > 10);  // the property must actually have been exercised
}

TEST_CASE("triangle at f = 1: the preserver is everything, no edge scanned") {
  WeightedMultigraph g = gen_triangle(Rat(50));
  PolyOptions opt;
  opt.k = Rat(1);
  opt.f = 1;
  opt.samples = 32;
  PolyResult r = build_poly(g, opt);
  CHECK(r.q.edges == EdgeSet::full(3));
  CHECK(r.h.edges == EdgeSet::full(3));
  CHECK(r.added.empty());
  CHECK(r.host_log.empty());
  CHECK(r.competition_f == 2);
  CHECK(r.sample_p == Rat(1, 2));
  CHECK(is_ft_spanner(r.h, g, Rat(1), 1).pass);
}

TEST_CASE("complete graph at stretch 1: every non-base edge triggers its first tree") {
  WeightedMultigraph g = complete_unit(8);
  PolyOptions opt;
  opt.k = Rat(1);
  opt.f = 1;
  opt.samples = 25;
  opt.preserver_mode = DenominatorMode::heuristic;
  opt.seed = 5;
  PolyResult r = build_poly(g, opt);
  CHECK(r.h.edges == EdgeSet::full(g.edge_count()));
  CHECK(r.added.size() + r.q.edges.ids().size() == static_cast<size_t>(g.edge_count()));
  REQUIRE(r.host_log.size() == r.added.size());
  for (size_t i = 0; i < r.host_log.size(); ++i) {
    const HostRecord& rec = r.host_log[i];
    CHECK(rec.edge_id == r.added[i]);
    // no sample contains the scanned edge, so the estimate is certain and
    // the first forest hosts it
    REQUIRE(rec.trees.size() == 1);
    CHECK(rec.trees[0] == 0);
    CHECK(rec.p_hats[0] == Rat(1));
  }
  CHECK(static_cast<int>(r.packing.forests.size()) == 3);
}

TEST_CASE("voting variant on the complete graph collects every tree's vote") {
  WeightedMultigraph g = complete_unit(8);
  PolyOptions opt;
  opt.k = Rat(1);
  opt.f = 1;
  opt.eta = Rat(1);
  opt.samples = 25;
  opt.preserver_mode = DenominatorMode::heuristic;
  opt.seed = 3;
  PolyResult r = build_poly_eta(g, opt);
  CHECK(r.competition_f == 3);
  CHECK(r.votes_needed == 2);
  CHECK(static_cast<int>(r.packing.forests.size()) == 4);
  CHECK(r.h.edges == EdgeSet::full(g.edge_count()));
  for (const HostRecord& rec : r.host_log) {
    CHECK(rec.trees == std::vector<int>{0, 1, 2, 3});
    for (const Rat& ph : rec.p_hats) CHECK(ph >= opt.threshold);
  }
}

TEST_CASE("voting variant rejects an edge no tree votes for") {
  // seven parallel unit edges and one heavy edge between two vertices; the
  // heavy edge is served by every single-edge tree, so votes stay at zero
  WeightedMultigraph g(2);
  for (int i = 0; i < 7; ++i) g.add_edge(0, 1, Rat(1));
  g.add_edge(0, 1, Rat(10));
  PolyOptions opt;
  opt.k = Rat(1);
  opt.f = 1;
  opt.eta = Rat(4);
  opt.samples = 16;
  PolyResult r = build_poly_eta(g, opt);
  CHECK(r.competition_f == 6);
  CHECK(r.votes_needed == 5);
  EdgeSet units(8);
  for (int i = 0; i < 7; ++i) units.insert(i);
  CHECK(r.q.edges == units);
  CHECK(r.h.edges == units);
  CHECK(r.host_log.empty());
}

TEST_CASE("seed determinism and oracle pass on random instances") {
  std::mt19937 mt(137);
  for (int rep = 0; rep < 4; ++rep) {
    WeightedMultigraph g = random_connected(8, 0.45, mt);
    for (int f : {1, 2}) {
      PolyOptions opt;
      opt.k = Rat(2);
      opt.f = f;
      opt.samples = 400;
      opt.seed = 11 + rep;
      PolyResult r1 = build_poly(g, opt);
      PolyResult r2 = build_poly(g, opt);
      CHECK(r1.h.edges == r2.h.edges);
      CHECK(r1.added == r2.added);
      CHECK(is_ft_spanner(r1.h, g, Rat(2), f).pass);
      for (const HostRecord& rec : r1.host_log) {
        CHECK(!rec.trees.empty());
        for (const Rat& ph : rec.p_hats) CHECK(ph >= opt.threshold);
      }
    }
  }
}

TEST_CASE("option validation") {
  WeightedMultigraph g = gen_triangle(Rat(2));
  PolyOptions opt;
  opt.f = 0;
  CHECK_THROWS_AS(build_poly(g, opt), InputError);
  opt.f = 1;
  opt.eta = Rat(1);
  CHECK_THROWS_AS(build_poly(g, opt), InputError);  // eta is a voting-only knob
  opt.eta.reset();
  CHECK_THROWS_AS(build_poly_eta(g, opt), InputError);  // voting needs eta
  opt.threshold = Rat(0);
  CHECK_THROWS_AS(build_poly(g, opt), InputError);
  opt.threshold = Rat(1, 8);
  opt.sample_p = Rat(2);
  CHECK_THROWS_AS(build_poly(g, opt), InputError);
  opt.sample_p.reset();
  opt.samples = 0;
  CHECK_THROWS_AS(build_poly(g, opt), InputError);
}
