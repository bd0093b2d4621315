#include <random>

#include "doctest.h"
#include "ftspan/generators.hpp"
#include "ftspan/greedy.hpp"

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

/// Plain greedy spanner: scan all edges by (weight, id), add when the
/// current subgraph misses the stretch bound.
EdgeSet classical_greedy(const WeightedMultigraph& g, Rat k) {
  std::vector<int> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return edge_order_less(g.edge(a).w, a, g.edge(b).w, b);
  });
  Subgraph h(g, EdgeSet(g.edge_count()));
  for (int id : order) {
    const Edge& e = g.edge(id);
    if (dist(h, e.u, e.v) > k * e.w) h.edges.insert(id);
  }
  return h.edges;
}

}  // namespace

TEST_CASE("fault-set search matches first-hit brute-force enumeration") {
  std::mt19937 rng(83);
  for (int rep = 0; rep < 30; ++rep) {
    WeightedMultigraph g = random_connected(7, 0.5, rng);
    Subgraph h = Subgraph::full(g);
    Rat k(2);
    for (auto [u, v] : {std::pair{0, 6}, {1, 4}}) {
      Rat w_uv = dist(h, u, v);
      for (int f = 0; f <= 2; ++f) {
        auto fast = find_blocking_fault_set(h, u, v, k, w_uv, f);
        // brute force visits fault sets by cardinality then colex, so the
        // first violation is exactly the contract answer
        std::optional<std::vector<int>> brute;
        std::vector<int> universe(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) universe[i] = i;
        for_each_fault_set(universe, f, [&](const std::vector<int>& fault) {
          Subgraph hf = h;
          for (int id : fault) hf.edges.erase(id);
          if (dist(hf, u, v) > k * w_uv) {
            brute = fault;
            return false;
          }
          return true;
        });
        CHECK(fast == brute);
      }
    }
  }
}

TEST_CASE("fault-set search respects off-limits edges") {
  WeightedMultigraph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4, Rat(1));
  Subgraph h = Subgraph::full(c4);
  auto wit = find_blocking_fault_set(h, 0, 3, Rat(1), Rat(1), 1);
  REQUIRE(wit);
  CHECK(*wit == std::vector<int>{3});  // faulting the direct edge forces the long way

  EdgeSet protect(4);
  protect.insert(3);
  CHECK_FALSE(find_blocking_fault_set(h, 0, 3, Rat(1), Rat(1), 1, {}, &protect));
}

TEST_CASE("competition level: 2f default, ceil((2+eta) f) otherwise") {
  CHECK(competition_level(2, std::nullopt) == 4);
  CHECK(competition_level(0, std::nullopt) == 0);
  CHECK(competition_level(2, Rat(1, 2)) == 5);
  CHECK(competition_level(1, Rat(1)) == 3);
  CHECK(competition_level(3, Rat(1, 3)) == 7);
  CHECK(competition_level(2, Rat(1, 4)) == 5);  // 4.5 rounds up
  CHECK_THROWS_AS(competition_level(1, Rat(-1)), InputError);
}

TEST_CASE("zero faults reduces to the classical greedy spanner") {
  std::mt19937 rng(89);
  for (int rep = 0; rep < 12; ++rep) {
    WeightedMultigraph g = random_connected(9, 0.45, rng);
    for (long long kk : {1, 3, 5}) {
      GreedyOptions opt;
      opt.k = Rat(kk);
      opt.f = 0;
      GreedyResult r = build_greedy(g, opt);
      CHECK(r.q.edges == mst(g));
      CHECK(r.h.edges == classical_greedy(g, Rat(kk)));
      CHECK(r.blocks.pairs.empty());
      CHECK(weighted_girth(r.h).value > Rat(kk + 1));
    }
  }
}

TEST_CASE("chorded cycle: exact base, one forced chord, frozen blocking pair") {
  WeightedMultigraph g = gen_cycle_chords(5, Rat(2), Rat(1, 4));
  GreedyOptions opt;
  opt.k = Rat(2);
  opt.f = 1;
  GreedyResult r = build_greedy(g, opt);
  CHECK(r.competition_f == 2);
  CHECK(r.preserver_exact);
  // the base keeps all ten unit edges and the four lex-smallest chords;
  // chord 14 is the one edge left to scan
  EdgeSet expect_q(15);
  for (int i = 0; i < 14; ++i) expect_q.insert(i);
  CHECK(r.q.edges == expect_q);
  CHECK(r.added == std::vector<int>{14});
  CHECK(r.h.edges == EdgeSet::full(15));
  // faulting unit edge 8 pushes the endpoints of chord 14 past stretch 2
  REQUIRE(r.blocks.pairs.size() == 1);
  CHECK(r.blocks.pairs[0] == std::pair<int, int>{14, 8});

  CHECK(check_blocking_set(r.blocks, r.h, r.q, opt.k).pass);
  BlockingSet emptied;
  emptied.cap = 1;
  VerificationReport broken = check_blocking_set(emptied, r.h, r.q, opt.k);
  CHECK_FALSE(broken.pass);
  CHECK(broken.check == "unblocked-cycle");
  REQUIRE(broken.cycle);
}

TEST_CASE("greedy outputs satisfy the spanner definition oracle") {
  std::mt19937 rng(97);
  for (int rep = 0; rep < 6; ++rep) {
    WeightedMultigraph g = random_connected(8, 0.4, rng);
    for (int f : {1, 2}) {
      GreedyOptions opt;
      opt.k = Rat(3);
      opt.f = f;
      GreedyResult r = build_greedy(g, opt);
      CHECK(is_ft_spanner(r.h, g, opt.k, f).pass);
      CHECK(r.q.edges.is_subset_of(r.h.edges));
      CHECK(check_blocking_set(r.blocks, r.h, r.q, opt.k).pass);
    }
  }
}

TEST_CASE("rejected edges stay rejected against the final spanner") {
  std::mt19937 rng(101);
  WeightedMultigraph g = random_connected(9, 0.5, rng);
  GreedyOptions opt;
  opt.k = Rat(3);
  opt.f = 1;
  GreedyResult r = build_greedy(g, opt);
  for (const Edge& e : g.edges()) {
    if (r.h.contains(e.id)) continue;
    CHECK_FALSE(find_blocking_fault_set(r.h, e.u, e.v, opt.k, e.w, opt.f));
  }
}

TEST_CASE("blocking pairs cap and base exclusion are enforced") {
  WeightedMultigraph g = gen_cycle_chords(5, Rat(2), Rat(1, 4));
  Subgraph h = Subgraph::full(g);
  EdgeSet qset(15);
  for (int i = 0; i < 14; ++i) qset.insert(i);
  Subgraph q(g, qset);

  BlockingSet overfull;
  overfull.cap = 1;
  overfull.pairs = {{14, 8}, {14, 9}};
  CHECK(check_blocking_set(overfull, h, q, Rat(2)).check == "cap");

  BlockingSet base_first;
  base_first.cap = 1;
  base_first.pairs = {{8, 14}};
  CHECK(check_blocking_set(base_first, h, q, Rat(2)).check == "first-outside-base");

  BlockingSet stranger;
  stranger.cap = 1;
  stranger.pairs = {{14, 8}};
  Subgraph h_small(g, qset);
  CHECK(check_blocking_set(stranger, h_small, q, Rat(2)).check == "membership");
}

TEST_CASE("eta competition produces a stronger base than 2f") {
  std::mt19937 rng(103);
  WeightedMultigraph g = random_connected(8, 0.6, rng);
  GreedyOptions twof;
  twof.k = Rat(3);
  twof.f = 1;
  GreedyResult r2 = build_greedy(g, twof);
  GreedyOptions eta = twof;
  eta.eta = Rat(1);
  GreedyResult r3 = build_greedy(g, eta);
  CHECK(r3.competition_f == 3);
  CHECK(is_preserver_bruteforce(r3.q, g, 3).pass);
  CHECK(r2.q.weight() <= r3.q.weight());
  CHECK(is_ft_spanner(r3.h, g, Rat(3), 1).pass);
}
