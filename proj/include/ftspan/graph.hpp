#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftspan/rational.hpp"

namespace ftspan {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int id = -1;
  int u = -1;
  int v = -1;
  Rat w;

  int other(int x) const { return x == u ? v : u; }
};

/// Undirected weighted multigraph.  Edge ids are dense 0..m-1, weights are
/// positive rationals, parallel edges are allowed, self-loops are not.
class WeightedMultigraph {
 public:
  explicit WeightedMultigraph(int n = 0);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  int add_edge(int u, int v, Rat w);
  Rat total_weight() const;

  /// Text edge-list format: first significant line "n m", then one line per
  /// edge "u v w [id]".  Weights may be decimal or "p/q".  '#' starts a
  /// comment, blank lines are ignored, ids default to edge-line order.
  static WeightedMultigraph parse(const std::string& text);
  std::string serialize() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

/// Fixed-universe bitset over edge ids with a cached popcount.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe);
  static EdgeSet full(int universe);
  static EdgeSet of(int universe, const std::vector<int>& ids);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int id) const {
    return bits_[static_cast<size_t>(id) >> 6] >> (id & 63) & 1;
  }
  void insert(int id);
  void erase(int id);
  std::vector<int> ids() const;

  EdgeSet& operator|=(const EdgeSet& o);
  EdgeSet& operator&=(const EdgeSet& o);
  EdgeSet& operator-=(const EdgeSet& o);
  EdgeSet& operator^=(const EdgeSet& o);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  bool operator==(const EdgeSet& o) const { return bits_ == o.bits_; }
  bool intersects(const EdgeSet& o) const;
  bool is_subset_of(const EdgeSet& o) const;

 private:
  void recount();
  std::vector<uint64_t> bits_;
  int universe_ = 0;
  int count_ = 0;
};

/// A subgraph of a parent multigraph, identified by a set of edge ids.
/// Spans all parent vertices.
struct Subgraph {
  const WeightedMultigraph* parent = nullptr;
  EdgeSet edges;

  Subgraph() = default;
  Subgraph(const WeightedMultigraph& g, EdgeSet e) : parent(&g), edges(std::move(e)) {}
  static Subgraph full(const WeightedMultigraph& g) {
    return Subgraph(g, EdgeSet::full(g.edge_count()));
  }
  static Subgraph of(const WeightedMultigraph& g, const std::vector<int>& ids) {
    return Subgraph(g, EdgeSet::of(g.edge_count(), ids));
  }

  bool contains(int id) const { return edges.contains(id); }
  Rat weight() const;
};

/// A simple cycle reported as a closed walk of edge ids.
struct CycleWitness {
  std::vector<int> edge_ids;
  Rat total_weight;
  Rat max_edge_weight;

  Rat normalized_weight() const { return total_weight / max_edge_weight; }
};

/// true iff (w_a, a) < (w_b, b); the deterministic edge order used everywhere.
inline bool edge_order_less(const Rat& wa, int a, const Rat& wb, int b) {
  if (wa != wb) return wa < wb;
  return a < b;
}

/// Colex order on edge-id sets: A < B iff the largest element of the
/// symmetric difference lies in B.  Inputs must be sorted ascending.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ftspan
