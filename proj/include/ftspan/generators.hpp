#pragma once

#include "ftspan/graph.hpp"

namespace ftspan {

/// Two unit edges 0-1 and 0-2 (ids 0, 1) plus a heavy edge 1-2 of weight W
/// (id 2).  The smallest instance where fault tolerance forces every edge.
WeightedMultigraph gen_triangle(Rat heavy_weight);

/// Unit cycle on 2n vertices (ids 0..2n-1, edge i joins i and i+1 mod 2n)
/// plus n chords between consecutive even vertices (id 2n+j joins 2j and
/// 2j+2 mod 2n) of weight (2n-2)/k - eps.  With one fault, every chord is
/// forced into any k-spanner while a single cycle edge bounds the
/// competitive denominator.
WeightedMultigraph gen_cycle_chords(int n, Rat k, Rat eps);

/// m hub vertices 0..m-1 on a cycle; hub i and hub i+1 share a cloud of f
/// vertices (cloud vertex (i, j) is m + i*f + j).  Unit edges come first:
/// for each i, then j, edge (i, (i,j)) followed by (i+1 mod m, (i,j)), ids
/// 0..2mf-1.  Heavy hub-hub edges (i, i+1 mod m) of weight (2m-2)/k - eps
/// take ids 2mf..2mf+m-1.  The unit edges alone are a cheap high-fault
/// preserver; the heavy edges are all forced into any f-fault k-spanner.
WeightedMultigraph gen_cloud_cycle(int m, int f, Rat k, Rat eps);

/// Blow-up of a base graph: p = ceil(sqrt(c*f + 1)) copies per vertex
/// (copy t of base vertex v is v*p + t), and each base edge becomes a
/// complete bipartite cloud of p*p parallel-weight edges between the copy
/// sets, in base-edge id order (copies of base edge e occupy ids e*p*p ..
/// e*p*p + p*p - 1, ordered by (copy of u, copy of v)).
WeightedMultigraph gen_cloud_blowup(const WeightedMultigraph& base, int f, int c);

/// Number of copies per vertex used by gen_cloud_blowup.
int blowup_copies(int f, int c);

struct WeightRange {
  long long lo = 1;
  long long hi = 10;
  long long den = 1;  // weights are uniform multiples of 1/den in [lo, hi]
};

/// Erdos-Renyi graph resampled until connected (bounded retries, then
/// InputError).  Deterministic for a fixed seed.
WeightedMultigraph gen_random(int n, Rat edge_prob, WeightRange weights, uint64_t seed);

}  // namespace ftspan
