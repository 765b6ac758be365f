#pragma once

#include <cstdint>
#include <vector>

#include "netvalue/graph.hpp"
#include "netvalue/random.hpp"

namespace netvalue {

// Watts-Strogatz small world: ring lattice with k contacts per node and
// per-edge rewiring probability p.
struct WsConfig {
  NodeId n = 0;
  int k = 0;       // even, 2 <= k <= n-1
  double p = 0.0;  // in [0, 1]
};

// Barabasi-Albert preferential attachment grown from a small ring seed.
// seed_size == 0 selects the default max(m, 3); with m = 1 and the default
// ring-of-3 seed the final graph has exactly n edges.
struct BaConfig {
  NodeId n = 0;
  int m = 1;
  NodeId seed_size = 0;
};

// Blockwise random graph: nodes are split into contiguous groups and each
// pair {u, v} is included independently with prob[group(u)][group(v)].
// A single group with one probability is the classic uniform random graph.
struct RandomBinomialConfig {
  NodeId n = 0;
  std::vector<NodeId> group_sizes;        // sums to n
  std::vector<std::vector<double>> prob;  // symmetric, entries in [0, 1]

  static RandomBinomialConfig single_group(NodeId n, double edge_prob);
};

void validate(const WsConfig& cfg);
void validate(const BaConfig& cfg);
void validate(const RandomBinomialConfig& cfg);

NodeId effective_seed_size(const BaConfig& cfg);

// Ring lattice: node v adjacent to v+-1 ... v+-k/2 (mod n); n*k/2 edges.
Graph ring_lattice(NodeId n, int k);

// Per-run rewiring counters, for diagnostics and tests.
struct WsStats {
  std::int64_t rewired_edges = 0;
  std::int64_t kept_after_failed_redraw = 0;
};

// Starts from ring_lattice(n, k). For each node in index order and each of
// its k/2 clockwise lattice edges, one uniform draw decides rewiring: if the
// draw is < p the far endpoint is replaced by a uniformly random node,
// redrawing on self-loops and duplicates (up to n attempts, then the edge is
// left in place). Edge count stays n*k/2 for every p.
Graph ws_generate(const WsConfig& cfg, RngSeed seed, WsStats* stats = nullptr);

// Seed ring of seed_size nodes, then each new node attaches m edges to m
// distinct existing nodes sampled proportionally to current degree.
// Final edge count: seed_size + m * (n - seed_size).
Graph ba_generate(const BaConfig& cfg, RngSeed seed);

// Independent per-pair coin flips with blockwise probabilities.
Graph random_binomial_generate(const RandomBinomialConfig& cfg, RngSeed seed);

}  // namespace netvalue
