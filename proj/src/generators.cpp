#include "netvalue/generators.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netvalue {

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw std::invalid_argument(what);
}

bool adjacent_to(const std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v) {
  const auto& list = adj[static_cast<std::size_t>(u)];
  return std::find(list.begin(), list.end(), v) != list.end();
}

void drop_neighbor(std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v) {
  auto& list = adj[static_cast<std::size_t>(u)];
  auto it = std::find(list.begin(), list.end(), v);
  assert(it != list.end());
  list.erase(it);
}

Graph adjacency_to_graph(NodeId n, const std::vector<std::vector<NodeId>>& adj) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[static_cast<std::size_t>(u)])
      if (u < v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace

void validate(const WsConfig& cfg) {
  if (cfg.n < 3) config_error("ws: need at least 3 nodes");
  if (cfg.k % 2 != 0) config_error("ws: k must be even");
  if (cfg.k < 2 || cfg.k > cfg.n - 1) config_error("ws: k must satisfy 2 <= k <= n-1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) config_error("ws: p must lie in [0, 1]");
}

NodeId effective_seed_size(const BaConfig& cfg) {
  return cfg.seed_size == 0 ? std::max<NodeId>(cfg.m, 3) : cfg.seed_size;
}

void validate(const BaConfig& cfg) {
  if (cfg.m < 1) config_error("ba: m must be >= 1");
  const NodeId s = effective_seed_size(cfg);
  if (s < std::max<NodeId>(cfg.m, 3))
    config_error("ba: seed_size must be >= max(m, 3)");
  if (cfg.n < s) config_error("ba: n must be >= seed_size");
}

void validate(const RandomBinomialConfig& cfg) {
  if (cfg.n < 0) config_error("random: negative node count");
  if (cfg.group_sizes.empty()) config_error("random: need at least one group");
  NodeId total = 0;
  for (NodeId size : cfg.group_sizes) {
    if (size < 0) config_error("random: negative group size");
    total += size;
  }
  if (total != cfg.n) config_error("random: group sizes must sum to n");
  const std::size_t groups = cfg.group_sizes.size();
  if (cfg.prob.size() != groups)
    config_error("random: probability matrix must be groups x groups");
  for (std::size_t i = 0; i < groups; ++i) {
    if (cfg.prob[i].size() != groups)
      config_error("random: probability matrix must be groups x groups");
    for (std::size_t j = 0; j < groups; ++j) {
      const double p = cfg.prob[i][j];
      if (!(p >= 0.0 && p <= 1.0)) config_error("random: probabilities must lie in [0, 1]");
      if (cfg.prob[i][j] != cfg.prob[j][i])
        config_error("random: probability matrix must be symmetric");
    }
  }
}

RandomBinomialConfig RandomBinomialConfig::single_group(NodeId n, double edge_prob) {
  return {n, {n}, {{edge_prob}}};
}

Graph ring_lattice(NodeId n, int k) {
  validate(WsConfig{n, k, 0.0});
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k) / 2);
  for (NodeId v = 0; v < n; ++v) {
    for (int j = 1; j <= k / 2; ++j) {
      const NodeId w = static_cast<NodeId>((v + j) % n);
      edges.push_back({v, w});
    }
  }
  return Graph(n, std::move(edges));
}

Graph ws_generate(const WsConfig& cfg, RngSeed seed, WsStats* stats) {
  validate(cfg);
  const NodeId n = cfg.n;
  const int half_k = cfg.k / 2;

  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    for (int j = 1; j <= half_k; ++j) {
      const NodeId w = static_cast<NodeId>((v + j) % n);
      adj[static_cast<std::size_t>(v)].push_back(w);
      adj[static_cast<std::size_t>(w)].push_back(v);
    }
  }

  Rng rng(seed);
  for (NodeId u = 0; u < n; ++u) {
    for (int j = 1; j <= half_k; ++j) {
      const NodeId v = static_cast<NodeId>((u + j) % n);
      if (rng.uniform01() >= cfg.p) continue;

      // Redraw until the replacement target keeps the graph simple.
      NodeId target = -1;
      for (NodeId attempt = 0; attempt < n; ++attempt) {
        const NodeId w = static_cast<NodeId>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        if (w == u || adjacent_to(adj, u, w)) continue;
        target = w;
        break;
      }
      if (target < 0) {
        if (stats) ++stats->kept_after_failed_redraw;
        continue;
      }
      drop_neighbor(adj, u, v);
      drop_neighbor(adj, v, u);
      adj[static_cast<std::size_t>(u)].push_back(target);
      adj[static_cast<std::size_t>(target)].push_back(u);
      if (stats) ++stats->rewired_edges;
    }
  }
  return adjacency_to_graph(n, adj);
}

Graph ba_generate(const BaConfig& cfg, RngSeed seed) {
  validate(cfg);
  const NodeId n = cfg.n;
  const NodeId s = effective_seed_size(cfg);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(s) +
                static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(n - s));

  // Attachment repertoire: each node id appears once per unit of degree.
  std::vector<NodeId> repertoire;
  repertoire.reserve(edges.capacity() * 2);
  for (NodeId v = 0; v < s; ++v) {
    const NodeId w = static_cast<NodeId>((v + 1) % s);
    edges.push_back({v, w});
    repertoire.push_back(v);
    repertoire.push_back(w);
  }

  Rng rng(seed);
  std::vector<NodeId> targets;
  for (NodeId newcomer = s; newcomer < n; ++newcomer) {
    // Degrees as of the newcomer's arrival; draws reject repeats so the m
    // targets are distinct.
    const std::uint64_t pool = repertoire.size();
    targets.clear();
    while (targets.size() < static_cast<std::size_t>(cfg.m)) {
      const NodeId candidate = repertoire[rng.uniform_below(pool)];
      if (std::find(targets.begin(), targets.end(), candidate) != targets.end()) continue;
      targets.push_back(candidate);
    }
    for (NodeId t : targets) {
      edges.push_back({t, newcomer});
      repertoire.push_back(t);
      repertoire.push_back(newcomer);
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_binomial_generate(const RandomBinomialConfig& cfg, RngSeed seed) {
  validate(cfg);

  std::vector<std::size_t> group_of(static_cast<std::size_t>(cfg.n));
  std::size_t node = 0;
  for (std::size_t g = 0; g < cfg.group_sizes.size(); ++g)
    for (NodeId i = 0; i < cfg.group_sizes[g]; ++i) group_of[node++] = g;

  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < cfg.n; ++u) {
    for (NodeId v = u + 1; v < cfg.n; ++v) {
      const double p = cfg.prob[group_of[static_cast<std::size_t>(u)]]
                               [group_of[static_cast<std::size_t>(v)]];
      if (rng.uniform01() < p) edges.push_back({u, v});
    }
  }
  return Graph(cfg.n, std::move(edges));
}

}  // namespace netvalue
