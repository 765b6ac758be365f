#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace netvalue {

using NodeId = std::int32_t;

// Unordered node pair. Inside a Graph every edge is normalized to u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph over nodes 0..n-1, immutable once constructed.
// Construction rejects self-loops, duplicate edges and out-of-range
// endpoints. Edges are stored sorted lexicographically with u < v, so two
// graphs with the same edge set serialize to identical bytes.
class Graph {
 public:
  Graph() = default;
  Graph(NodeId n, std::vector<Edge> edges);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(NodeId v) const;
  std::span<const NodeId> neighbors(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;

  // Canonical JSON document {"n": <int>, "edges": [[u,v], ...]}, byte-stable
  // for a given graph.
  std::string to_json() const;
  // Accepts edge pairs in either orientation; rejects anything violating the
  // simple-graph invariants.
  static Graph from_json(const std::string& text);

 private:
  void require_node(NodeId v) const;

  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;   // CSR index, size n+1
  std::vector<NodeId> adjacency_;      // size 2*|edges|, sorted per node
};

// Map from degree to the number of nodes having that degree.
struct DegreeHistogram {
  std::map<int, std::int64_t> entries;
};

DegreeHistogram degree_histogram(const Graph& g);

// Number of nodes u != v whose shortest-path distance from v is <= h.
// Requires h >= 1 and v in range.
int reach_within(const Graph& g, NodeId v, int h);

}  // namespace netvalue
