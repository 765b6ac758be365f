#include "netvalue/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace netvalue {

Graph::Graph(NodeId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("graph: negative node count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop rejected");
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: duplicate edge rejected");

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

  adjacency_.resize(edges_.size() * 2);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Filling in lexicographic edge order leaves every neighbor list sorted.
  for (const Edge& e : edges_) {
    adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = e.v;
    adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = e.u;
  }
}

void Graph::require_node(NodeId v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("graph: node id " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) + ")");
}

int Graph::degree(NodeId v) const {
  require_node(v);
  const auto i = static_cast<std::size_t>(v);
  return static_cast<int>(offsets_[i + 1] - offsets_[i]);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  require_node(v);
  const auto i = static_cast<std::size_t>(v);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  require_node(u);
  require_node(v);
  if (u == v) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n_;
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : edges_) arr.push_back({e.u, e.v});
  doc["edges"] = std::move(arr);
  return doc.dump();
}

Graph Graph::from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw std::invalid_argument("graph: document must carry \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer())
    throw std::invalid_argument("graph: \"n\" must be an integer");
  if (!doc["edges"].is_array())
    throw std::invalid_argument("graph: \"edges\" must be an array");

  const auto n = doc["n"].get<std::int64_t>();
  if (n < 0 || n > std::numeric_limits<NodeId>::max())
    throw std::invalid_argument("graph: node count out of range");

  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::invalid_argument("graph: each edge must be a pair of integers");
    edges.push_back({pair[0].get<NodeId>(), pair[1].get<NodeId>()});
  }
  return Graph(static_cast<NodeId>(n), std::move(edges));
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram hist;
  for (NodeId v = 0; v < g.node_count(); ++v) ++hist.entries[g.degree(v)];
  return hist;
}

int reach_within(const Graph& g, NodeId v, int h) {
  if (v < 0 || v >= g.node_count())
    throw std::invalid_argument("reach_within: node id out of range");
  if (h < 1) throw std::invalid_argument("reach_within: hop budget must be >= 1");

  std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<NodeId> frontier{v};
  std::vector<NodeId> next;
  seen[static_cast<std::size_t>(v)] = 1;
  int reached = 0;
  for (int level = 0; level < h && !frontier.empty(); ++level) {
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          next.push_back(w);
          ++reached;
        }
      }
    }
    frontier.swap(next);
  }
  return reached;
}

}  // namespace netvalue
