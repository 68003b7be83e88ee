#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "topo/error.hpp"

namespace topo {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..vertex_count()-1.
///
/// Adjacency lists are sorted ascending. Construction rejects self-loops,
/// repeated edges and out-of-range endpoints, so every Graph value is simple
/// and symmetric.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::size_t vertex_count, std::span<const Edge> edges) {
    for (const auto& [u, v] : edges) {
      if (u >= vertex_count) throw VertexOutOfRange(u, vertex_count);
      if (v >= vertex_count) throw VertexOutOfRange(v, vertex_count);
      if (u == v) throw SelfLoop(u);
    }
    Graph g;
    g.adjacency_.assign(vertex_count, {});
    for (const auto& [u, v] : edges) {
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
      auto& nb = g.adjacency_[v];
      std::sort(nb.begin(), nb.end());
      auto dup = std::adjacent_find(nb.begin(), nb.end());
      if (dup != nb.end()) throw DuplicateEdge(std::min(v, *dup), std::max(v, *dup));
    }
    g.edge_count_ = edges.size();
    return g;
  }

  static Graph from_edge_list(std::size_t vertex_count, std::initializer_list<Edge> edges) {
    return from_edge_list(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t min_degree() const noexcept {
    std::size_t d = adjacency_.empty() ? 0 : adjacency_.front().size();
    for (const auto& nb : adjacency_) d = std::min(d, nb.size());
    return d;
  }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, nb.size());
    return d;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= adjacency_.size()) throw VertexOutOfRange(v, adjacency_.size());
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// BFS reachability from vertex 0. Graphs with fewer than two vertices are
/// connected.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == n;
}

}  // namespace topo
