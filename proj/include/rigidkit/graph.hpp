#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace rigidkit {

using VertexId = std::uint32_t;

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b);  // throws InvalidArgument on a self-loop

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  std::string str() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on arbitrary positive vertex ids.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  static Graph complete(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Copy of this graph with the given edges removed (absent edges are ignored).
  Graph without_edges(const std::set<Edge>& removed) const;
  Graph with_edges(std::span<const Edge> added) const;

  /// Induced subgraph on `keep` is complete.
  bool is_clique(std::span<const VertexId> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> vertices_;  // sorted, unique
  std::set<Edge> edges_;
};

}  // namespace rigidkit
