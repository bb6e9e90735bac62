#include "rigidkit/graph.hpp"

#include <algorithm>

#include "rigidkit/error.hpp"

namespace rigidkit {

Edge::Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(a));
}

std::string Edge::str() const { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

Graph::Graph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate vertex id");
  }
  if (!vertices_.empty() && vertices_.front() == 0) {
    throw Error(ErrorCode::InvalidArgument, "vertex ids must be positive");
  }
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "self-loop " + e.str());
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw Error(ErrorCode::InvalidArgument, "edge " + e.str() + " references an unknown vertex");
    }
    edges_.insert(e);
  }
}

Graph Graph::complete(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  edges.reserve(vertices.size() * (vertices.size() - (vertices.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) edges.emplace_back(vertices[i], vertices[j]);
  }
  return Graph(std::move(vertices), edges);
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  return a != b && edges_.count(Edge(a, b)) > 0;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const Edge& e : edges_) {
    if (e.touches(v)) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::without_edges(const std::set<Edge>& removed) const {
  Graph g = *this;
  for (const Edge& e : removed) g.edges_.erase(e);
  return g;
}

Graph Graph::with_edges(std::span<const Edge> added) const {
  std::vector<Edge> all(edges_.begin(), edges_.end());
  all.insert(all.end(), added.begin(), added.end());
  return Graph(vertices_, all);
}

bool Graph::is_clique(std::span<const VertexId> keep) const {
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (!has_edge(keep[i], keep[j])) return false;
    }
  }
  return true;
}

}  // namespace rigidkit
