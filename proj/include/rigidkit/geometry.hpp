#pragma once

#include <map>
#include <vector>

#include "rigidkit/graph.hpp"
#include "rigidkit/rational.hpp"

namespace rigidkit {

using Point = std::vector<Rational>;

/// Assignment of a point in Q^d to each vertex.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int dim, std::map<VertexId, Point> points);

  int dim() const { return dim_; }
  const std::map<VertexId, Point>& points() const { return points_; }
  const Point& at(VertexId v) const;
  std::vector<VertexId> vertex_ids() const;

  /// Returns a copy with one point replaced (the vertex must already exist).
  Configuration with_point(VertexId v, Point p) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int dim_ = 0;
  std::map<VertexId, Point> points_;
};

class Framework {
 public:
  Framework(Graph graph, Configuration config);

  const Graph& graph() const { return graph_; }
  const Configuration& config() const { return config_; }
  int dim() const { return config_.dim(); }

  friend bool operator==(const Framework&, const Framework&) = default;

 private:
  Graph graph_;
  Configuration config_;
};

/// Squared bar lengths, the data compared by equivalence.
struct EdgeLengthProfile {
  int dim = 0;
  std::map<Edge, Rational> lengths;

  friend bool operator==(const EdgeLengthProfile&, const EdgeLengthProfile&) = default;
};

/// x -> matrix * x + translation with an invertible matrix.
class AffineMap {
 public:
  AffineMap(std::vector<std::vector<Rational>> matrix, Point translation);

  static AffineMap identity(int dim);

  int dim() const { return static_cast<int>(translation_.size()); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  const Point& translation() const { return translation_; }
  const Rational& determinant() const { return determinant_; }

  Point apply(const Point& x) const;
  AffineMap inverse() const;

 private:
  std::vector<std::vector<Rational>> matrix_;
  Point translation_;
  Rational determinant_;
};

/// The locus <normal, x> = offset, canonicalised so that the first nonzero
/// normal coordinate is 1. Equal hyperplanes compare equal structurally.
class Hyperplane {
 public:
  Hyperplane(Point normal, Rational offset);

  int dim() const { return static_cast<int>(normal_.size()); }
  const Point& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  /// <normal, x> - offset; zero exactly on the hyperplane.
  Rational evaluate(const Point& x) const;
  bool contains(const Point& x) const { return evaluate(x).is_zero(); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  Point normal_;
  Rational offset_;
};

Rational dot(const Point& a, const Point& b);
Rational squared_distance(const Point& a, const Point& b);

EdgeLengthProfile edge_length_profile(const Framework& f);

/// Same graph and every bar has the same length.
bool is_equivalent(const Framework& f, const Framework& g);

/// All pairwise vertex distances agree, edges or not.
bool is_congruent(const Framework& f, const Framework& g);
bool is_congruent(const Configuration& a, const Configuration& b);

Configuration apply_affine(const AffineMap& m, const Configuration& c);

/// Dimension of the affine span of `points` (-1 for an empty list).
int affine_dimension(const std::vector<Point>& points);

Hyperplane hyperplane_through(const std::vector<Point>& points);

Point reflect(const Point& x, const Hyperplane& h);

}  // namespace rigidkit
