#include "rigidkit/geometry.hpp"

#include <algorithm>
#include <string>

#include "exact_linalg.hpp"
#include "rigidkit/error.hpp"

namespace rigidkit {
namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": dimension " + std::to_string(a) +
                                                  " vs " + std::to_string(b));
  }
}

}  // namespace

Configuration::Configuration(int dim, std::map<VertexId, Point> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw Error(ErrorCode::InvalidArgument, "configuration dimension must be positive");
  for (const auto& [id, p] : points_) {
    if (id == 0) throw Error(ErrorCode::InvalidArgument, "vertex ids must be positive");
    if (p.size() != static_cast<std::size_t>(dim_)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vertex " + std::to_string(id) + " has " + std::to_string(p.size()) +
                      " coordinates, expected " + std::to_string(dim_));
    }
  }
}

const Point& Configuration::at(VertexId v) const {
  const auto it = points_.find(v);
  if (it == points_.end()) {
    throw Error(ErrorCode::InvalidArgument, "no point for vertex " + std::to_string(v));
  }
  return it->second;
}

std::vector<VertexId> Configuration::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(points_.size());
  for (const auto& [id, p] : points_) ids.push_back(id);
  return ids;
}

Configuration Configuration::with_point(VertexId v, Point p) const {
  require_same_dim(p.size(), static_cast<std::size_t>(dim_), "with_point");
  Configuration out = *this;
  const auto it = out.points_.find(v);
  if (it == out.points_.end()) {
    throw Error(ErrorCode::InvalidArgument, "no point for vertex " + std::to_string(v));
  }
  it->second = std::move(p);
  return out;
}

Framework::Framework(Graph graph, Configuration config)
    : graph_(std::move(graph)), config_(std::move(config)) {
  if (config_.vertex_ids() != graph_.vertices()) {
    throw Error(ErrorCode::GraphMismatch, "configuration does not cover exactly the graph's vertices");
  }
}

AffineMap::AffineMap(std::vector<std::vector<Rational>> matrix, Point translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  const std::size_t d = translation_.size();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "affine map dimension must be positive");
  require_same_dim(matrix_.size(), d, "affine map rows");
  for (const auto& row : matrix_) require_same_dim(row.size(), d, "affine map columns");
  determinant_ = detail::determinant(matrix_);
  if (determinant_.is_zero()) throw Error(ErrorCode::InvalidArgument, "affine map is not invertible");
}

AffineMap AffineMap::identity(int dim) {
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
  for (int i = 0; i < dim; ++i) m[i][i] = 1;
  return AffineMap(std::move(m), Point(dim));
}

Point AffineMap::apply(const Point& x) const {
  require_same_dim(x.size(), translation_.size(), "apply_affine");
  Point y = translation_;
  for (std::size_t r = 0; r < y.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (!matrix_[r][c].is_zero()) y[r] += matrix_[r][c] * x[c];
    }
  }
  return y;
}

AffineMap AffineMap::inverse() const {
  auto inv = detail::inverse(matrix_);
  Point t(translation_.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t.size(); ++c) t[r] -= inv[r][c] * translation_[c];
  }
  return AffineMap(std::move(inv), std::move(t));
}

Hyperplane::Hyperplane(Point normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  const auto lead = std::find_if(normal_.begin(), normal_.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == normal_.end()) throw Error(ErrorCode::InvalidArgument, "hyperplane normal is zero");
  const Rational scale = *lead;
  for (Rational& c : normal_) c /= scale;
  offset_ /= scale;
}

Rational Hyperplane::evaluate(const Point& x) const { return dot(normal_, x) - offset_; }

Rational dot(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational squared_distance(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "squared_distance");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

EdgeLengthProfile edge_length_profile(const Framework& f) {
  EdgeLengthProfile out;
  out.dim = f.dim();
  for (const Edge& e : f.graph().edges()) {
    out.lengths.emplace(e, squared_distance(f.config().at(e.u), f.config().at(e.v)));
  }
  return out;
}

bool is_equivalent(const Framework& f, const Framework& g) {
  if (f.graph() != g.graph()) throw Error(ErrorCode::GraphMismatch, "frameworks have different graphs");
  require_same_dim(f.dim(), g.dim(), "is_equivalent");
  for (const Edge& e : f.graph().edges()) {
    if (squared_distance(f.config().at(e.u), f.config().at(e.v)) !=
        squared_distance(g.config().at(e.u), g.config().at(e.v))) {
      return false;
    }
  }
  return true;
}

bool is_congruent(const Configuration& a, const Configuration& b) {
  require_same_dim(a.dim(), b.dim(), "is_congruent");
  if (a.vertex_ids() != b.vertex_ids()) {
    throw Error(ErrorCode::GraphMismatch, "configurations have different vertex sets");
  }
  std::vector<const Point*> pa;
  std::vector<const Point*> pb;
  for (const auto& [id, p] : a.points()) pa.push_back(&p);
  for (const auto& [id, p] : b.points()) pb.push_back(&p);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    for (std::size_t j = i + 1; j < pa.size(); ++j) {
      if (squared_distance(*pa[i], *pa[j]) != squared_distance(*pb[i], *pb[j])) return false;
    }
  }
  return true;
}

bool is_congruent(const Framework& f, const Framework& g) {
  if (f.graph().vertices() != g.graph().vertices()) {
    throw Error(ErrorCode::GraphMismatch, "frameworks have different vertex sets");
  }
  return is_congruent(f.config(), g.config());
}

Configuration apply_affine(const AffineMap& m, const Configuration& c) {
  require_same_dim(m.dim(), c.dim(), "apply_affine");
  std::map<VertexId, Point> mapped;
  for (const auto& [id, p] : c.points()) mapped.emplace(id, m.apply(p));
  return Configuration(c.dim(), std::move(mapped));
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  const std::size_t d = points.front().size();
  detail::RationalMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_same_dim(points[i].size(), d, "affine_dimension");
    Point row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(row));
  }
  return static_cast<int>(detail::reduced_row_echelon(std::move(diffs), d).pivots.size());
}

Hyperplane hyperplane_through(const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "hyperplane_through: no points");
  const std::size_t d = points.front().size();
  detail::RationalMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_same_dim(points[i].size(), d, "hyperplane_through");
    Point row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(row));
  }
  const detail::RowEchelon e = detail::reduced_row_echelon(std::move(diffs), d);
  const std::size_t rank = e.pivots.size();
  if (rank == d) {
    throw Error(ErrorCode::NotAHyperplane, "points affinely span all of R^" + std::to_string(d));
  }
  if (rank + 1 < d) {
    throw Error(ErrorCode::AffineSpanTooSmall,
                "points span affine dimension " + std::to_string(rank) + " < " + std::to_string(d - 1));
  }
  // One free column; the normal spans the kernel of the difference matrix.
  std::size_t free_col = 0;
  for (std::size_t i = 0; free_col < d && i < rank && e.pivots[i] == free_col; ++i) ++free_col;
  Point normal(d);
  normal[free_col] = 1;
  for (std::size_t r = 0; r < rank; ++r) normal[e.pivots[r]] = -e.rows[r][free_col];
  Rational offset = dot(normal, points.front());
  return Hyperplane(std::move(normal), std::move(offset));
}

Point reflect(const Point& x, const Hyperplane& h) {
  require_same_dim(x.size(), static_cast<std::size_t>(h.dim()), "reflect");
  const Rational t = Rational(2) * h.evaluate(x) / dot(h.normal(), h.normal());
  Point y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= t * h.normal()[i];
  return y;
}

}  // namespace rigidkit
