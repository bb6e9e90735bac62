#include "rigidkit/constructions.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "rigidkit/error.hpp"

namespace rigidkit {
namespace {

// Keeps 2^(d-1)+3 comfortably inside VertexId.
constexpr int kHardMaxDim = 30;

void require_family_dim(int d) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "family dimension must be >= 2, got " + std::to_string(d));
  if (d > kHardMaxDim) {
    throw Error(ErrorCode::OutOfRange, "family dimension must be <= " + std::to_string(kHardMaxDim));
  }
}

VertexId last_vertex(int d) { return (VertexId{1} << (d - 1)) + 3; }

// Number of (2j, 2j+1) pairs, one per cube vertex.
VertexId pair_count(int d) { return VertexId{1} << (d - 2); }

Point planar(int d, Rational x, Rational y) {
  Point p(d);
  p[0] = std::move(x);
  p[1] = std::move(y);
  return p;
}

}  // namespace

int configured_max_dim() {
  if (const char* env = std::getenv("RIGIDKIT_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= kHardMaxDim) return static_cast<int>(v);
  }
  return kDefaultMaxDim;
}

const char* config_name(PaperConfig label) {
  switch (label) {
    case PaperConfig::P: return "p";
    case PaperConfig::Q: return "q";
    case PaperConfig::R: return "r";
    case PaperConfig::S: return "s";
    case PaperConfig::T: return "t";
  }
  return "?";
}

std::optional<PaperConfig> parse_config(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (std::tolower(static_cast<unsigned char>(text.front()))) {
    case 'p': return PaperConfig::P;
    case 'q': return PaperConfig::Q;
    case 'r': return PaperConfig::R;
    case 's': return PaperConfig::S;
    case 't': return PaperConfig::T;
    default: return std::nullopt;
  }
}

std::vector<Point> hypercube_vertices(int k) {
  if (k < 0) throw Error(ErrorCode::OutOfRange, "hypercube dimension must be >= 0");
  if (k > kHardMaxDim) throw Error(ErrorCode::OutOfRange, "hypercube dimension too large");
  const std::size_t count = std::size_t{1} << k;
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    Point w(k);
    for (int c = 0; c < k; ++c) {
      const bool bit = (index >> (k - 1 - c)) & 1U;
      w[c] = bit ? -1 : 1;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<VertexId> pendant_attachments(int d, VertexId pendant) {
  require_family_dim(d);
  if (pendant != 2 && pendant != 3) {
    throw Error(ErrorCode::InvalidArgument, "family pendants are 2 and 3");
  }
  std::vector<VertexId> out{1};
  for (VertexId k = 2; k <= pair_count(d) + 1; ++k) out.push_back(2 * k + (pendant - 2));
  return out;
}

FamilyInstance family_instance(int d) {
  require_family_dim(d);
  FamilyInstance fi;
  fi.dim = d;
  const VertexId n = last_vertex(d);

  std::vector<VertexId> vertices;
  for (VertexId v = 1; v <= n; ++v) vertices.push_back(v);
  fi.base.push_back(1);
  for (VertexId v = 4; v <= n; ++v) fi.base.push_back(v);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < fi.base.size(); ++i) {
    for (std::size_t j = i + 1; j < fi.base.size(); ++j) edges.emplace_back(fi.base[i], fi.base[j]);
  }
  for (VertexId pendant : fi.pendants) {
    for (VertexId a : pendant_attachments(d, pendant)) edges.emplace_back(pendant, a);
  }
  fi.reduced = Graph(vertices, edges);
  edges.emplace_back(2, 3);
  fi.full = Graph(std::move(vertices), edges);
  return fi;
}

AffineMap paper_affine_map(int d) {
  require_family_dim(d);
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  m[1][1] = Rational(1, 2);
  return AffineMap(std::move(m), Point(d));
}

Configuration paper_configuration(int d, PaperConfig label) {
  require_family_dim(d);
  const auto cube = hypercube_vertices(d - 2);
  return paper_configuration(d, label, cube);
}

Configuration paper_configuration(int d, PaperConfig label, std::span<const Point> cube_order) {
  require_family_dim(d);
  if (cube_order.size() != pair_count(d)) {
    throw Error(ErrorCode::InvalidArgument, "cube order must list " + std::to_string(pair_count(d)) + " vertices");
  }

  std::map<VertexId, Point> points;
  points.emplace(1, planar(d, 0, 2));
  points.emplace(2, planar(d, Rational(-1, 4), Rational(1, 2)));
  points.emplace(3, planar(d, Rational(21, 20), Rational(9, 10)));
  for (VertexId j = 2; j <= pair_count(d) + 1; ++j) {
    const Point& w = cube_order[j - 2];
    if (w.size() != static_cast<std::size_t>(d - 2)) {
      throw Error(ErrorCode::DimensionMismatch, "cube vertex has wrong dimension");
    }
    Point left = planar(d, -1, 0);
    Point right = planar(d, 1, 0);
    std::copy(w.begin(), w.end(), left.begin() + 2);
    std::copy(w.begin(), w.end(), right.begin() + 2);
    points.emplace(2 * j, std::move(left));
    points.emplace(2 * j + 1, std::move(right));
  }
  Configuration p(d, std::move(points));

  switch (label) {
    case PaperConfig::P:
      return p;
    case PaperConfig::Q:
      return p.with_point(2, planar(d, Rational(-21, 20), Rational(9, 10)))
          .with_point(3, planar(d, Rational(1, 4), Rational(1, 2)));
    case PaperConfig::R:
    case PaperConfig::S:
    case PaperConfig::T:
      break;
  }

  // r, s, t live in the contracted frame and differ from Ap by mirroring
  // pendant 3 (r), both pendants (s) or pendant 2 (t).
  const AffineMap a = paper_affine_map(d);
  const Configuration ap = apply_affine(a, p);
  std::vector<Point> mirror2;
  std::vector<Point> mirror3;
  for (VertexId v : pendant_attachments(d, 2)) mirror2.push_back(ap.at(v));
  for (VertexId v : pendant_attachments(d, 3)) mirror3.push_back(ap.at(v));
  const Point x2 = reflect(ap.at(2), hyperplane_through(mirror2));
  const Point x3 = reflect(ap.at(3), hyperplane_through(mirror3));

  switch (label) {
    case PaperConfig::R: return ap.with_point(3, x3);
    case PaperConfig::S: return ap.with_point(2, x2).with_point(3, x3);
    case PaperConfig::T: return ap.with_point(2, x2);
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown configuration label");
}

std::pair<Hyperplane, Hyperplane> symmetry_hyperplanes(int d, const std::optional<AffineMap>& image_of) {
  Configuration c = paper_configuration(d, PaperConfig::P);
  if (image_of) c = apply_affine(*image_of, c);
  auto through = [&](VertexId pendant) {
    std::vector<Point> pts;
    for (VertexId v : pendant_attachments(d, pendant)) pts.push_back(c.at(v));
    return hyperplane_through(pts);
  };
  return {through(2), through(3)};
}

}  // namespace rigidkit
