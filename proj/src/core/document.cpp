#include "rigidkit/document.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "document_json.hpp"
#include "rigidkit/error.hpp"

namespace rigidkit {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

VertexId parse_id(const json& j, const char* where) {
  if (!j.is_number_integer()) fail(std::string(where) + ": vertex id must be an integer");
  const auto v = j.get<long long>();
  if (v <= 0 || v > std::numeric_limits<VertexId>::max()) {
    fail(std::string(where) + ": vertex id out of range: " + std::to_string(v));
  }
  return static_cast<VertexId>(v);
}

Rational parse_coord(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("coordinates must be rational strings such as \"-21/20\" or integers");
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

namespace detail {

ordered_json point_to_json(const Point& p) {
  ordered_json coords = ordered_json::array();
  for (const Rational& c : p) coords.push_back(c.str());
  return coords;
}

ordered_json document_to_json(const FrameworkDocument& doc) {
  const Framework& f = doc.framework;
  ordered_json out;
  out["dim"] = f.dim();
  ordered_json vertices = ordered_json::array();
  for (const auto& [id, p] : f.config().points()) {
    ordered_json v;
    v["id"] = id;
    v["coords"] = point_to_json(p);
    vertices.push_back(std::move(v));
  }
  out["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const Edge& e : f.graph().edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (doc.base) out["base"] = *doc.base;
  return out;
}

}  // namespace detail

FrameworkDocument parse_document(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) fail("missing integer \"dim\"");
  const long long dim = j["dim"].get<long long>();
  if (dim < 1 || dim > 1024) fail("\"dim\" must be between 1 and 1024");
  if (!j.contains("vertices") || !j["vertices"].is_array()) fail("missing array \"vertices\"");

  std::map<VertexId, Point> points;
  for (const json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("coords")) {
      fail("each vertex needs \"id\" and \"coords\"");
    }
    const VertexId id = parse_id(v["id"], "vertices");
    const json& coords = v["coords"];
    if (!coords.is_array() || coords.size() != static_cast<std::size_t>(dim)) {
      fail("vertex " + std::to_string(id) + " must have exactly " + std::to_string(dim) + " coordinates");
    }
    Point p;
    for (const json& c : coords) p.push_back(parse_coord(c));
    if (!points.emplace(id, std::move(p)).second) fail("duplicate vertex id " + std::to_string(id));
  }

  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail("\"edges\" must be an array");
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) fail("each edge must be a pair of ids");
      const VertexId a = parse_id(e[0], "edges");
      const VertexId b = parse_id(e[1], "edges");
      if (a == b) fail("self-loop at vertex " + std::to_string(a));
      if (!points.count(a) || !points.count(b)) {
        fail("edge [" + std::to_string(a) + "," + std::to_string(b) + "] references an unknown vertex");
      }
      edges.emplace_back(a, b);
    }
  }

  std::optional<std::vector<VertexId>> base;
  if (j.contains("base") && !j["base"].is_null()) {
    if (!j["base"].is_array()) fail("\"base\" must be an array of ids");
    base.emplace();
    for (const json& b : j["base"]) {
      const VertexId id = parse_id(b, "base");
      if (!points.count(id)) fail("base vertex " + std::to_string(id) + " is not a vertex");
      base->push_back(id);
    }
  }

  std::vector<VertexId> ids;
  for (const auto& [id, p] : points) ids.push_back(id);
  Configuration config(static_cast<int>(dim), std::move(points));
  return FrameworkDocument{Framework(Graph(std::move(ids), edges), std::move(config)), std::move(base)};
}

std::string serialize_document(const FrameworkDocument& doc) {
  return detail::document_to_json(doc).dump(2) + "\n";
}

std::string render_svg(const Framework& f, int axis_x, int axis_y) {
  const int d = f.dim();
  if (axis_x < 1 || axis_y < 1 || axis_x > d || axis_y > d || axis_x == axis_y) {
    throw Error(ErrorCode::InvalidArgument, "axes must be two distinct indices in 1.." + std::to_string(d));
  }

  struct Joint {
    VertexId id;
    double x;
    double y;
  };
  std::vector<Joint> joints;
  for (const auto& [id, p] : f.config().points()) {
    joints.push_back({id, p[axis_x - 1].to_double(), -p[axis_y - 1].to_double()});
  }

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!joints.empty()) {
    min_x = max_x = joints.front().x;
    min_y = max_y = joints.front().y;
  }
  for (const Joint& j : joints) {
    min_x = std::min(min_x, j.x);
    max_x = std::max(max_x, j.x);
    min_y = std::min(min_y, j.y);
    max_y = std::max(max_y, j.y);
  }
  double extent = std::max(max_x - min_x, max_y - min_y);
  if (extent <= 0) extent = 1.0;
  const double margin = 0.1 * extent;
  const double radius = 0.03 * extent;
  const double stroke = 0.006 * extent;

  auto lookup = [&](VertexId id) -> const Joint& {
    return *std::lower_bound(joints.begin(), joints.end(), id,
                             [](const Joint& j, VertexId v) { return j.id < v; });
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fixed6(min_x - margin) + " " +
         fixed6(min_y - margin) + " " + fixed6(max_x - min_x + 2 * margin) + " " +
         fixed6(max_y - min_y + 2 * margin) + "\" width=\"600\" height=\"600\">\n";
  out += "  <g stroke=\"black\" stroke-width=\"" + fixed6(stroke) + "\">\n";
  for (const Edge& e : f.graph().edges()) {
    const Joint& a = lookup(e.u);
    const Joint& b = lookup(e.v);
    out += "    <line x1=\"" + fixed6(a.x) + "\" y1=\"" + fixed6(a.y) + "\" x2=\"" + fixed6(b.x) + "\" y2=\"" +
           fixed6(b.y) + "\"/>\n";
  }
  out += "  </g>\n";
  out += "  <g font-family=\"sans-serif\" font-size=\"" + fixed6(1.2 * radius) +
         "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (const Joint& j : joints) {
    out += "    <circle cx=\"" + fixed6(j.x) + "\" cy=\"" + fixed6(j.y) + "\" r=\"" + fixed6(radius) +
           "\" fill=\"white\" stroke=\"black\" stroke-width=\"" + fixed6(stroke) + "\"/>\n";
    out += "    <text x=\"" + fixed6(j.x) + "\" y=\"" + fixed6(j.y) + "\">" + std::to_string(j.id) + "</text>\n";
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace rigidkit
