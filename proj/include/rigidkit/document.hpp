#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidkit/geometry.hpp"

namespace rigidkit {

// JSON interchange format:
//   {"dim": 2,
//    "vertices": [{"id": 1, "coords": ["0", "2"]}, ...],
//    "edges": [[1, 2], ...],
//    "base": [1, 4, 5]}            (optional)
// Coordinates are rational strings ("-21/20") or exact decimals ("0.25").
struct FrameworkDocument {
  Framework framework;
  std::optional<std::vector<VertexId>> base;
};

/// Throws Error(Parse) on malformed input.
FrameworkDocument parse_document(std::string_view json_text);

/// Pretty-printed, deterministic, with a trailing newline.
std::string serialize_document(const FrameworkDocument& doc);

/// Planar projection onto coordinate axes (1-based) as a standalone SVG.
std::string render_svg(const Framework& f, int axis_x = 1, int axis_y = 2);

}  // namespace rigidkit
