#pragma once

#include <json.hpp>

#include "rigidkit/document.hpp"

namespace rigidkit::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json document_to_json(const FrameworkDocument& doc);
ordered_json point_to_json(const Point& p);

}  // namespace rigidkit::detail
