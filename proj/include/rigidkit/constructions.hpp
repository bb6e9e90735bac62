#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rigidkit/geometry.hpp"

namespace rigidkit {

// The counterexample family: for every d >= 2 a framework on 2^(d-1)+3
// vertices whose global rigidity flips under a contraction along axis 2.
//
// Vertex layout: 1 is the apex, 2 and 3 are pendants, and the pairs
// (2j, 2j+1) for j = 2 .. 2^(d-2)+1 sit at (-1, 0, w) and (1, 0, w) where w
// ranges over the vertices of the (d-2)-cube {-1,1}^(d-2).

inline constexpr int kDefaultMaxDim = 12;

/// Dimension cap for commands; RIGIDKIT_MAX_DIM overrides the default of 12.
int configured_max_dim();

enum class PaperConfig { P, Q, R, S, T };

const char* config_name(PaperConfig label);
/// Case-insensitive single letter.
std::optional<PaperConfig> parse_config(std::string_view text);

struct FamilyInstance {
  int dim = 0;
  Graph full;     // reduced + {2,3}
  Graph reduced;  // complete base, vertex 2 to 1 and evens, vertex 3 to 1 and odds
  std::vector<VertexId> base;  // 1, 4, 5, ..., 2^(d-1)+3
  std::array<VertexId, 2> pendants{2, 3};
};

/// All 2^k sign vectors in binary-counting order: +1 is bit 0 and the first
/// coordinate is the most significant bit. k = 0 gives one empty vector.
std::vector<Point> hypercube_vertices(int k);

FamilyInstance family_instance(int d);

/// Base joints use hypercube_vertices(d - 2) in order.
Configuration paper_configuration(int d, PaperConfig label);

/// Same, with the cube vertices assigned in the given order instead.
Configuration paper_configuration(int d, PaperConfig label, std::span<const Point> cube_order);

/// Identity except for 1/2 in position (2,2).
AffineMap paper_affine_map(int d);

/// Mirror hyperplanes for pendants 2 and 3: through joint 1 and the even
/// (resp. odd) base joints of p, or of their images under `image_of`.
std::pair<Hyperplane, Hyperplane> symmetry_hyperplanes(int d, const std::optional<AffineMap>& image_of = std::nullopt);

/// Attachment vertices of a pendant in the family: 1 plus evens for 2, 1 plus odds for 3.
std::vector<VertexId> pendant_attachments(int d, VertexId pendant);

}  // namespace rigidkit
