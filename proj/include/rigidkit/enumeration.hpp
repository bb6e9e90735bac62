#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rigidkit/geometry.hpp"

namespace rigidkit {

// Exact realization enumeration for frameworks made of a complete base plus
// pendant vertices. A pendant whose base attachments span a hyperplane has
// two positions relative to the base (itself and its mirror image); one that
// spans all of R^d has one. Edges between pendants are not used to place
// anything; they only filter the enumerated realizations.

struct PendantStructure {
  Framework framework;
  std::vector<VertexId> base;      // sorted
  std::vector<VertexId> pendants;  // sorted, complement of base
  std::set<Edge> filter_edges;     // pendant-pendant edges

  /// The framework's graph without the filter edges.
  Graph reduced_graph() const { return framework.graph().without_edges(filter_edges); }
  std::vector<VertexId> attachments(VertexId pendant) const;
};

PendantStructure detect_pendant_structure(const Framework& f, std::span<const VertexId> base);

struct RealizationClass {
  Configuration config;
  std::vector<bool> reflection_mask;  // indexed like PendantStructure::pendants
};

/// One class per reflection mask, in binary-counting order with the first
/// mirrored pendant as the most significant bit. Throws
/// ContinuumOfRealizations when a pendant's attachments span less than a
/// hyperplane.
std::vector<RealizationClass> enumerate_realizations(const PendantStructure& ps);

enum class RigidityStatus { GloballyRigid, NotGloballyRigid, Flexible };

const char* status_name(RigidityStatus s);

struct RigidityVerdict {
  RigidityStatus status = RigidityStatus::Flexible;
  std::optional<Configuration> witness;  // present iff NotGloballyRigid
  std::size_t realizations = 0;          // reduced-graph classes enumerated
  std::vector<RealizationClass> survivors;  // distinct up to congruence
};

RigidityVerdict decide_global_rigidity(const PendantStructure& ps);

}  // namespace rigidkit
