#include "rigidkit/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rigidkit/error.hpp"

namespace rigidkit {
namespace {

// 2^24 classes is already far beyond anything worth enumerating exactly.
constexpr std::size_t kMaxMirroredPendants = 24;

struct PendantPositions {
  Point original;
  std::optional<Point> mirrored;
};

}  // namespace

const char* status_name(RigidityStatus s) {
  switch (s) {
    case RigidityStatus::GloballyRigid: return "GloballyRigid";
    case RigidityStatus::NotGloballyRigid: return "NotGloballyRigid";
    case RigidityStatus::Flexible: return "Flexible";
  }
  return "?";
}

std::vector<VertexId> PendantStructure::attachments(VertexId pendant) const {
  std::vector<VertexId> out;
  for (VertexId n : framework.graph().neighbors(pendant)) {
    if (std::binary_search(base.begin(), base.end(), n)) out.push_back(n);
  }
  return out;
}

PendantStructure detect_pendant_structure(const Framework& f, std::span<const VertexId> base_ids) {
  if (base_ids.empty()) throw Error(ErrorCode::InvalidArgument, "base must not be empty");
  std::vector<VertexId> base(base_ids.begin(), base_ids.end());
  std::sort(base.begin(), base.end());
  if (std::adjacent_find(base.begin(), base.end()) != base.end()) {
    throw Error(ErrorCode::InvalidArgument, "base lists a vertex twice");
  }
  for (VertexId v : base) {
    if (!f.graph().has_vertex(v)) {
      throw Error(ErrorCode::InvalidArgument, "base vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  if (!f.graph().is_clique(base)) {
    throw Error(ErrorCode::BaseNotComplete, "base vertices do not induce a complete subgraph");
  }

  std::vector<VertexId> pendants;
  std::set_difference(f.graph().vertices().begin(), f.graph().vertices().end(), base.begin(), base.end(),
                      std::back_inserter(pendants));
  if (pendants.empty()) throw Error(ErrorCode::EmptyPendants, "every vertex is in the base");

  std::set<Edge> filter;
  for (const Edge& e : f.graph().edges()) {
    if (std::binary_search(pendants.begin(), pendants.end(), e.u) &&
        std::binary_search(pendants.begin(), pendants.end(), e.v)) {
      filter.insert(e);
    }
  }

  PendantStructure ps{f, std::move(base), std::move(pendants), std::move(filter)};
  for (VertexId p : ps.pendants) {
    if (ps.attachments(p).empty()) {
      throw Error(ErrorCode::PendantAttachedOutsideBase,
                  "pendant " + std::to_string(p) + " is attached only through other pendants");
    }
  }
  return ps;
}

std::vector<RealizationClass> enumerate_realizations(const PendantStructure& ps) {
  const Configuration& input = ps.framework.config();
  const int d = input.dim();

  std::vector<PendantPositions> positions;
  std::vector<std::size_t> mirrored;  // indices into ps.pendants
  for (std::size_t i = 0; i < ps.pendants.size(); ++i) {
    const VertexId pendant = ps.pendants[i];
    std::vector<Point> anchors;
    for (VertexId a : ps.attachments(pendant)) anchors.push_back(input.at(a));
    const int span = affine_dimension(anchors);
    if (span < d - 1) {
      throw Error(ErrorCode::ContinuumOfRealizations,
                  "attachments of pendant " + std::to_string(pendant) + " span affine dimension " +
                      std::to_string(span) + " < " + std::to_string(d - 1));
    }
    PendantPositions pos{input.at(pendant), std::nullopt};
    if (span == d - 1) {
      Point image = reflect(pos.original, hyperplane_through(anchors));
      if (image != pos.original) {
        pos.mirrored = std::move(image);
        mirrored.push_back(i);
      }
    }
    positions.push_back(std::move(pos));
  }
  if (mirrored.size() > kMaxMirroredPendants) {
    throw Error(ErrorCode::OutOfRange, std::to_string(mirrored.size()) + " mirrored pendants exceed the limit of " +
                                           std::to_string(kMaxMirroredPendants));
  }

  const Graph reduced = ps.reduced_graph();
  const Framework reference(reduced, input);
  const std::size_t k = mirrored.size();
  std::vector<RealizationClass> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
    std::vector<bool> mask(ps.pendants.size(), false);
    Configuration c = input;
    for (std::size_t b = 0; b < k; ++b) {
      if ((m >> (k - 1 - b)) & 1U) {
        const std::size_t i = mirrored[b];
        mask[i] = true;
        c = c.with_point(ps.pendants[i], *positions[i].mirrored);
      }
    }
    if (!is_equivalent(reference, Framework(reduced, c))) {
      throw std::logic_error("enumerated realization is not equivalent to the input");
    }
    out.push_back({std::move(c), std::move(mask)});
  }
  return out;
}

RigidityVerdict decide_global_rigidity(const PendantStructure& ps) {
  RigidityVerdict verdict;
  std::vector<RealizationClass> classes;
  try {
    classes = enumerate_realizations(ps);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ContinuumOfRealizations) throw;
    verdict.status = RigidityStatus::Flexible;
    return verdict;
  }
  verdict.realizations = classes.size();

  const Configuration& input = ps.framework.config();
  for (RealizationClass& rc : classes) {
    const bool keeps_filter = std::all_of(ps.filter_edges.begin(), ps.filter_edges.end(), [&](const Edge& e) {
      return squared_distance(rc.config.at(e.u), rc.config.at(e.v)) ==
             squared_distance(input.at(e.u), input.at(e.v));
    });
    if (!keeps_filter) continue;
    const bool seen = std::any_of(verdict.survivors.begin(), verdict.survivors.end(),
                                  [&](const RealizationClass& s) { return is_congruent(s.config, rc.config); });
    if (!seen) verdict.survivors.push_back(std::move(rc));
  }

  verdict.status = RigidityStatus::GloballyRigid;
  for (const RealizationClass& s : verdict.survivors) {
    if (is_congruent(s.config, input)) continue;
    const Framework candidate(ps.framework.graph(), s.config);
    if (!is_equivalent(ps.framework, candidate)) {
      throw std::logic_error("surviving realization is not equivalent to the input");
    }
    verdict.status = RigidityStatus::NotGloballyRigid;
    verdict.witness = s.config;
    break;
  }
  return verdict;
}

}  // namespace rigidkit
