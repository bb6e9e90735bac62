#include "rigidkit/rigidkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "rigidkit/constructions.hpp"
#include "rigidkit/document.hpp"
#include "rigidkit/enumeration.hpp"
#include "rigidkit/error.hpp"
#include "rigidkit/numeric.hpp"
#include "rigidkit/report.hpp"

struct rk_framework {
  rigidkit::FrameworkDocument doc;
};

namespace {

thread_local std::string g_last_error;

rk_status to_status(rigidkit::ErrorCode code) {
  using rigidkit::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RK_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return RK_ERROR_PARSE;
    case ErrorCode::DimensionMismatch: return RK_ERROR_DIMENSION_MISMATCH;
    case ErrorCode::GraphMismatch: return RK_ERROR_GRAPH_MISMATCH;
    case ErrorCode::OutOfRange: return RK_ERROR_OUT_OF_RANGE;
    case ErrorCode::DivisionByZero: return RK_ERROR_DIVISION_BY_ZERO;
    case ErrorCode::AffineSpanTooSmall: return RK_ERROR_AFFINE_SPAN_TOO_SMALL;
    case ErrorCode::NotAHyperplane: return RK_ERROR_NOT_A_HYPERPLANE;
    case ErrorCode::BaseNotComplete: return RK_ERROR_BASE_NOT_COMPLETE;
    case ErrorCode::PendantAttachedOutsideBase: return RK_ERROR_PENDANT_ATTACHED_OUTSIDE_BASE;
    case ErrorCode::EmptyPendants: return RK_ERROR_EMPTY_PENDANTS;
    case ErrorCode::ContinuumOfRealizations: return RK_ERROR_CONTINUUM_OF_REALIZATIONS;
    case ErrorCode::DegenerateSpan: return RK_ERROR_DEGENERATE_SPAN;
    case ErrorCode::TooFewVertices: return RK_ERROR_TOO_FEW_VERTICES;
  }
  return RK_ERROR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
rk_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RK_OK;
  } catch (const rigidkit::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RK_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RK_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RK_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw rigidkit::Error(rigidkit::ErrorCode::InvalidArgument, what);
}

std::optional<std::vector<rigidkit::VertexId>> base_from(const uint32_t* base, size_t len) {
  if (!base) return std::nullopt;
  return std::vector<rigidkit::VertexId>(base, base + len);
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "0.1.0"; }

const char* rk_status_name(rk_status status) {
  switch (status) {
    case RK_OK: return "OK";
    case RK_ERROR_INTERNAL: return "InternalError";
    default: break;
  }
  if (status >= RK_ERROR_INVALID_ARGUMENT && status <= RK_ERROR_TOO_FEW_VERTICES) {
    return rigidkit::error_code_name(static_cast<rigidkit::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* rk_last_error(void) { return g_last_error.c_str(); }

void rk_string_free(char* s) { std::free(s); }

int rk_max_dim(void) { return rigidkit::configured_max_dim(); }

rk_status rk_framework_parse(const char* json, rk_framework** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new rk_framework{rigidkit::parse_document(json)};
  });
}

rk_status rk_framework_generate(int dim, char label, int apply_affine, rk_framework** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto parsed = rigidkit::parse_config(std::string(1, label));
    require(parsed.has_value(), "configuration label must be one of p, q, r, s, t");
    *out = new rk_framework{rigidkit::generate_document(dim, *parsed, apply_affine != 0)};
  });
}

rk_status rk_framework_to_json(const rk_framework* f, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = copy_string(rigidkit::serialize_document(f->doc));
  });
}

void rk_framework_free(rk_framework* f) { delete f; }

rk_status rk_framework_dim(const rk_framework* f, int* out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = f->doc.framework.dim();
  });
}

rk_status rk_framework_vertex_count(const rk_framework* f, size_t* out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = f->doc.framework.graph().vertex_count();
  });
}

rk_status rk_framework_edge_count(const rk_framework* f, size_t* out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = f->doc.framework.graph().edge_count();
  });
}

rk_status rk_framework_squared_distance(const rk_framework* f, uint32_t u, uint32_t v, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    const auto& c = f->doc.framework.config();
    *out = copy_string(rigidkit::squared_distance(c.at(u), c.at(v)).str());
  });
}

rk_status rk_is_equivalent(const rk_framework* f, const rk_framework* g, int* out) {
  return guarded([&] {
    require(f && g && out, "null argument");
    *out = rigidkit::is_equivalent(f->doc.framework, g->doc.framework) ? 1 : 0;
  });
}

rk_status rk_is_congruent(const rk_framework* f, const rk_framework* g, int* out) {
  return guarded([&] {
    require(f && g && out, "null argument");
    *out = rigidkit::is_congruent(f->doc.framework, g->doc.framework) ? 1 : 0;
  });
}

rk_status rk_decide_global_rigidity(const rk_framework* f, const uint32_t* base, size_t base_len,
                                    rk_verdict* verdict, rk_framework** witness) {
  return guarded([&] {
    require(f && verdict, "null argument");
    auto ids = base_from(base, base_len);
    if (!ids) ids = f->doc.base;
    require(ids.has_value(), "no base given and the framework has none");
    const auto ps = rigidkit::detect_pendant_structure(f->doc.framework, *ids);
    const auto v = rigidkit::decide_global_rigidity(ps);
    switch (v.status) {
      case rigidkit::RigidityStatus::GloballyRigid: *verdict = RK_GLOBALLY_RIGID; break;
      case rigidkit::RigidityStatus::NotGloballyRigid: *verdict = RK_NOT_GLOBALLY_RIGID; break;
      case rigidkit::RigidityStatus::Flexible: *verdict = RK_FLEXIBLE; break;
    }
    if (witness) {
      *witness = v.witness ? new rk_framework{rigidkit::FrameworkDocument{
                                 rigidkit::Framework(f->doc.framework.graph(), *v.witness), ps.base}}
                           : nullptr;
    }
  });
}

rk_status rk_is_infinitesimally_rigid(const rk_framework* f, int* out) {
  return guarded([&] {
    require(f && out, "null argument");
    const auto& fw = f->doc.framework;
    *out = rigidkit::numeric::is_infinitesimally_rigid(fw.graph(), rigidkit::numeric::to_real(fw.config())) ? 1 : 0;
  });
}

rk_status rk_generic_global_rigidity(const rk_framework* f, int trials, uint64_t seed, int* certified) {
  return guarded([&] {
    require(f && certified, "null argument");
    const auto& fw = f->doc.framework;
    *certified = rigidkit::numeric::generic_global_rigidity(fw.graph(), fw.dim(), trials, seed).certified ? 1 : 0;
  });
}

rk_status rk_paper_verify(int dim, int max_dim, rk_format format, char** report, int* exit_code) {
  return guarded([&] {
    require(report && exit_code, "null argument");
    const auto fmt = format == RK_FORMAT_JSON ? rigidkit::OutputFormat::Json : rigidkit::OutputFormat::Text;
    const auto out = rigidkit::paper_verify(dim, fmt, max_dim);
    *report = copy_string(out.text);
    *exit_code = out.exit_code;
  });
}

rk_status rk_analyze(const rk_framework* f, const rk_framework* versus, const uint32_t* base, size_t base_len,
                     const char* checks, int trials, uint64_t seed, rk_format format, char** report,
                     rk_framework** witness, int* exit_code) {
  return guarded([&] {
    require(f && checks && report && exit_code, "null argument");
    rigidkit::AnalyzeOptions opt;
    opt.checks = rigidkit::parse_checks(checks);
    if (versus) opt.versus = versus->doc.framework;
    opt.base = base_from(base, base_len);
    opt.trials = trials;
    opt.seed = seed;
    opt.format = format == RK_FORMAT_JSON ? rigidkit::OutputFormat::Json : rigidkit::OutputFormat::Text;
    auto out = rigidkit::analyze(f->doc, opt);
    *report = copy_string(out.text);
    *exit_code = out.exit_code;
    if (witness) *witness = out.witness ? new rk_framework{std::move(*out.witness)} : nullptr;
  });
}

rk_status rk_render_svg(const rk_framework* f, int axis_x, int axis_y, char** svg) {
  return guarded([&] {
    require(f && svg, "null argument");
    *svg = copy_string(rigidkit::render_svg(f->doc.framework, axis_x, axis_y));
  });
}

}  // extern "C"
