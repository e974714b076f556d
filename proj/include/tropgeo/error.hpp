#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tropgeo {

/// Error categories used across the library. The CLI maps these onto its
/// exit-code contract (parse errors vs. internal precondition failures).
enum class errc {
  zero_vector,
  unbounded_extent,
  degenerate_edge,
  unknown_vertex,
  vertex_on_boundary,
  non_transversal,
  not_saturated,
  bad_dimension,
  degenerate_slice,
  precondition_violated,
  stuck_vertex,
  apex_outside,
  collar_failure,
  skeleton_ray,
  degenerate_curve,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_vector: return "ZeroVector";
    case errc::unbounded_extent: return "UnboundedExtent";
    case errc::degenerate_edge: return "DegenerateEdge";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::vertex_on_boundary: return "VertexOnBoundary";
    case errc::non_transversal: return "NonTransversal";
    case errc::not_saturated: return "NotSaturated";
    case errc::bad_dimension: return "BadDimension";
    case errc::degenerate_slice: return "DegenerateSlice";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::stuck_vertex: return "StuckVertex";
    case errc::apex_outside: return "ApexOutside";
    case errc::collar_failure: return "CollarFailure";
    case errc::skeleton_ray: return "SkeletonRay";
    case errc::degenerate_curve: return "DegenerateCurve";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class trop_error : public std::runtime_error {
 public:
  trop_error(errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + std::move(msg)),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw trop_error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace tropgeo
