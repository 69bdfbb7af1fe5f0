#pragma once

#include <stdexcept>
#include <string>

namespace tuttet {

enum class ErrorCode {
  InvalidMesh,
  FaceOverShared,
  NonManifoldEdge,
  NonOrientable,
  DisconnectedDual,
  DegenerateFace,
  NotConvex,
  ProjectionCollision,
  NotConvexAfterProjection,
  BadUserWeights,
  SingularSystem,
  ParseError,
  IndexOutOfRange,
  InconsistentCounts,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Strictness thresholds for floating-point geometry. eps_geometric is
// relative to the bounding-box diagonal, eps_volume to its cube.
struct Tolerances {
  double eps_geometric = 1e-9;
  double eps_volume = 1e-12;
  double min_weight = 1e-9;
  double solve_residual = 1e-10;
  double volume_gap = 1e-9;
};

}  // namespace tuttet
