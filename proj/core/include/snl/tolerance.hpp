#pragma once

#include "snl/errors.hpp"

namespace snl {

// Absolute/relative slack used by every tolerance-based decision.
struct ToleranceConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;

  // abs_tol + rel_tol * scale
  [[nodiscard]] double threshold(double scale) const { return abs_tol + rel_tol * scale; }

  void validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
      throw PreconditionError("tolerances must be non-negative");
    }
  }
};

// Relative rank threshold for range projections, polar pseudo-inverses and
// numerical rank.
inline constexpr double kRankTol = 1e-10;
// Eigenvalues within this fraction of the operator norm of a spectral cut are
// treated as equal to it.
inline constexpr double kEigTieTol = 1e-10;

}  // namespace snl
