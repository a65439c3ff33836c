#pragma once

#include "errors.hpp"

#include <cmath>
#include <string>

namespace fracscatter
{
/// Model parameters: dispersion exponent rho, potential decay gamma and
/// coupling lambda, and the spectral support cutoff epsilon.
///
/// gamma in (0, 1] is the long-range regime; gamma > 1 runs as a short-range
/// control. rho = 1/2 is the degenerate relativistic case and is only
/// meaningful for modifier experiments.
struct PhysicsParams
{
  double rho     = 0.75;
  double gamma   = 1.0;
  double lambda  = 1.0;
  double epsilon = 0.5;

  bool operator==(PhysicsParams const &) const = default;
};

inline void validate(PhysicsParams const &p)
{
  if (!(p.rho >= 0.5 && p.rho <= 1.0))
    throw config_error("rho must lie in [0.5, 1], got " + std::to_string(p.rho));
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma))
    throw config_error("gamma must be positive, got " + std::to_string(p.gamma));
  if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon))
    throw config_error("epsilon must be positive, got " + std::to_string(p.epsilon));
  if (!std::isfinite(p.lambda))
    throw config_error("lambda must be finite");
}

} // namespace fracscatter
