#pragma once

#include "errors.hpp"
#include "params.hpp"

#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace fracscatter
{
inline double euclidean_norm(std::span<double const> v)
{
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

/// |xi|^{2 rho} / (2 rho); zero at the origin.
inline double omega_symbol(double xi_norm, double rho)
{
  if (xi_norm == 0.0)
    return 0.0;
  return std::pow(xi_norm, 2.0 * rho) / (2.0 * rho);
}

inline double omega_symbol(std::span<double const> xi, double rho)
{
  return omega_symbol(euclidean_norm(xi), rho);
}

/// Gradient of omega: |xi|^{2 rho - 2} xi, the classical velocity of a
/// particle with momentum xi. Its length is |xi|^{2 rho - 1}.
inline std::vector<double> group_velocity(std::span<double const> xi, double rho)
{
  double const r = euclidean_norm(xi);
  std::vector<double> v(xi.begin(), xi.end());
  if (rho == 1.0)
    return v;
  if (r == 0.0)
    throw singular_input_error("group_velocity: xi = 0 with rho < 1");
  double const scale = std::pow(r, 2.0 * rho - 2.0);
  for (auto &c : v)
    c *= scale;
  return v;
}

inline double group_speed(double xi_norm, double rho)
{
  if (xi_norm == 0.0 && rho < 1.0)
    throw singular_input_error("group_speed: xi = 0 with rho < 1");
  return std::pow(xi_norm, 2.0 * rho - 1.0);
}

/// lambda |x|^{-gamma} on |x| >= 1 and exactly zero inside the unit ball.
inline double potential_at(double x_norm, PhysicsParams const &p)
{
  if (x_norm < 1.0)
    return 0.0;
  return p.lambda * std::pow(x_norm, -p.gamma);
}

inline double potential_at(std::span<double const> x, PhysicsParams const &p)
{
  return potential_at(euclidean_norm(x), p);
}

/// \int_a^b tau^{-gamma} d tau for 0 < a <= b. Written through expm1 so the
/// value stays accurate as gamma -> 1 and for b/a close to one.
inline double power_integral(double a, double b, double gamma)
{
  double const log_ratio = std::log(b / a);
  if (gamma == 1.0)
    return log_ratio;
  double const s = 1.0 - gamma;
  return std::pow(a, s) * std::expm1(s * log_ratio) / s;
}

struct DollardPhaseResult
{
  double phase          = 0.0; // radians
  double threshold_time = 0.0; // |xi|^{1 - 2 rho}
};

/// Exponent of the Dollard modifier symbol,
///   \int_0^t V(grad omega(xi) tau) d tau
///     = lambda |xi|^{-gamma (2 rho - 1)} \int_{t_xi}^t tau^{-gamma} d tau,
/// where t_xi = |xi|^{1 - 2 rho} is the time at which the classical
/// trajectory leaves the unit ball. The modifier multiplies by exp(-i phase).
/// gamma > 1 is accepted for short-range control runs.
inline DollardPhaseResult dollard_phase(double t, double xi_norm, PhysicsParams const &p)
{
  if (!(xi_norm > 0.0))
    throw singular_input_error("dollard_phase: xi = 0");
  if (t < 0.0)
    throw domain_error("dollard_phase: negative time");

  double const k = 2.0 * p.rho - 1.0;
  DollardPhaseResult r;
  r.threshold_time = std::pow(xi_norm, -k);
  if (t <= r.threshold_time || p.lambda == 0.0)
    return r;
  r.phase = p.lambda * std::pow(xi_norm, -p.gamma * k) *
            power_integral(r.threshold_time, t, p.gamma);
  return r;
}

inline DollardPhaseResult dollard_phase(double t, std::span<double const> xi,
                                        PhysicsParams const &p)
{
  return dollard_phase(t, euclidean_norm(xi), p);
}

/// Time from which every |xi| >= epsilon has left the unit ball:
/// epsilon^{1 - 2 rho}.
inline double support_threshold_time(PhysicsParams const &p)
{
  return std::pow(p.epsilon, 1.0 - 2.0 * p.rho);
}

/// T(t) = \int_{epsilon^{1-2rho}}^t tau^{-gamma} d tau, the divergent factor
/// of the modifier phase on the support |xi| >= epsilon.
inline double t_factor(double t, PhysicsParams const &p)
{
  double const t0 = support_threshold_time(p);
  if (t < t0)
    throw domain_error("t_factor: t below epsilon^(1-2rho)");
  return power_integral(t0, t, p.gamma);
}

/// Phase of the time-independent multiplier R(xi): the Dollard phase
/// accumulated before epsilon^{1-2rho}. R(xi) = exp(-i * result).
inline double r_symbol_phase(double xi_norm, PhysicsParams const &p)
{
  if (xi_norm < p.epsilon)
    throw domain_error("r_symbol_phase: |xi| below epsilon");
  return dollard_phase(support_threshold_time(p), xi_norm, p).phase;
}

inline double r_symbol_phase(std::span<double const> xi, PhysicsParams const &p)
{
  return r_symbol_phase(euclidean_norm(xi), p);
}

/// lambda |xi|^{-gamma (2 rho - 1)}, the coefficient multiplying T(t) in the
/// factorized modifier.
inline double modifier_rate(double xi_norm, PhysicsParams const &p)
{
  if (!(xi_norm > 0.0))
    throw singular_input_error("modifier_rate: xi = 0");
  return p.lambda * std::pow(xi_norm, -p.gamma * (2.0 * p.rho - 1.0));
}

} // namespace fracscatter
