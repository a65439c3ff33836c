#pragma once

#include "errors.hpp"
#include "format.hpp"
#include "grid.hpp"
#include "params.hpp"
#include "symbols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

namespace fracscatter
{
/// Splitting step plus the ascending list of times at which diagnostics are
/// evaluated. Every diagnostic time is an integer multiple of dt.
struct TimeSchedule
{
  double dt = 0.05;
  std::vector<double> diagnostic_times;
  double t_max = 0.0;
  double ratio = 1.0; // geometric ratio of diagnostic_times (1 if irregular)
};

/// Number of splitting steps covering t. Throws when t is not on the dt
/// lattice (relative slack 1e-9 for decimal round-off).
inline std::int64_t step_count(double t, double dt)
{
  if (!(dt > 0.0))
    throw schedule_error("dt must be positive");
  double const q     = t / dt;
  double const steps = std::round(q);
  if (std::abs(q - steps) > 1e-9 * std::max(1.0, std::abs(q)))
  {
    std::ostringstream msg;
    msg << "time " << t << " is not a multiple of dt = " << dt;
    throw schedule_error(msg.str());
  }
  return static_cast<std::int64_t>(steps);
}

inline double snap_to_lattice(double t, double dt) { return std::round(t / dt) * dt; }

/// Geometric diagnostic times anchored at t_max: t_max, t_max / r, t_max / r^2,
/// ... down to t0, each snapped to the dt lattice, returned ascending.
/// Anchoring at the top keeps t_max and its halvings (when r^k = 2) on the grid.
inline TimeSchedule make_geometric_schedule(double dt, double t0, double ratio, double t_max)
{
  if (!(dt > 0.0))
    throw schedule_error("dt must be positive");
  if (!(ratio > 1.0))
    throw schedule_error("geometric ratio must exceed 1");
  if (!(t0 > 0.0) || !(t_max >= t0))
    throw schedule_error("need 0 < t0 <= t_max");

  TimeSchedule s;
  s.dt    = dt;
  s.ratio = ratio;
  s.t_max = snap_to_lattice(t_max, dt);
  double const floor_t = t0 * (1.0 - 1e-12);
  for (int k = 0;; ++k)
  {
    double const t = t_max * std::pow(ratio, -k);
    if (t < floor_t)
      break;
    double const snapped = snap_to_lattice(t, dt);
    if (snapped > 0.0 &&
        (s.diagnostic_times.empty() || snapped < s.diagnostic_times.back()))
      s.diagnostic_times.push_back(snapped);
  }
  std::reverse(s.diagnostic_times.begin(), s.diagnostic_times.end());
  if (s.diagnostic_times.empty())
    throw schedule_error("schedule contains no diagnostic times");
  return s;
}

/// Spectral extent of a Gaussian packet used by the no-wrap bound.
struct PacketSpec
{
  std::vector<double> center{1.0};
  double width = 0.1;

  // |xi| beyond which the amplitude is below exp(-12.5)
  double max_frequency() const { return euclidean_norm(center) + 5.0 * width; }
  // position half-extent beyond which the amplitude is below exp(-18)
  double position_extent() const { return 6.0 / width; }
};

/// Smallest half_length satisfying t_max v_max + extent <= 0.9 L.
inline double minimal_half_length(PhysicsParams const &p, PacketSpec const &packet, double t_max)
{
  double const v_max = group_speed(packet.max_frequency(), p.rho);
  return (t_max * v_max + packet.position_extent()) / 0.9;
}

inline void check_no_wrap(SpatialGrid const &g, PhysicsParams const &p,
                          PacketSpec const &packet, double t_max)
{
  double const needed = minimal_half_length(p, packet, t_max);
  if (g.half_length < needed)
  {
    std::ostringstream msg;
    msg << "no-wrap condition violated: half_length = " << g.half_length
        << " but t_max * v_max + packet extent needs half_length >= " << format_double(needed);
    throw config_error(msg.str());
  }
}

} // namespace fracscatter
