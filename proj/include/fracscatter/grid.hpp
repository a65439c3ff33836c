#pragma once

#include "errors.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

namespace fracscatter
{
/// Periodic lattice on [-L, L)^dim with N points per axis.
///
/// Position samples are x_i = -L + i dx for i in [0, N). Frequency bins use
/// the standard wrap ordering: bin m holds xi = m dk for m < N/2 and
/// (m - N) dk otherwise, so dx * dk * N = 2 pi on every axis.
struct SpatialGrid
{
  int dim                     = 1;
  std::size_t points_per_axis = 0;
  double half_length          = 0.0;
  double dx                   = 0.0;
  double dk                   = 0.0;

  std::size_t size() const
  {
    return dim == 1 ? points_per_axis : points_per_axis * points_per_axis;
  }

  double position(std::size_t i) const
  {
    return -half_length + static_cast<double>(i) * dx;
  }

  // signed wavenumber index of bin m
  long wrapped_index(std::size_t m) const
  {
    auto const n = static_cast<long>(points_per_axis);
    auto const j = static_cast<long>(m);
    return j < n / 2 ? j : j - n;
  }

  double frequency(std::size_t m) const
  {
    return static_cast<double>(wrapped_index(m)) * dk;
  }

  // volume element of the position / frequency quadrature
  double position_weight() const { return dim == 1 ? dx : dx * dx; }
  double frequency_weight() const { return dim == 1 ? dk : dk * dk; }

  bool operator==(SpatialGrid const &) const = default;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline SpatialGrid make_grid(int dim, std::size_t points_per_axis, double half_length)
{
  if (dim != 1 && dim != 2)
    throw config_error("grid dimension must be 1 or 2, got " + std::to_string(dim));
  if (points_per_axis < 8 || !is_power_of_two(points_per_axis))
    throw config_error("points_per_axis must be a power of two >= 8, got " +
                       std::to_string(points_per_axis));
  if (!(half_length > 0.0) || !std::isfinite(half_length))
    throw config_error("half_length must be positive and finite");

  SpatialGrid g;
  g.dim             = dim;
  g.points_per_axis = points_per_axis;
  g.half_length     = half_length;
  g.dx              = 2.0 * half_length / static_cast<double>(points_per_axis);
  g.dk              = std::numbers::pi / half_length;
  return g;
}

} // namespace fracscatter
