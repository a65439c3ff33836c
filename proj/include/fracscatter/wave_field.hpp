#pragma once

#include "errors.hpp"
#include "fft.hpp"
#include "grid.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <utility>

namespace fracscatter
{
enum class representation
{
  position,
  frequency
};

class WaveField;
namespace detail
{
void transform_inplace(WaveField &f, representation target);
}

/// Complex samples of a state on a SpatialGrid, tagged with the space they
/// live in. 2-D fields are stored row-major, index = i * N + j.
class WaveField
{
public:
  WaveField() = default;

  WaveField(SpatialGrid grid, representation rep)
      : grid_(grid), rep_(rep), values_(grid.size(), complex_t{0.0, 0.0})
  {}

  WaveField(SpatialGrid grid, representation rep, cvector values)
      : grid_(grid), rep_(rep), values_(std::move(values))
  {
    if (values_.size() != grid_.size())
      throw usage_error("value count does not match the grid size");
  }

  SpatialGrid const &grid() const { return grid_; }
  representation rep() const { return rep_; }
  std::size_t size() const { return values_.size(); }

  std::span<complex_t> values() { return values_; }
  std::span<complex_t const> values() const { return values_; }

  complex_t &operator[](std::size_t i) { return values_[i]; }
  complex_t const &operator[](std::size_t i) const { return values_[i]; }

  // quadrature weight for the current representation
  double weight() const
  {
    return rep_ == representation::position ? grid_.position_weight()
                                            : grid_.frequency_weight();
  }

private:
  friend void detail::transform_inplace(WaveField &, representation);

  SpatialGrid grid_;
  representation rep_ = representation::position;
  cvector values_;
};

namespace detail
{
// Per-bin sign (-1)^m from the x_0 = -L origin shift together with the
// 1/sqrt(2 pi) continuum normalization; both directions share it.
inline void apply_transform_factors(WaveField &f, double scale_per_axis)
{
  auto const &g = f.grid();
  std::size_t const n = g.points_per_axis;
  auto v = f.values();
  if (g.dim == 1)
  {
    for (std::size_t m = 0; m < n; ++m)
      v[m] *= (m % 2 == 0 ? scale_per_axis : -scale_per_axis);
  }
  else
  {
    double const s2 = scale_per_axis * scale_per_axis;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        v[a * n + b] *= ((a + b) % 2 == 0 ? s2 : -s2);
  }
}

inline void transform_inplace(WaveField &f, representation target)
{
  auto const &g = f.grid();
  double const root_two_pi = std::sqrt(2.0 * std::numbers::pi);
  if (target == representation::frequency)
  {
    fft_inplace(f.values().data(), g.dim, g.points_per_axis, fft_direction::forward);
    apply_transform_factors(f, g.dx / root_two_pi);
  }
  else
  {
    apply_transform_factors(f, g.dk / root_two_pi);
    fft_inplace(f.values().data(), g.dim, g.points_per_axis, fft_direction::backward);
  }
  f.rep_ = target;
}
} // namespace detail

/// Discrete approximation of (2 pi)^{-dim/2} \int e^{-i x.xi} f(x) dx on the
/// frequency lattice. Unitary with respect to the weighted norms.
inline WaveField to_frequency(WaveField const &f)
{
  if (f.rep() != representation::position)
    throw usage_error("to_frequency expects a position-space field");
  WaveField out = f;
  detail::transform_inplace(out, representation::frequency);
  return out;
}

inline WaveField to_position(WaveField const &f)
{
  if (f.rep() != representation::frequency)
    throw usage_error("to_position expects a frequency-space field");
  WaveField out = f;
  detail::transform_inplace(out, representation::position);
  return out;
}

inline WaveField in_representation(WaveField const &f, representation rep)
{
  if (f.rep() == rep)
    return f;
  return rep == representation::frequency ? to_frequency(f) : to_position(f);
}

/// \int conj(f) g with the representation's measure weight.
inline complex_t inner_product(WaveField const &f, WaveField const &g)
{
  if (!(f.grid() == g.grid()))
    throw usage_error("inner_product: fields live on different grids");
  if (f.rep() != g.rep())
    throw usage_error("inner_product: fields are in different representations");
  auto const a = f.values();
  auto const b = g.values();
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return complex_t{re, im} * f.weight();
}

inline double norm_squared(WaveField const &f)
{
  double acc = 0.0;
  for (auto const &v : f.values())
    acc += std::norm(v);
  return acc * f.weight();
}

inline double l2_norm(WaveField const &f) { return std::sqrt(norm_squared(f)); }

/// ||f - g|| in the common representation of the two fields.
inline double distance(WaveField const &f, WaveField const &g)
{
  if (!(f.grid() == g.grid()) || f.rep() != g.rep())
    throw usage_error("distance: incompatible fields");
  auto const a = f.values();
  auto const b = g.values();
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc * f.weight());
}

} // namespace fracscatter
