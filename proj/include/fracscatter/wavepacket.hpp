#pragma once

#include "errors.hpp"
#include "grid.hpp"
#include "params.hpp"
#include "wave_field.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace fracscatter
{
/// |xi| for every frequency bin, in storage order.
inline std::vector<double> frequency_norms(SpatialGrid const &g)
{
  std::size_t const n = g.points_per_axis;
  std::vector<double> out(g.size());
  if (g.dim == 1)
  {
    for (std::size_t m = 0; m < n; ++m)
      out[m] = std::abs(g.frequency(m));
  }
  else
  {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        out[a * n + b] = std::hypot(g.frequency(a), g.frequency(b));
  }
  return out;
}

/// |x| for every position sample, in storage order.
inline std::vector<double> position_norms(SpatialGrid const &g)
{
  std::size_t const n = g.points_per_axis;
  std::vector<double> out(g.size());
  if (g.dim == 1)
  {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = std::abs(g.position(i));
  }
  else
  {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        out[a * n + b] = std::hypot(g.position(a), g.position(b));
  }
  return out;
}

/// Spectral mass \int_{|xi| < epsilon} |f^(xi)|^2 d xi.
inline double spectral_mass_below(WaveField const &f, double epsilon)
{
  WaveField const spec = in_representation(f, representation::frequency);
  auto const norms     = frequency_norms(spec.grid());
  double acc           = 0.0;
  for (std::size_t i = 0; i < norms.size(); ++i)
    if (norms[i] < epsilon)
      acc += std::norm(spec[i]);
  return acc * spec.weight();
}

/// Fraction of position-space mass in the outer `fraction` of the box along
/// any axis. Wrap-around of a periodic evolution shows up here first.
inline double edge_mass_fraction(WaveField const &f, double fraction = 0.05)
{
  WaveField const pos = in_representation(f, representation::position);
  auto const &g       = pos.grid();
  double const inner  = g.half_length * (1.0 - fraction);
  std::size_t const n = g.points_per_axis;
  double edge = 0.0, total = 0.0;
  for (std::size_t i = 0; i < pos.size(); ++i)
  {
    double const w = std::norm(pos[i]);
    total += w;
    bool outer = std::abs(g.position(g.dim == 1 ? i : i / n)) > inner;
    if (g.dim == 2)
      outer = outer || std::abs(g.position(i % n)) > inner;
    if (outer)
      edge += w;
  }
  return total > 0.0 ? edge / total : 0.0;
}

inline void normalize(WaveField &f)
{
  double const nrm = l2_norm(f);
  if (!(nrm > 0.0))
    throw construction_error("cannot normalize a zero field");
  for (auto &v : f.values())
    v /= nrm;
}

/// Packets keeping less than this share of their Gaussian mass above
/// epsilon are rejected.
inline constexpr double min_retained_fraction = 1e-6;

/// Unit-norm Gaussian exp(-|xi - c|^2 / (2 w^2)) in frequency space with every
/// bin below |xi| = epsilon set to exactly zero. Returned in the frequency
/// representation; centred at x = 0 in position space.
inline WaveField build_wavepacket(SpatialGrid const &g, PhysicsParams const &p,
                                  std::span<double const> center_xi, double width_xi)
{
  if (center_xi.size() != static_cast<std::size_t>(g.dim))
    throw config_error("wavepacket centre must have one component per grid axis");
  if (!(width_xi > 0.0))
    throw config_error("wavepacket width must be positive");

  WaveField f(g, representation::frequency);
  std::size_t const n = g.points_per_axis;
  double const inv    = 1.0 / (2.0 * width_xi * width_xi);
  double kept = 0.0, untruncated = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    double d2 = 0.0, r2 = 0.0;
    if (g.dim == 1)
    {
      double const xi = g.frequency(i);
      d2              = (xi - center_xi[0]) * (xi - center_xi[0]);
      r2              = xi * xi;
    }
    else
    {
      double const a = g.frequency(i / n), b = g.frequency(i % n);
      d2 = (a - center_xi[0]) * (a - center_xi[0]) + (b - center_xi.back()) * (b - center_xi.back());
      r2 = a * a + b * b;
    }
    double const a = std::exp(-d2 * inv);
    untruncated += a * a;
    if (std::sqrt(r2) < p.epsilon)
      continue;
    f[i] = a;
    kept += a * a;
  }
  // a far tail poking above epsilon does not count as a packet
  if (!(kept > min_retained_fraction * untruncated))
    throw construction_error("wavepacket lies (essentially) entirely below the spectral cutoff epsilon");
  normalize(f);

  if (spectral_mass_below(f, p.epsilon) != 0.0)
    throw construction_error("wavepacket carries spectral mass below epsilon");
  return f;
}

/// f(x - shift): multiplies frequency bins by exp(-i shift . xi). Spectral
/// support and norm are unchanged. Returned in the frequency representation.
inline WaveField translate(WaveField const &f, std::span<double const> shift)
{
  WaveField out       = in_representation(f, representation::frequency);
  auto const &g       = out.grid();
  std::size_t const n = g.points_per_axis;
  if (shift.size() != static_cast<std::size_t>(g.dim))
    throw usage_error("translate: shift dimension mismatch");
  for (std::size_t i = 0; i < out.size(); ++i)
  {
    double const arg = g.dim == 1 ? shift[0] * g.frequency(i)
                                  : shift[0] * g.frequency(i / n) + shift[1] * g.frequency(i % n);
    out[i] *= std::polar(1.0, -arg);
  }
  return out;
}

/// Unit-norm field with independent complex Gaussian coefficients on every
/// bin with xi_lo <= |xi| <= xi_hi and zeros elsewhere. Deterministic in seed.
inline WaveField random_band_limited(SpatialGrid const &g, double xi_lo, double xi_hi,
                                     std::uint64_t seed)
{
  if (!(xi_hi > xi_lo) || xi_lo < 0.0)
    throw config_error("random_band_limited: empty band");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  WaveField f(g, representation::frequency);
  auto const norms = frequency_norms(g);
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    if (norms[i] < xi_lo || norms[i] > xi_hi)
      continue;
    double const re = normal(rng);
    double const im = normal(rng);
    f[i]            = {re, im};
  }
  if (!(l2_norm(f) > 0.0))
    throw construction_error("random_band_limited: band contains no lattice bins");
  normalize(f);
  return f;
}

/// Plain Gaussian exp(-|x - x0|^2 / (2 s^2)) e^{i k . x} in position space,
/// with s = 1 / width_xi. No spectral cutoff, so it is smooth on the lattice;
/// used for convergence-order checks away from the potential's jump.
inline WaveField smooth_gaussian(SpatialGrid const &g, std::span<double const> center_x,
                                 std::span<double const> center_xi, double width_xi)
{
  if (center_x.size() != static_cast<std::size_t>(g.dim) ||
      center_xi.size() != static_cast<std::size_t>(g.dim))
    throw config_error("smooth_gaussian: centre dimension mismatch");
  WaveField f(g, representation::position);
  std::size_t const n = g.points_per_axis;
  double const inv    = 0.5 * width_xi * width_xi;
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    double const x = g.position(g.dim == 1 ? i : i / n);
    double d2      = (x - center_x[0]) * (x - center_x[0]);
    double phase   = center_xi[0] * x;
    if (g.dim == 2)
    {
      double const y = g.position(i % n);
      d2 += (y - center_x.back()) * (y - center_x.back());
      phase += center_xi.back() * y;
    }
    f[i] = std::polar(std::exp(-d2 * inv), phase);
  }
  normalize(f);
  return f;
}

} // namespace fracscatter
