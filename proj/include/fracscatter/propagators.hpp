#pragma once

#include "errors.hpp"
#include "fft.hpp"
#include "params.hpp"
#include "schedule.hpp"
#include "symbols.hpp"
#include "wave_field.hpp"
#include "wavepacket.hpp"

#include <cmath>
#include <complex>
#include <cstdint>

namespace fracscatter
{
namespace detail
{
// Spelled out instead of std::complex operator*, which keeps the C99 inf/nan
// recovery path and runs several times slower in the stepping loop.
template<bool Conjugate>
inline void multiply(std::span<complex_t> v, cvector const &m)
{
  auto *a       = reinterpret_cast<double *>(v.data());
  auto const *b = reinterpret_cast<double const *>(m.data());
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    double const ar = a[2 * i], ai = a[2 * i + 1];
    double const br = b[2 * i];
    double const bi = Conjugate ? -b[2 * i + 1] : b[2 * i + 1];
    a[2 * i]        = ar * br - ai * bi;
    a[2 * i + 1]    = ar * bi + ai * br;
  }
}

// exp(-i t phase(|xi|)) over the frequency bins; the zero bin stays 1.
template<typename PhaseFn>
inline void multiply_frequency_symbol(WaveField &spec, PhaseFn &&phase)
{
  auto const norms = frequency_norms(spec.grid());
  for (std::size_t i = 0; i < spec.size(); ++i)
  {
    if (norms[i] == 0.0)
      continue;
    spec[i] *= std::polar(1.0, -phase(norms[i]));
  }
}
} // namespace detail

/// e^{-it omega(D)} f, exact: one unimodular multiplier on the frequency bins.
/// The result is returned in the representation of f.
inline WaveField free_propagate(WaveField const &f, double t, PhysicsParams const &p)
{
  WaveField spec = in_representation(f, representation::frequency);
  if (t != 0.0)
    detail::multiply_frequency_symbol(spec, [&](double k) { return t * omega_symbol(k, p.rho); });
  return in_representation(spec, f.rep());
}

/// Strang splitting for e^{-it(omega(D) + V)} with a fixed step:
///   S = exp(-i dt V/2) exp(-i dt omega(D)) exp(-i dt V/2).
/// Backward steps apply S^* exactly, so forward and backward runs are adjoint
/// to rounding. V is sampled pointwise, including its jump at |x| = 1.
class StrangPropagator
{
public:
  StrangPropagator(SpatialGrid const &g, PhysicsParams const &p, double dt)
      : grid_(g), params_(p), dt_(dt), kinetic_(g.size()), half_potential_(g.size()),
        full_potential_(g.size())
  {
    if (!(dt > 0.0))
      throw schedule_error("splitting step must be positive");
    // raw FFTW bins line up with the frequency lattice; fold in 1/N^dim
    double const inv_n = 1.0 / static_cast<double>(g.size());
    auto const k       = frequency_norms(g);
    for (std::size_t i = 0; i < k.size(); ++i)
      kinetic_[i] = std::polar(inv_n, -dt * omega_symbol(k[i], p.rho));
    auto const r = position_norms(g);
    for (std::size_t i = 0; i < r.size(); ++i)
    {
      double const v     = potential_at(r[i], p);
      half_potential_[i] = std::polar(1.0, -0.5 * dt * v);
      full_potential_[i] = std::polar(1.0, -dt * v);
    }
  }

  double dt() const { return dt_; }
  SpatialGrid const &grid() const { return grid_; }
  PhysicsParams const &params() const { return params_; }

  /// Apply `steps` Strang steps in place to a position-space field; a negative
  /// count runs |steps| adjoint steps (evolution by e^{+i |t| H}).
  void advance(WaveField &f, std::int64_t steps) const
  {
    if (f.rep() != representation::position)
      throw usage_error("StrangPropagator::advance expects a position-space field");
    if (!(f.grid() == grid_))
      throw usage_error("StrangPropagator::advance: grid mismatch");
    if (steps > 0)
      run<false>(f.values(), steps);
    else if (steps < 0)
      run<true>(f.values(), -steps);
  }

  /// e^{-itH} f for t on the dt lattice; result in the representation of f.
  WaveField propagate(WaveField const &f, double t) const
  {
    std::int64_t const steps = step_count(t, dt_);
    WaveField pos            = in_representation(f, representation::position);
    advance(pos, steps);
    return in_representation(pos, f.rep());
  }

private:
  template<bool Backward>
  void run(std::span<complex_t> v, std::int64_t steps) const
  {
    int const dim       = grid_.dim;
    std::size_t const n = grid_.points_per_axis;
    detail::multiply<Backward>(v, half_potential_);
    for (std::int64_t s = 0; s < steps; ++s)
    {
      fft_inplace(v.data(), dim, n, fft_direction::forward);
      detail::multiply<Backward>(v, kinetic_);
      fft_inplace(v.data(), dim, n, fft_direction::backward);
      // adjacent half steps merge into one full potential step
      detail::multiply<Backward>(v, s + 1 == steps ? half_potential_ : full_potential_);
    }
  }

  SpatialGrid grid_;
  PhysicsParams params_;
  double dt_;
  cvector kinetic_;
  cvector half_potential_;
  cvector full_potential_;
};

/// e^{-itH} f with H = omega(D) + V; negative t evolves backward.
inline WaveField full_propagate(WaveField const &f, double t, TimeSchedule const &schedule,
                                PhysicsParams const &p)
{
  StrangPropagator const prop(f.grid(), p, schedule.dt);
  return prop.propagate(f, t);
}

/// Relative spectral mass below epsilon that apply_modifier tolerates; the
/// exact-zero bins of a constructed packet pick up ~1e-32 after transforms.
inline constexpr double support_tolerance = 1e-20;

/// M(t) f (or M(t)^* f when conjugate is set): multiplies frequency bins by
/// exp(-/+ i dollard_phase(t, xi)). The zero bin multiplier is 1.
inline WaveField apply_modifier(WaveField const &f, double t, PhysicsParams const &p,
                                bool conjugate = false)
{
  WaveField spec = in_representation(f, representation::frequency);
  double const below = spectral_mass_below(spec, p.epsilon);
  double const total = norm_squared(spec);
  if (below > support_tolerance * total)
    throw support_violation("apply_modifier: state has spectral mass below epsilon");
  double const sign = conjugate ? -1.0 : 1.0;
  detail::multiply_frequency_symbol(
      spec, [&](double k) { return sign * dollard_phase(t, k, p).phase; });
  return in_representation(spec, f.rep());
}

/// W(t) phi = e^{itH} e^{-it omega(D)} phi, or the Dollard-modified
/// e^{itH} e^{-it omega(D)} M(t) phi. t >= 0 on the propagator's lattice.
/// Returned in the position representation.
inline WaveField wave_operator_state(WaveField const &phi, double t,
                                     StrangPropagator const &prop, bool modified)
{
  if (t < 0.0)
    throw schedule_error("wave_operator_state: t must be nonnegative");
  std::int64_t const steps = step_count(t, prop.dt());
  WaveField state = modified ? apply_modifier(phi, t, prop.params()) : phi;
  state           = free_propagate(state, t, prop.params());
  state           = in_representation(state, representation::position);
  prop.advance(state, -steps);
  return state;
}

inline WaveField wave_operator_state(WaveField const &phi, double t, TimeSchedule const &schedule,
                                     PhysicsParams const &p, bool modified)
{
  StrangPropagator const prop(phi.grid(), p, schedule.dt);
  return wave_operator_state(phi, t, prop, modified);
}

} // namespace fracscatter
