#pragma once

#include "errors.hpp"
#include "parallel.hpp"
#include "propagators.hpp"
#include "schedule.hpp"
#include "symbols.hpp"
#include "wave_field.hpp"
#include "wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace fracscatter
{
struct FitResult
{
  double slope     = 0.0;
  double intercept = 0.0;
  double residual  = 0.0; // RMS of log(value) about the fitted line
  std::size_t count = 0;
};

/// Least-squares line through (log t, log value) for the points with
/// lo <= t <= hi. Needs at least 5 such points, all with positive values.
inline FitResult fit_loglog_slope(std::span<double const> t, std::span<double const> v,
                                  double lo, double hi)
{
  if (t.size() != v.size())
    throw fit_error("fit_loglog_slope: times and values differ in length");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < t.size(); ++i)
  {
    if (t[i] < lo * (1.0 - 1e-12) || t[i] > hi * (1.0 + 1e-12))
      continue;
    if (!(v[i] > 0.0) || !std::isfinite(v[i]))
      throw fit_error("fit_loglog_slope: nonpositive value in the fit window at t = " +
                      std::to_string(t[i]));
    xs.push_back(std::log(t[i]));
    ys.push_back(std::log(v[i]));
  }
  if (xs.size() < 5)
    throw fit_error("fit_loglog_slope: fewer than 5 points in the fit window");

  double const n  = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  FitResult r;
  r.count     = xs.size();
  r.slope     = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double ss   = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
  {
    double const e = ys[i] - (r.intercept + r.slope * xs[i]);
    ss += e * e;
  }
  r.residual = std::sqrt(ss / n);
  return r;
}

/// (t, value) pairs with a log-log fit over a window. Overlap series keep
/// the complex values alongside their moduli; `aux` carries a per-row
/// companion column (t2 for defects, the integrand for Cook-Kuroda).
struct DecaySeries
{
  std::vector<double> times;
  std::vector<double> values;
  std::vector<complex_t> complex_values;
  std::vector<double> aux;
  double fitted_slope = std::numeric_limits<double>::quiet_NaN();
  double fit_residual = std::numeric_limits<double>::quiet_NaN();
  std::pair<double, double> fit_window{0.0, 0.0};

  void fit(double lo, double hi)
  {
    auto const r = fit_loglog_slope(times, values, lo, hi);
    fitted_slope = r.slope;
    fit_residual = r.residual;
    fit_window   = {lo, hi};
  }

  // value at the time closest to t
  double value_at(double t) const
  {
    if (times.empty())
      throw usage_error("DecaySeries::value_at on an empty series");
    auto it = std::min_element(times.begin(), times.end(), [t](double a, double b) {
      return std::abs(a - t) < std::abs(b - t);
    });
    return values[static_cast<std::size_t>(it - times.begin())];
  }
};

/// Free (optionally modified) state at time t, the common starting point of
/// every wave-operator evaluation: e^{-it omega(D)} [M(t)] phi.
inline WaveField outgoing_state(WaveField const &phi, double t, PhysicsParams const &p,
                                bool modified)
{
  WaveField s = modified ? apply_modifier(phi, t, p) : phi;
  return in_representation(free_propagate(s, t, p), representation::position);
}

/// ||W(t1) phi - W(t2) phi|| for the plain or Dollard-modified approximant.
///
/// Evaluated after factoring the unitary e^{i t1 H} out of both terms:
///   || u(t1) - e^{i (t2 - t1) H} u(t2) ||,  u(t) = e^{-it omega(D)} [M(t)] phi,
/// which is the same number (the discrete steps compose exactly) for half the
/// propagation cost.
inline double cauchy_defect(WaveField const &phi, double t1, double t2,
                            StrangPropagator const &prop, bool modified)
{
  if (t1 > t2)
    std::swap(t1, t2);
  if (t1 < 0.0)
    throw schedule_error("cauchy_defect: negative time");
  std::int64_t const gap = step_count(t2, prop.dt()) - step_count(t1, prop.dt());
  if (gap == 0)
    return 0.0;
  WaveField const early = outgoing_state(phi, t1, prop.params(), modified);
  WaveField late        = outgoing_state(phi, t2, prop.params(), modified);
  prop.advance(late, -gap);
  return distance(early, late);
}

inline double cauchy_defect(WaveField const &phi, double t1, double t2,
                            TimeSchedule const &schedule, PhysicsParams const &p, bool modified)
{
  StrangPropagator const prop(phi.grid(), p, schedule.dt);
  return cauchy_defect(phi, t1, t2, prop, modified);
}

/// defect(t, 2t) for every diagnostic time t with 2t <= t_max. times holds
/// t, aux holds 2t. Points are independent and run on `threads` workers.
inline DecaySeries cauchy_defect_series(WaveField const &phi, TimeSchedule const &schedule,
                                        StrangPropagator const &prop, bool modified,
                                        unsigned threads = 1)
{
  DecaySeries s;
  for (double t : schedule.diagnostic_times)
  {
    if (2.0 * t <= schedule.t_max * (1.0 + 1e-12))
    {
      s.times.push_back(t);
      s.aux.push_back(2.0 * t);
    }
  }
  s.values.resize(s.times.size());
  parallel_for(s.times.size(), threads, [&](std::size_t i) {
    s.values[i] = cauchy_defect(phi, s.times[i], s.aux[i], prop, modified);
  });
  return s;
}

/// (W(t) phi, psi) for the unmodified approximant.
inline complex_t weak_overlap(WaveField const &phi, WaveField const &psi, double t,
                              StrangPropagator const &prop)
{
  WaveField const w = wave_operator_state(phi, t, prop, false);
  return inner_product(w, in_representation(psi, representation::position));
}

inline complex_t weak_overlap(WaveField const &phi, WaveField const &psi, double t,
                              TimeSchedule const &schedule, PhysicsParams const &p)
{
  StrangPropagator const prop(phi.grid(), p, schedule.dt);
  return weak_overlap(phi, psi, t, prop);
}

/// weak_overlap at every diagnostic time from one forward evolution of psi:
/// (B^n u, psi) = (u, S^n psi) since the backward steps B are the adjoints
/// of the forward steps S.
inline DecaySeries weak_overlap_series(WaveField const &phi, WaveField const &psi,
                                       TimeSchedule const &schedule,
                                       StrangPropagator const &prop)
{
  DecaySeries s;
  WaveField probe      = in_representation(psi, representation::position);
  std::int64_t current = 0;
  for (double t : schedule.diagnostic_times)
  {
    std::int64_t const target = step_count(t, prop.dt());
    prop.advance(probe, target - current);
    current                   = target;
    WaveField const u         = outgoing_state(phi, t, prop.params(), false);
    complex_t const z         = inner_product(u, probe);
    s.times.push_back(t);
    s.complex_values.push_back(z);
    s.values.push_back(std::abs(z));
  }
  return s;
}

/// (M(t) phi, psi): closed form, no time stepping.
inline complex_t modifier_overlap(WaveField const &phi, WaveField const &psi, double t,
                                  PhysicsParams const &p)
{
  WaveField const m = apply_modifier(in_representation(phi, representation::frequency), t, p);
  return inner_product(m, in_representation(psi, representation::frequency));
}

inline DecaySeries modifier_overlap_series(WaveField const &phi, WaveField const &psi,
                                           std::span<double const> times,
                                           PhysicsParams const &p)
{
  DecaySeries s;
  for (double t : times)
  {
    complex_t const z = modifier_overlap(phi, psi, t, p);
    s.times.push_back(t);
    s.complex_values.push_back(z);
    s.values.push_back(std::abs(z));
  }
  return s;
}

/// ||V e^{-it omega(D)} phi||.
inline double cook_kuroda_integrand(WaveField const &phi, double t, PhysicsParams const &p)
{
  WaveField const u = in_representation(free_propagate(phi, t, p), representation::position);
  auto const r      = position_norms(u.grid());
  double acc        = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
  {
    double const v = potential_at(r[i], p);
    if (v != 0.0)
      acc += v * v * std::norm(u[i]);
  }
  return std::sqrt(acc * u.weight());
}

/// Cumulative trapezoid integral of the Cook-Kuroda integrand over the
/// diagnostic times (values), with the integrand itself in aux. The integral
/// starts at the first diagnostic time.
inline DecaySeries cook_kuroda_integral(WaveField const &phi, TimeSchedule const &schedule,
                                        PhysicsParams const &p, unsigned threads = 1)
{
  if (schedule.ratio > 1.2 * (1.0 + 1e-12))
    throw schedule_error("cook_kuroda_integral needs a geometric ratio <= 1.2");
  DecaySeries s;
  s.times = schedule.diagnostic_times;
  s.aux.resize(s.times.size());
  parallel_for(s.times.size(), threads,
               [&](std::size_t i) { s.aux[i] = cook_kuroda_integrand(phi, s.times[i], p); });
  s.values.resize(s.times.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.times.size(); ++i)
  {
    if (i > 0)
      acc += 0.5 * (s.aux[i] + s.aux[i - 1]) * (s.times[i] - s.times[i - 1]);
    s.values[i] = acc;
  }
  return s;
}

/// Cumulative value at t, linear in log t between grid points.
inline double cumulative_at(DecaySeries const &cumulative, double t)
{
  auto const &ts = cumulative.times;
  if (ts.empty() || t < ts.front() * (1.0 - 1e-12) || t > ts.back() * (1.0 + 1e-12))
    throw usage_error("cumulative_at: t outside the series");
  auto it = std::lower_bound(ts.begin(), ts.end(), t);
  if (it == ts.end())
    return cumulative.values.back();
  std::size_t const j = static_cast<std::size_t>(it - ts.begin());
  if (j == 0 || *it == t)
    return cumulative.values[j];
  double const w = std::log(t / ts[j - 1]) / std::log(ts[j] / ts[j - 1]);
  return (1.0 - w) * cumulative.values[j - 1] + w * cumulative.values[j];
}

/// Cumulative integral gained over [a, b].
inline double cumulative_increment(DecaySeries const &cumulative, double a, double b)
{
  return cumulative_at(cumulative, b) - cumulative_at(cumulative, a);
}

/// Reference levels below which defect values are not meaningful.
struct NumericalFloor
{
  double lambda_zero = 0.0; // same evaluation with the potential switched off
  double dt_halving  = 0.0; // |defect(dt) - defect(dt / 2)|
};

inline NumericalFloor defect_floor(WaveField const &phi, double t1, double t2,
                                   TimeSchedule const &schedule, PhysicsParams const &p,
                                   bool modified)
{
  PhysicsParams free_params = p;
  free_params.lambda        = 0.0;
  NumericalFloor floor;
  floor.lambda_zero = cauchy_defect(phi, t1, t2, schedule, free_params, modified);
  TimeSchedule half = schedule;
  half.dt           = schedule.dt / 2.0;
  floor.dt_halving  = std::abs(cauchy_defect(phi, t1, t2, schedule, p, modified) -
                              cauchy_defect(phi, t1, t2, half, p, modified));
  return floor;
}

} // namespace fracscatter
