#pragma once

#include "config.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "propagators.hpp"
#include "symbols.hpp"
#include "wavepacket.hpp"

#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace fracscatter
{
/// One thresholded statement about an experiment's output.
struct Check
{
  std::string name;
  double value     = 0.0;
  double threshold = 0.0;
  std::string relation; // "<", ">", "<=", ">=" or "in [a,b]"
  bool passed = false;
};

inline nlohmann::json to_json(Check const &c)
{
  return {{"name", c.name},
          {"value", c.value},
          {"threshold", c.threshold},
          {"relation", c.relation},
          {"passed", c.passed}};
}

inline Check check_less(std::string name, double value, double bound)
{
  return {std::move(name), value, bound, "<", value < bound};
}

inline Check check_greater(std::string name, double value, double bound)
{
  return {std::move(name), value, bound, ">", value > bound};
}

struct ExperimentOutcome
{
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
  std::vector<Check> checks;

  bool passed() const
  {
    for (auto const &c : checks)
      if (!c.passed)
        return false;
    return true;
  }
};

namespace detail
{
inline void write_text(std::filesystem::path const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw io_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out)
    throw io_error("write to " + path.string() + " failed");
}

inline std::string csv(std::vector<std::string> const &header,
                       std::vector<std::vector<double>> const &columns)
{
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j)
    out += (j ? "," : "") + header[j];
  out += '\n';
  std::size_t const rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t i = 0; i < rows; ++i)
  {
    for (std::size_t j = 0; j < columns.size(); ++j)
    {
      if (j)
        out += ',';
      out += format_double(columns[j][i]);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json params_json(PhysicsParams const &p)
{
  return {{"rho", p.rho}, {"gamma", p.gamma}, {"lambda", p.lambda}, {"epsilon", p.epsilon}};
}

inline nlohmann::json fit_json(DecaySeries const &s)
{
  return {{"slope", s.fitted_slope},
          {"residual", s.fit_residual},
          {"window", {s.fit_window.first, s.fit_window.second}}};
}

// Adaptive Simpson on [a, b]; used by the selftest as an independent check of
// the closed-form phase.
inline double adaptive_simpson(std::function<double(double)> const &f, double a, double b,
                               double tol, int depth = 0)
{
  double const m  = 0.5 * (a + b);
  double const fa = f(a), fb = f(b), fm = f(m);
  double const whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double const lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double const left  = (m - a) / 6.0 * (fa + 4.0 * f(lm) + fm);
  double const right = (b - m) / 6.0 * (fm + 4.0 * f(rm) + fb);
  if (depth > 40 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, tol / 2.0, depth + 1) +
         adaptive_simpson(f, m, b, tol / 2.0, depth + 1);
}

inline WaveField packet_for(ExperimentConfig const &c, PhysicsParams const &p)
{
  return build_wavepacket(c.grid(), p, c.xi_center, c.xi_width);
}
} // namespace detail

/// Defect series for one parameter point, plus the numerical floor at the
/// last pair. Shared by cauchy, dollard_cauchy and sweep.
struct DefectRun
{
  DecaySeries series;
  NumericalFloor floor;
  double floor_t1 = 0.0;
};

inline DefectRun run_defect(ExperimentConfig const &c, PhysicsParams const &p, bool modified,
                            unsigned threads)
{
  WaveField const phi       = detail::packet_for(c, p);
  TimeSchedule const sched  = c.schedule();
  StrangPropagator const pr(phi.grid(), p, sched.dt);
  DefectRun run;
  run.series = cauchy_defect_series(phi, sched, pr, modified, threads);
  if (run.series.times.empty())
    throw schedule_error("no diagnostic time t with 2t <= t_max");
  run.series.fit(c.fit_lo, c.fit_hi);
  run.floor_t1 = run.series.times.back();
  run.floor    = defect_floor(phi, run.floor_t1, 2.0 * run.floor_t1, sched, p, modified);
  return run;
}

namespace detail
{
inline ExperimentOutcome run_cauchy(ExperimentConfig const &c, std::string const &hash,
                                    unsigned threads, bool modified)
{
  namespace fs = std::filesystem;
  auto const &p  = c.params;
  DefectRun run  = run_defect(c, p, modified, threads);
  auto const &s  = run.series;
  std::string const kind(to_string(c.kind));

  ExperimentOutcome out;
  fs::path const series_path = fs::path(c.out_dir) / (kind + "_" + hash + ".csv");
  write_text(series_path, csv({"t1", "t2", "defect"}, {s.times, s.aux, s.values}));
  fs::path const floor_path = fs::path(c.out_dir) / ("floor_" + hash + ".csv");
  write_text(floor_path, csv({"t1", "t2", "lambda_zero", "dt_halving"},
                             {{run.floor_t1}, {2.0 * run.floor_t1},
                              {run.floor.lambda_zero}, {run.floor.dt_halving}}));
  out.files = {series_path, floor_path};

  double const last = s.values.back();
  if (modified)
    out.checks.push_back(check_less("modified defect slope", s.fitted_slope, -0.5));
  else if (p.lambda != 0.0 && p.gamma <= 1.0)
  {
    out.checks.push_back(check_greater("unmodified defect slope", s.fitted_slope, -0.2));
    out.checks.push_back(
        check_greater("last defect over 10x lambda=0 floor", last, 10.0 * run.floor.lambda_zero));
  }
  else if (p.lambda != 0.0)
    out.checks.push_back(check_less("short-range defect slope", s.fitted_slope, -0.7));

  out.summary = {{"kind", kind},
                 {"hash", hash},
                 {"params", params_json(p)},
                 {"fit", fit_json(s)},
                 {"last_pair", {run.floor_t1, 2.0 * run.floor_t1}},
                 {"last_defect", last},
                 {"floor", {{"lambda_zero", run.floor.lambda_zero},
                            {"dt_halving", run.floor.dt_halving}}}};
  return out;
}

inline ExperimentOutcome run_weaklimit(ExperimentConfig const &c, std::string const &hash)
{
  namespace fs = std::filesystem;
  auto const &p            = c.params;
  WaveField const phi      = packet_for(c, p);
  TimeSchedule const sched = c.schedule();
  StrangPropagator const pr(phi.grid(), p, sched.dt);

  std::vector<double> shift(static_cast<std::size_t>(c.dim), 0.0);
  shift[0]                 = 50.0;
  WaveField const shifted  = translate(phi, shift);
  double const band_hi     = euclidean_norm(c.xi_center) + 5.0 * c.xi_width;
  WaveField const random   = random_band_limited(phi.grid(), p.epsilon, band_hi, c.seed);
  DecaySeries const a      = weak_overlap_series(phi, shifted, sched, pr);
  DecaySeries const b      = weak_overlap_series(phi, random, sched, pr);

  auto re = [](DecaySeries const &s) {
    std::vector<double> v;
    for (auto z : s.complex_values)
      v.push_back(z.real());
    return v;
  };
  auto im = [](DecaySeries const &s) {
    std::vector<double> v;
    for (auto z : s.complex_values)
      v.push_back(z.imag());
    return v;
  };

  // first diagnostic time inside the fit window
  std::size_t first = 0;
  while (first + 1 < a.times.size() && a.times[first] < c.fit_lo * (1.0 - 1e-12))
    ++first;
  double const t_first = a.times[first];
  double const t_last  = a.times.back();
  std::vector<double> norm_t = {t_first, t_last};
  std::vector<double> norms;
  for (double t : norm_t)
    norms.push_back(l2_norm(wave_operator_state(phi, t, pr, false)));

  ExperimentOutcome out;
  fs::path const path = fs::path(c.out_dir) / ("weaklimit_" + hash + ".csv");
  write_text(path, csv({"t", "re_shifted", "im_shifted", "abs_shifted", "re_random", "im_random",
                        "abs_random"},
                       {a.times, re(a), im(a), a.values, re(b), im(b), b.values}));
  fs::path const norm_path = fs::path(c.out_dir) / ("norm_" + hash + ".csv");
  write_text(norm_path, csv({"t", "norm"}, {norm_t, norms}));
  out.files = {path, norm_path};

  double const decay_a = a.values[first] / a.values.back();
  double const decay_b = b.values[first] / b.values.back();
  out.checks.push_back({"shifted probe decay factor", decay_a, 5.0, ">=", decay_a >= 5.0});
  out.checks.push_back({"random probe decay factor", decay_b, 5.0, ">=", decay_b >= 5.0});
  for (std::size_t i = 0; i < norms.size(); ++i)
    out.checks.push_back(check_less("|norm W(t) phi - 1| at t = " + format_double(norm_t[i]),
                                    std::abs(norms[i] - 1.0), 1e-10));

  out.summary = {{"kind", "weaklimit"},
                 {"hash", hash},
                 {"params", params_json(p)},
                 {"window", {t_first, t_last}},
                 {"decay_factor", {{"shifted", decay_a}, {"random", decay_b}}},
                 {"norm", norms}};
  return out;
}

struct DecadeReport
{
  std::vector<std::pair<double, double>> decades; // latest first
  std::vector<double> increments;
  std::vector<double> ratios; // increments[i] / increments[i + 1]
};

// Decades [t_max / 10^{k+1}, t_max / 10^k] that fit inside the series.
inline DecadeReport decade_increments(DecaySeries const &cumulative)
{
  DecadeReport r;
  double hi = cumulative.times.back();
  while (hi / 10.0 >= cumulative.times.front() * (1.0 - 1e-12))
  {
    r.decades.emplace_back(hi / 10.0, hi);
    r.increments.push_back(cumulative_increment(cumulative, hi / 10.0, hi));
    hi /= 10.0;
  }
  for (std::size_t i = 0; i + 1 < r.increments.size(); ++i)
    r.ratios.push_back(r.increments[i] / r.increments[i + 1]);
  return r;
}

inline ExperimentOutcome run_cook(ExperimentConfig const &c, std::string const &hash,
                                  unsigned threads)
{
  namespace fs = std::filesystem;
  auto const &p            = c.params;
  WaveField const phi      = packet_for(c, p);
  TimeSchedule const sched = c.schedule();
  DecaySeries s            = cook_kuroda_integral(phi, sched, p, threads);
  auto const fit           = fit_loglog_slope(s.times, s.aux, c.fit_lo, c.fit_hi);
  double const total       = s.values.back();
  double const tail        = cumulative_increment(s, s.times.back() / 2.0, s.times.back());
  DecadeReport const dec   = decade_increments(s);

  ExperimentOutcome out;
  fs::path const path = fs::path(c.out_dir) / ("cook_" + hash + ".csv");
  write_text(path, csv({"t", "integrand", "cumulative"}, {s.times, s.aux, s.values}));
  out.files = {path};

  if (p.lambda != 0.0)
  {
    double const dev = std::abs(fit.slope + p.gamma);
    out.checks.push_back(check_less("|integrand slope + gamma|", dev, 0.15));
    if (p.gamma > 1.0)
    {
      out.checks.push_back(check_less("tail increment / total", tail / total, 0.05));
      if (!dec.ratios.empty())
        out.checks.push_back(check_less("latest decade ratio", dec.ratios.front(), 0.5));
    }
    else if (p.gamma == 1.0 && !dec.ratios.empty())
    {
      double const q = dec.ratios.front();
      out.checks.push_back({"latest decade ratio", q, 0.7, "in [0.7,1.3]", q >= 0.7 && q <= 1.3});
    }
  }

  nlohmann::json decades = nlohmann::json::array();
  for (std::size_t i = 0; i < dec.decades.size(); ++i)
    decades.push_back({{"from", dec.decades[i].first},
                       {"to", dec.decades[i].second},
                       {"increment", dec.increments[i]}});
  out.summary = {{"kind", "cook"},
                 {"hash", hash},
                 {"params", params_json(p)},
                 {"integrand_fit",
                  {{"slope", fit.slope}, {"residual", fit.residual}, {"window", {c.fit_lo, c.fit_hi}}}},
                 {"total", total},
                 {"tail_increment", tail},
                 {"decades", decades},
                 {"decade_ratios", dec.ratios}};
  return out;
}

inline ExperimentOutcome run_modifier_rl(ExperimentConfig const &c, std::string const &hash)
{
  namespace fs = std::filesystem;
  auto const &p            = c.params;
  WaveField const phi      = packet_for(c, p);
  TimeSchedule const sched = c.schedule();
  DecaySeries const s      = modifier_overlap_series(phi, phi, sched.diagnostic_times, p);

  std::vector<double> re, im, tf;
  double const t_support = support_threshold_time(p);
  for (std::size_t i = 0; i < s.times.size(); ++i)
  {
    re.push_back(s.complex_values[i].real());
    im.push_back(s.complex_values[i].imag());
    tf.push_back(s.times[i] >= t_support ? t_factor(s.times[i], p)
                                         : std::numeric_limits<double>::quiet_NaN());
  }

  ExperimentOutcome out;
  fs::path const path = fs::path(c.out_dir) / ("modifier_rl_" + hash + ".csv");
  write_text(path, csv({"t", "re", "im", "abs", "t_factor"}, {s.times, re, im, s.values, tf}));
  out.files = {path};

  double min_abs = s.values.front(), max_dev = 0.0;
  double first_below = std::numeric_limits<double>::quiet_NaN();
  double const base  = norm_squared(phi);
  for (std::size_t i = 0; i < s.values.size(); ++i)
  {
    min_abs = std::min(min_abs, s.values[i]);
    max_dev = std::max(max_dev, std::abs(s.values[i] - base));
    if (std::isnan(first_below) && s.values[i] < 0.2)
      first_below = s.times[i];
  }
  if (p.rho == 0.5)
    out.checks.push_back(check_less("max | |overlap| - (phi,phi) |", max_dev, 1e-12));
  else if (p.lambda != 0.0)
    out.checks.push_back(check_less("min |overlap|", min_abs, 0.2));

  out.summary = {{"kind", "modifier_rl"},
                 {"hash", hash},
                 {"params", params_json(p)},
                 {"min_abs", min_abs},
                 {"first_time_below_0.2", first_below},
                 {"max_deviation_from_norm", max_dev}};
  return out;
}

inline ExperimentOutcome run_sweep(ExperimentConfig const &c, std::string const &hash,
                                   unsigned threads)
{
  namespace fs = std::filesystem;
  auto axis = [](std::vector<double> const &sweep, double v) {
    return sweep.empty() ? std::vector<double>{v} : sweep;
  };
  std::vector<PhysicsParams> points;
  for (double rho : axis(c.sweep_rho, c.params.rho))
    for (double gamma : axis(c.sweep_gamma, c.params.gamma))
      for (double lambda : axis(c.sweep_lambda, c.params.lambda))
        points.push_back({rho, gamma, lambda, c.params.epsilon});

  std::vector<DefectRun> runs(points.size());
  unsigned const outer = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  unsigned const inner = std::max(1u, threads / outer);
  parallel_for(points.size(), outer,
               [&](std::size_t i) { runs[i] = run_defect(c, points[i], false, inner); });

  ExperimentOutcome out;
  std::vector<double> col_rho, col_gamma, col_lambda, col_slope, col_resid, col_last;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
  {
    auto const &s = runs[i].series;
    fs::path const path =
        fs::path(c.out_dir) / ("sweep_" + hash + "_" + std::to_string(i) + ".csv");
    write_text(path, csv({"t1", "t2", "defect"}, {s.times, s.aux, s.values}));
    out.files.push_back(path);
    col_rho.push_back(points[i].rho);
    col_gamma.push_back(points[i].gamma);
    col_lambda.push_back(points[i].lambda);
    col_slope.push_back(s.fitted_slope);
    col_resid.push_back(s.fit_residual);
    col_last.push_back(s.values.back());
    table.push_back({{"index", i},
                     {"params", params_json(points[i])},
                     {"fit", fit_json(s)},
                     {"last_defect", s.values.back()},
                     {"floor", {{"lambda_zero", runs[i].floor.lambda_zero},
                                {"dt_halving", runs[i].floor.dt_halving}}}});
  }
  fs::path const table_path = fs::path(c.out_dir) / ("sweep_" + hash + ".csv");
  write_text(table_path, csv({"rho", "gamma", "lambda", "slope", "residual", "last_defect"},
                             {col_rho, col_gamma, col_lambda, col_slope, col_resid, col_last}));
  out.files.push_back(table_path);
  out.summary = {{"kind", "sweep"}, {"hash", hash}, {"points", table}};
  return out;
}

inline std::vector<Check> selftest_checks(std::uint64_t seed)
{
  std::vector<Check> checks;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SpatialGrid const g = make_grid(1, 512, 100.0);
  PhysicsParams const p{0.75, 1.0, 1.0, 0.5};

  WaveField f(g, representation::position);
  std::normal_distribution<double> normal;
  for (auto &v : f.values())
    v = {normal(rng), normal(rng)};
  WaveField const spec  = to_frequency(f);
  WaveField const back  = to_position(spec);
  checks.push_back(check_less("transform round trip", distance(back, f) / l2_norm(f), 1e-12));
  checks.push_back(check_less("Parseval", std::abs(l2_norm(spec) - l2_norm(f)) / l2_norm(f), 1e-12));

  std::vector<double> const centre{1.0};
  WaveField const phi = build_wavepacket(g, p, centre, 0.1);
  checks.push_back(check_less("packet mass below epsilon", spectral_mass_below(phi, p.epsilon), 1e-300));
  checks.push_back(check_less("packet norm", std::abs(l2_norm(phi) - 1.0), 1e-12));

  double worst_phase = 0.0;
  for (int i = 0; i < 200; ++i)
  {
    PhysicsParams q{0.5 + 0.5 * unit(rng), 0.1 + 2.4 * unit(rng), -2.0 + 4.0 * unit(rng), 0.5};
    double const xi = 0.2 + 3.0 * unit(rng);
    double const t  = 60.0 * unit(rng);
    double const s  = std::pow(xi, 2.0 * q.rho - 1.0);
    double const t_on = 1.0 / s;
    // integrand V(|grad omega| tau) written out directly
    auto integrand = [&](double tau) {
      double const r = s * tau;
      return r >= 1.0 ? q.lambda * std::pow(r, -q.gamma) : 0.0;
    };
    double const oracle = t > t_on ? adaptive_simpson(integrand, t_on, t, 1e-14) : 0.0;
    double const value  = dollard_phase(t, xi, q).phase;
    worst_phase = std::max(worst_phase, std::abs(value - oracle) / (1.0 + std::abs(oracle)));
  }
  checks.push_back(check_less("Dollard phase vs quadrature", worst_phase, 1e-10));

  double worst_splice = 0.0;
  for (int i = 0; i < 200; ++i)
  {
    PhysicsParams q{0.5 + 0.5 * unit(rng), 0.1 + 2.4 * unit(rng), -2.0 + 4.0 * unit(rng),
                    0.1 + unit(rng)};
    double const xi = q.epsilon * (1.0 + 4.0 * unit(rng));
    double const t  = support_threshold_time(q) * (1.0 + 100.0 * unit(rng));
    double const lhs = dollard_phase(t, xi, q).phase;
    double const rhs = modifier_rate(xi, q) * t_factor(t, q) + r_symbol_phase(xi, q);
    worst_splice     = std::max(worst_splice, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }
  checks.push_back(check_less("splice identity", worst_splice, 1e-12));

  WaveField const a  = free_propagate(free_propagate(phi, 3.0, p), 4.5, p);
  WaveField const b  = free_propagate(phi, 7.5, p);
  checks.push_back(check_less("free group law", distance(a, b), 1e-12));

  WaveField const mf = apply_modifier(free_propagate(phi, 5.0, p), 40.0, p);
  WaveField const fm = free_propagate(apply_modifier(phi, 40.0, p), 5.0, p);
  checks.push_back(check_less("modifier/free commutation", distance(mf, fm), 1e-12));

  WaveField const round = apply_modifier(apply_modifier(phi, 40.0, p), 40.0, p, true);
  checks.push_back(check_less("modifier unitarity", distance(round, phi), 1e-12));

  StrangPropagator const prop(g, p, 0.05);
  WaveField pos = to_position(phi);
  prop.advance(pos, 1000);
  checks.push_back(check_less("Strang unitarity, 1000 steps", std::abs(l2_norm(pos) - 1.0), 1e-10));
  prop.advance(pos, -1000);
  checks.push_back(check_less("forward/backward identity", distance(pos, to_position(phi)), 1e-10));

  PhysicsParams half = p;
  half.rho           = 0.5;
  WaveField const phi_half = build_wavepacket(g, half, centre, 0.1);
  double worst_half = 0.0;
  for (double t : {1.0, 10.0, 100.0, 1e4, 1e8})
    worst_half = std::max(worst_half, std::abs(std::abs(modifier_overlap(phi_half, phi_half, t, half)) - 1.0));
  checks.push_back(check_less("rho = 1/2 modifier overlap modulus", worst_half, 1e-12));

  std::vector<double> ts, vs;
  for (int k = 0; k < 10; ++k)
  {
    ts.push_back(std::pow(2.0, k));
    vs.push_back(3.0 * std::pow(ts.back(), -1.3));
  }
  auto const fit = fit_loglog_slope(ts, vs, 1.0, 512.0);
  checks.push_back(check_less("power-law fit slope error", std::abs(fit.slope + 1.3), 1e-12));
  return checks;
}

inline ExperimentOutcome run_selftest(ExperimentConfig const &c, std::string const &hash)
{
  namespace fs = std::filesystem;
  ExperimentOutcome out;
  out.checks = selftest_checks(c.seed);
  std::string text = "check,value,threshold,passed\n";
  for (auto const &ch : out.checks)
    text += ch.name + "," + format_double(ch.value) + "," + format_double(ch.threshold) + "," +
            (ch.passed ? "1" : "0") + "\n";
  fs::path const path = fs::path(c.out_dir) / ("selftest_" + hash + ".csv");
  write_text(path, text);
  out.files   = {path};
  out.summary = {{"kind", "selftest"}, {"hash", hash}};
  return out;
}
} // namespace detail

/// Runs the configured experiment, writing `<kind>_<hash>.csv` (plus any
/// companion CSVs) and `summary_<hash>.json` into out_dir.
inline ExperimentOutcome run_experiment(ExperimentConfig const &c, unsigned threads = 1)
{
  namespace fs = std::filesystem;
  validate(c);
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec)
    throw io_error("cannot create output directory " + c.out_dir + ": " + ec.message());

  std::string const hash = params_hash(c);
  ExperimentOutcome out;
  switch (c.kind)
  {
  case experiment_kind::cauchy:
    out = detail::run_cauchy(c, hash, threads, false);
    break;
  case experiment_kind::dollard_cauchy:
    out = detail::run_cauchy(c, hash, threads, true);
    break;
  case experiment_kind::weaklimit:
    out = detail::run_weaklimit(c, hash);
    break;
  case experiment_kind::cook:
    out = detail::run_cook(c, hash, threads);
    break;
  case experiment_kind::modifier_rl:
    out = detail::run_modifier_rl(c, hash);
    break;
  case experiment_kind::sweep:
    out = detail::run_sweep(c, hash, threads);
    break;
  case experiment_kind::selftest:
    out = detail::run_selftest(c, hash);
    break;
  }

  nlohmann::json checks = nlohmann::json::array();
  for (auto const &ch : out.checks)
    checks.push_back(to_json(ch));
  out.summary["checks"] = checks;
  out.summary["passed"] = out.passed();
  out.summary["config"] = serialize_config(c);
  fs::path const summary_path = fs::path(c.out_dir) / ("summary_" + hash + ".json");
  detail::write_text(summary_path, out.summary.dump(2) + "\n");
  out.files.push_back(summary_path);
  return out;
}

} // namespace fracscatter
