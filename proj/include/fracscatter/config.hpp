#pragma once

#include "errors.hpp"
#include "format.hpp"
#include "grid.hpp"
#include "params.hpp"
#include "schedule.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace fracscatter
{
enum class experiment_kind
{
  cauchy,
  dollard_cauchy,
  weaklimit,
  cook,
  modifier_rl,
  sweep,
  selftest
};

inline constexpr std::array<std::pair<experiment_kind, std::string_view>, 7> kind_names{{
    {experiment_kind::cauchy, "cauchy"},
    {experiment_kind::dollard_cauchy, "dollard_cauchy"},
    {experiment_kind::weaklimit, "weaklimit"},
    {experiment_kind::cook, "cook"},
    {experiment_kind::modifier_rl, "modifier_rl"},
    {experiment_kind::sweep, "sweep"},
    {experiment_kind::selftest, "selftest"},
}};

inline std::string_view to_string(experiment_kind k)
{
  for (auto const &[kind, name] : kind_names)
    if (kind == k)
      return name;
  return "unknown";
}

inline std::optional<experiment_kind> parse_kind(std::string_view name)
{
  for (auto const &[kind, name_] : kind_names)
    if (name_ == name)
      return kind;
  return std::nullopt;
}

/// Everything needed to reproduce one experiment. Sweep axes are non-empty
/// only for kind = sweep; params then holds the first point.
struct ExperimentConfig
{
  PhysicsParams params;
  int dim                       = 1;
  std::size_t n_points          = std::size_t{1} << 17;
  double half_length            = 1500.0;
  std::vector<double> xi_center = {1.0};
  double xi_width               = 0.1;
  double dt                     = 0.05;
  double t0                     = 1.0;
  double ratio                  = 1.189207115002721; // 2^(1/4)
  double t_max                  = 800.0;
  double fit_lo                 = 50.0;
  double fit_hi                 = 400.0;
  experiment_kind kind          = experiment_kind::selftest;
  std::vector<double> sweep_rho, sweep_gamma, sweep_lambda;
  std::string out_dir = ".";
  std::uint64_t seed  = 1;

  bool operator==(ExperimentConfig const &) const = default;

  PacketSpec packet() const { return PacketSpec{xi_center, xi_width}; }
  SpatialGrid grid() const { return make_grid(dim, n_points, half_length); }
  TimeSchedule schedule() const { return make_geometric_schedule(dt, t0, ratio, t_max); }
};

namespace detail
{
inline std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view key, std::string_view text)
{
  text = trim(text);
  double v = 0.0;
  auto const res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw config_error("key '" + std::string(key) + "': cannot parse '" + std::string(text) +
                       "' as a number");
  return v;
}

inline std::uint64_t parse_unsigned(std::string_view key, std::string_view text)
{
  text = trim(text);
  std::uint64_t v = 0;
  auto const res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw config_error("key '" + std::string(key) + "': expected a nonnegative integer, got '" +
                       std::string(text) + "'");
  return v;
}

inline std::vector<double> parse_list(std::string_view key, std::string_view text)
{
  std::vector<double> out;
  std::size_t start = 0;
  for (;;)
  {
    auto const comma = text.find(',', start);
    out.push_back(parse_double(key, text.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

inline std::string join(std::vector<double> const &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    if (i)
      s += ',';
    s += format_double(v[i]);
  }
  return s;
}

inline void require(bool ok, std::string const &key, std::string const &what)
{
  if (!ok)
    throw config_error("key '" + key + "': " + what);
}
} // namespace detail

/// Range and consistency checks, including the no-wrap condition for kinds
/// that propagate on the configured grid.
inline void validate(ExperimentConfig const &c)
{
  using detail::require;
  auto const &p = c.params;
  bool const degeneracy_mode = c.kind == experiment_kind::modifier_rl;
  require(p.rho >= 0.5 && p.rho <= 1.0, "rho", "must lie in [0.5, 1]");
  require(p.rho > 0.5 || degeneracy_mode, "rho",
          "rho = 0.5 is only allowed for kind = modifier_rl");
  require(p.gamma > 0.0 && std::isfinite(p.gamma), "gamma", "must be positive");
  require(std::isfinite(p.lambda), "lambda", "must be finite");
  require(p.epsilon > 0.0 && std::isfinite(p.epsilon), "epsilon", "must be positive");
  require(c.dim == 1 || c.dim == 2, "dim", "must be 1 or 2");
  require(c.n_points >= 8 && is_power_of_two(c.n_points), "n_points",
          "must be a power of two >= 8");
  require(c.half_length > 0.0 && std::isfinite(c.half_length), "half_length", "must be positive");
  require(c.xi_center.size() == static_cast<std::size_t>(c.dim), "xi_center",
          "needs one component per axis");
  require(c.xi_width > 0.0, "xi_width", "must be positive");
  require(c.dt > 0.0, "dt", "must be positive");
  require(c.ratio > 1.0, "ratio", "must exceed 1");
  require(c.t0 > 0.0, "t0", "must be positive");
  require(c.t_max >= c.t0, "t_max", "must be >= t0");
  require(c.fit_lo > 0.0 && c.fit_hi > c.fit_lo, "fit_hi", "need 0 < fit_lo < fit_hi");
  if (c.kind == experiment_kind::cook)
    require(c.ratio <= 1.2, "ratio", "the Cook-Kuroda integral needs ratio <= 1.2");
  for (double r : c.sweep_rho)
    require(r > 0.5 && r <= 1.0, "rho", "sweep values must lie in (0.5, 1]");
  for (double g : c.sweep_gamma)
    require(g > 0.0, "gamma", "sweep values must be positive");
  bool const has_sweep = !c.sweep_rho.empty() || !c.sweep_gamma.empty() || !c.sweep_lambda.empty();
  require(!has_sweep || c.kind == experiment_kind::sweep, "kind",
          "comma-separated rho/gamma/lambda lists need kind = sweep");

  bool const propagates = c.kind != experiment_kind::modifier_rl &&
                          c.kind != experiment_kind::selftest;
  if (propagates)
  {
    SpatialGrid const g = c.grid();
    std::vector<double> rhos = c.sweep_rho.empty() ? std::vector<double>{p.rho} : c.sweep_rho;
    for (double rho : rhos)
    {
      PhysicsParams q = p;
      q.rho           = rho;
      check_no_wrap(g, q, c.packet(), c.t_max);
    }
  }
}

inline std::string serialize_config(ExperimentConfig const &c)
{
  auto axis = [](std::vector<double> const &sweep, double value) {
    return sweep.empty() ? format_double(value) : detail::join(sweep);
  };
  std::ostringstream out;
  out << "kind = " << to_string(c.kind) << '\n'
      << "rho = " << axis(c.sweep_rho, c.params.rho) << '\n'
      << "gamma = " << axis(c.sweep_gamma, c.params.gamma) << '\n'
      << "lambda = " << axis(c.sweep_lambda, c.params.lambda) << '\n'
      << "epsilon = " << format_double(c.params.epsilon) << '\n'
      << "dim = " << c.dim << '\n'
      << "n_points = " << c.n_points << '\n'
      << "half_length = " << format_double(c.half_length) << '\n'
      << "xi_center = " << detail::join(c.xi_center) << '\n'
      << "xi_width = " << format_double(c.xi_width) << '\n'
      << "dt = " << format_double(c.dt) << '\n'
      << "t0 = " << format_double(c.t0) << '\n'
      << "ratio = " << format_double(c.ratio) << '\n'
      << "t_max = " << format_double(c.t_max) << '\n'
      << "fit_lo = " << format_double(c.fit_lo) << '\n'
      << "fit_hi = " << format_double(c.fit_hi) << '\n'
      << "seed = " << c.seed << '\n'
      << "out_dir = " << c.out_dir << '\n';
  return out.str();
}

/// Parses the flat `key = value` format ('#' starts a comment). Every key is
/// optional except kind, which may instead come from the command line.
/// Unknown or repeated keys are rejected.
inline ExperimentConfig parse_config(std::string_view text,
                                     std::optional<experiment_kind> kind_override = std::nullopt)
{
  static std::set<std::string, std::less<>> const known = {
      "kind",   "rho",      "gamma", "lambda", "epsilon", "dim",    "n_points",
      "half_length", "xi_center", "xi_width", "dt", "t0", "ratio", "t_max",
      "fit_lo", "fit_hi", "seed", "out_dir"};

  std::map<std::string, std::string, std::less<>> entries;
  std::size_t line_no = 0;
  std::size_t start   = 0;
  while (start <= text.size())
  {
    auto const end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (auto const hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    auto const eq = line.find('=');
    if (eq == std::string_view::npos)
      throw config_error("line " + std::to_string(line_no) + ": expected key = value");
    std::string key(detail::trim(line.substr(0, eq)));
    std::string value(detail::trim(line.substr(eq + 1)));
    if (!known.contains(key))
      throw config_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (value.empty())
      throw config_error("key '" + key + "': empty value");
    if (!entries.emplace(key, value).second)
      throw config_error("key '" + key + "' given more than once");
  }

  ExperimentConfig c;
  if (auto it = entries.find("kind"); it != entries.end())
  {
    auto const k = parse_kind(it->second);
    if (!k)
      throw config_error("key 'kind': unknown experiment kind '" + it->second + "'");
    if (kind_override && *kind_override != *k)
      throw config_error("key 'kind': config says '" + it->second +
                         "' but the command line asks for '" +
                         std::string(to_string(*kind_override)) + "'");
    c.kind = *k;
  }
  else if (kind_override)
    c.kind = *kind_override;
  else
    throw config_error("missing required key 'kind'");

  auto get = [&](std::string_view key) -> std::optional<std::string_view> {
    auto it = entries.find(key);
    if (it == entries.end())
      return std::nullopt;
    return std::string_view(it->second);
  };
  auto number = [&](std::string_view key, double &slot) {
    if (auto v = get(key))
      slot = detail::parse_double(key, *v);
  };
  auto axis = [&](std::string_view key, double &slot, std::vector<double> &sweep) {
    if (auto v = get(key))
    {
      auto const values = detail::parse_list(key, *v);
      slot              = values.front();
      if (values.size() > 1)
        sweep = values;
    }
  };

  axis("rho", c.params.rho, c.sweep_rho);
  axis("gamma", c.params.gamma, c.sweep_gamma);
  axis("lambda", c.params.lambda, c.sweep_lambda);
  number("epsilon", c.params.epsilon);
  if (auto v = get("dim"))
    c.dim = static_cast<int>(detail::parse_unsigned("dim", *v));
  if (auto v = get("n_points"))
    c.n_points = static_cast<std::size_t>(detail::parse_unsigned("n_points", *v));
  number("half_length", c.half_length);
  if (auto v = get("xi_center"))
    c.xi_center = detail::parse_list("xi_center", *v);
  else if (c.dim == 2)
    c.xi_center = {1.0, 0.0};
  number("xi_width", c.xi_width);
  number("dt", c.dt);
  number("t0", c.t0);
  number("ratio", c.ratio);
  number("t_max", c.t_max);
  number("fit_lo", c.fit_lo);
  number("fit_hi", c.fit_hi);
  if (auto v = get("seed"))
    c.seed = detail::parse_unsigned("seed", *v);
  if (auto v = get("out_dir"))
    c.out_dir = std::string(*v);

  validate(c);
  return c;
}

/// FNV-1a over the serialized physics and numerics (out_dir excluded), as
/// 16 hex digits. Stable across platforms and runs.
inline std::string params_hash(ExperimentConfig const &c)
{
  ExperimentConfig copy = c;
  copy.out_dir          = "";
  std::string const text = serialize_config(copy);
  std::uint64_t h        = 14695981039346656037ull;
  for (unsigned char ch : text)
  {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static char const digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4)
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

} // namespace fracscatter
