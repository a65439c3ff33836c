#include "fracscatter/fracscatter.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace fracscatter;

TEST(Config, MinimalSelftestDefaults)
{
  auto c = parse_config("kind = selftest\n");
  EXPECT_EQ(c.kind, experiment_kind::selftest);
  EXPECT_EQ(c.params.rho, 0.75);
  EXPECT_EQ(c.params.gamma, 1.0);
  EXPECT_EQ(c.params.lambda, 1.0);
  EXPECT_EQ(c.params.epsilon, 0.5);
  EXPECT_EQ(c.n_points, std::size_t{1} << 17);
  EXPECT_EQ(c.half_length, 1500.0);
  EXPECT_EQ(c.dt, 0.05);
  EXPECT_EQ(c.t_max, 800.0);
}

TEST(Config, KindFromCommandLine)
{
  auto c = parse_config("# nothing\n", experiment_kind::cook);
  EXPECT_EQ(c.kind, experiment_kind::cook);
  EXPECT_THROW(parse_config(""), config_error);
  EXPECT_THROW(parse_config("kind = cook\n", experiment_kind::cauchy), config_error);
}

TEST(Config, RangeErrorsNameTheKey)
{
  try
  {
    parse_config("kind = cauchy\ngamma = -1\n");
    FAIL() << "accepted gamma = -1";
  }
  catch (config_error const &e)
  {
    EXPECT_NE(std::string(e.what()).find("gamma"), std::string::npos);
  }
  EXPECT_THROW(parse_config("kind = cauchy\nrho = 1.2\n"), config_error);
  EXPECT_THROW(parse_config("kind = cauchy\nrho = 0.5\n"), config_error);
  EXPECT_NO_THROW(parse_config("kind = modifier_rl\nrho = 0.5\n"));
  EXPECT_THROW(parse_config("kind = cauchy\nepsilon = 0\n"), config_error);
  EXPECT_THROW(parse_config("kind = cauchy\nn_points = 1000\n"), config_error);
  EXPECT_THROW(parse_config("kind = cauchy\nfoo = 1\n"), config_error);
  EXPECT_THROW(parse_config("kind = cauchy\nrho = 0.7\nrho = 0.8\n"), config_error);
  EXPECT_THROW(parse_config("kind = cauchy\nrho = abc\n"), config_error);
  EXPECT_THROW(parse_config("kind = cook\nratio = 1.5\n"), config_error);
  EXPECT_THROW(parse_config("kind = cauchy\nrho = 0.6, 0.7\n"), config_error);
}

TEST(Config, NoWrapRejectionSuggestsLength)
{
  // v_max = (1 + 5 * 0.1)^{2 rho - 1}, extent 6 / width
  double const suggested = (800.0 * std::sqrt(1.5) + 60.0) / 0.9;
  try
  {
    parse_config("kind = cauchy\nt_max = 800\nhalf_length = 100\n");
    FAIL() << "accepted a wrapping configuration";
  }
  catch (config_error const &e)
  {
    std::string const msg = e.what();
    EXPECT_NE(msg.find("half_length"), std::string::npos);
    auto const at = msg.find(">= ");
    ASSERT_NE(at, std::string::npos);
    EXPECT_NEAR(std::stod(msg.substr(at + 3)), suggested, 1e-3);
  }
  EXPECT_NEAR(minimal_half_length({0.75, 1, 1, 0.5}, PacketSpec{{1.0}, 0.1}, 800.0), suggested,
              1e-9);
}

TEST(Config, RoundTrip)
{
  auto c = parse_config("kind = sweep\n"
                        "gamma = 0.5, 1, 1.5, 2\n"
                        "rho = 0.6\n"
                        "xi_width = 0.125\n"
                        "ratio = 1.4142135623730951\n"
                        "seed = 77\n"
                        "out_dir = results/run a\n");
  EXPECT_EQ(c.sweep_gamma.size(), 4u);
  EXPECT_EQ(c.params.gamma, 0.5);
  auto again = parse_config(serialize_config(c));
  EXPECT_EQ(again, c);
  EXPECT_EQ(serialize_config(again), serialize_config(c));
}

TEST(Config, HashIgnoresOutputDirectory)
{
  auto a = parse_config("kind = cauchy\n");
  auto b = a;
  b.out_dir = "elsewhere";
  EXPECT_EQ(params_hash(a), params_hash(b));
  b.params.gamma = 0.5;
  EXPECT_NE(params_hash(a), params_hash(b));
  EXPECT_EQ(params_hash(a).size(), 16u);
}

TEST(Config, TwoDimensionalDefaultsCentre)
{
  auto c = parse_config("kind = selftest\ndim = 2\nn_points = 256\n");
  EXPECT_EQ(c.xi_center, (std::vector<double>{1.0, 0.0}));
}

TEST(FormatDouble, ShortestRoundTrip)
{
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.5, -7.125e12})
    EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(format_double(0.05), "0.05");
}

TEST(Experiment, SelftestWritesOutputs)
{
  auto dir = std::filesystem::temp_directory_path() / "fracscatter_selftest_unit";
  std::filesystem::remove_all(dir);
  auto c    = parse_config("kind = selftest\n");
  c.out_dir = dir.string();
  auto out  = run_experiment(c);
  EXPECT_TRUE(out.passed());
  for (auto const &ch : out.checks)
    EXPECT_TRUE(ch.passed) << ch.name << " = " << ch.value;
  std::string const hash = params_hash(c);
  EXPECT_TRUE(std::filesystem::exists(dir / ("selftest_" + hash + ".csv")));
  EXPECT_TRUE(std::filesystem::exists(dir / ("summary_" + hash + ".json")));

  // deterministic
  std::ifstream a(dir / ("selftest_" + hash + ".csv"));
  std::string first((std::istreambuf_iterator<char>(a)), {});
  run_experiment(c);
  std::ifstream b(dir / ("selftest_" + hash + ".csv"));
  std::string second((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(first, second);
}

TEST(Experiment, SmallCauchyRunIsRecomputableFromCsv)
{
  auto dir = std::filesystem::temp_directory_path() / "fracscatter_cauchy_unit";
  std::filesystem::remove_all(dir);
  auto c = parse_config("kind = cauchy\nn_points = 4096\nhalf_length = 300\nt_max = 128\n"
                        "fit_lo = 8\nfit_hi = 64\ndt = 0.1\n");
  c.out_dir = dir.string();
  auto out  = run_experiment(c);
  std::string const hash = params_hash(c);
  std::ifstream in(dir / ("cauchy_" + hash + ".csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t1,t2,defect");
  std::vector<double> t, v;
  while (std::getline(in, line))
  {
    auto p1 = line.find(','), p2 = line.rfind(',');
    t.push_back(std::stod(line.substr(0, p1)));
    v.push_back(std::stod(line.substr(p2 + 1)));
  }
  auto fit = fit_loglog_slope(t, v, 8, 64);
  EXPECT_DOUBLE_EQ(fit.slope, out.summary["fit"]["slope"].get<double>());
}

TEST(Experiment, UnwritableOutputIsIoError)
{
  auto c    = parse_config("kind = selftest\n");
  c.out_dir = "/proc/fracscatter_no_such_dir";
  EXPECT_THROW(run_experiment(c), io_error);
}
