#include "fracscatter/fracscatter.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = fracscatter;

namespace
{
enum exit_code
{
  ok         = 0,
  bad_config = 1,
  failed     = 2,
  io_failure = 3
};

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw fs::io_error("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"fracscatter: wave-operator diagnostics for fractional dispersion with long-range potentials"};
  std::string kind_name, config_path, out_dir;
  unsigned threads = 1;

  std::vector<std::string> kinds;
  for (auto const &[k, name] : fs::kind_names)
    kinds.emplace_back(name);
  app.add_option("kind", kind_name, "experiment kind")->required()->check(CLI::IsMember(kinds));
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--out", out_dir, "output directory (overrides out_dir)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    int const rc = app.exit(e);
    return rc == 0 ? ok : bad_config;
  }

  fs::ExperimentConfig cfg;
  try
  {
    std::string const text = config_path.empty() ? std::string{} : read_file(config_path);
    cfg = fs::parse_config(text, fs::parse_kind(kind_name));
    if (!out_dir.empty())
      cfg.out_dir = out_dir;
  }
  catch (fs::io_error const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return io_failure;
  }
  catch (fs::error const &e)
  {
    std::cerr << "config error: " << e.what() << '\n';
    return bad_config;
  }

  try
  {
    auto const outcome = fs::run_experiment(cfg, threads);
    for (auto const &c : outcome.checks)
    {
      std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << fs::format_double(c.value)
                << ' ' << c.relation;
      if (c.relation.rfind("in ", 0) != 0)
        std::cout << ' ' << fs::format_double(c.threshold);
      std::cout << '\n';
    }
    for (auto const &f : outcome.files)
      std::cout << "wrote " << f.string() << '\n';
    return outcome.passed() ? ok : failed;
  }
  catch (fs::io_error const &e)
  {
    std::cerr << "I/O error: " << e.what() << '\n';
    return io_failure;
  }
  catch (fs::config_error const &e)
  {
    std::cerr << "config error: " << e.what() << '\n';
    return bad_config;
  }
  catch (std::exception const &e)
  {
    std::cerr << "numerical error: " << e.what() << '\n';
    return failed;
  }
}
