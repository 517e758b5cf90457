// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line driver: solve one configuration, run a parameter study, or dump a generated
// system to MatrixMarket files.
//
// Exit codes: 0 success, 1 a run did not converge, 2 configuration error, 3 setup or solve
// failure.

#include <iostream>
#include <string>
#include <vector>

#include <blockamg/error.hpp>

#include "CLI11.hpp"
#include "harness.hpp"

namespace
{

using namespace blockamg;
using namespace blockamg::harness;

constexpr int exit_not_converged = 1;
constexpr int exit_config = 2;
constexpr int exit_failure = 3;

KeyValueConfig load_config(const std::string &path, const std::vector<std::string> &overrides)
{
  KeyValueConfig kv = path.empty() ? KeyValueConfig{} : KeyValueConfig::load(path);
  for (const auto &o : overrides)
  {
    kv.set_assignment(o);
  }
  return kv;
}

void print_record(const RunRecord &r)
{
  std::cout << csv_row(r) << '\n';
  if (!r.error.empty())
  {
    std::cerr << "error: " << r.error << '\n';
  }
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Monolithic block algebraic multigrid driver"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  bool allow_failures = false;
  const auto add_common = [&](CLI::App *cmd)
  {
    cmd->add_option("-c,--config", config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    cmd->add_option("-s,--set", overrides, "override a configuration key (key=value)");
  };
  auto *solve = app.add_subcommand("solve", "solve one configured system");
  add_common(solve);
  auto *study = app.add_subcommand("study", "run every combination of the sweep.* keys");
  add_common(study);
  study->add_flag("--allow-failures", allow_failures,
                  "exit 0 even if some runs do not converge");
  auto *dump = app.add_subcommand("dump", "write the generated system as MatrixMarket files");
  add_common(dump);

  CLI11_PARSE(app, argc, argv);

  try
  {
    const auto kv = load_config(config_path, overrides);
    if (solve->parsed())
    {
      const auto config = make_run_config(kv);
      const auto out = run_solve(config);
      std::cout << csv_header << '\n';
      print_record(out.record);
      return out.record.converged ? 0 : exit_not_converged;
    }
    if (study->parsed())
    {
      const auto configs = expand_study(kv);
      const auto csv = make_run_config(kv).csv_path;
      const auto records = run_study(configs, csv);
      std::cout << csv_header << '\n';
      bool all_converged = true;
      for (const auto &r : records)
      {
        print_record(r);
        all_converged = all_converged && r.converged;
      }
      return all_converged || allow_failures ? 0 : exit_not_converged;
    }
    run_dump(make_run_config(kv));
    return 0;
  }
  catch (const Error &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Config ? exit_config : exit_failure;
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
}
