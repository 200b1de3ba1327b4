// Copyright 2026 The pcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: analytic metric dumps, figure reproductions, the
// scheme comparison table, and one-shot partition runs. CSV goes to --out,
// a one-line JSON summary goes to stdout. Exit codes: 0 on success, 2 on
// configuration errors, 3 on runtime failures.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcsim/config.hpp"
#include "pcsim/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::uint64_t seed = 42;
  bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file");
  cmd->add_option("--set", args.overrides,
                  "Override a config key, e.g. --set M=64 or --set M=32,128");
  cmd->add_option("--out", args.out_path, "Output CSV path")->required();
  cmd->add_option("--seed", args.seed, "Master seed (default 42)")
      ->each([&args](const std::string&) { args.seed_given = true; });
}

pcsim::SystemConfig resolve_config(const pcsim::SystemConfig& defaults,
                                   const CommonArgs& args) {
  pcsim::SystemConfig config = defaults;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) {
      throw pcsim::ConfigError("config: cannot open '" + args.config_path +
                               "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    pcsim::merge_config_json(config, text.str());
  }
  for (const std::string& kv : args.overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw pcsim::ConfigError("--set expects key=value, got '" + kv + "'");
    }
    pcsim::apply_override(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (args.seed_given) config.seed = args.seed;
  config.validate();
  return config;
}

int run_command(const std::string& command, const pcsim::SystemConfig& config,
                const CommonArgs& args, int figure_id) {
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    throw pcsim::ConfigError("cannot open output file '" + args.out_path +
                             "'");
  }
  pcsim::RunSummary summary;
  if (command == "analytic") {
    summary = pcsim::cmd_analytic(config, out);
  } else if (command == "figure") {
    summary = pcsim::cmd_figure(figure_id, config, out);
  } else if (command == "table1") {
    summary = pcsim::cmd_table1(config, out);
  } else {
    summary = pcsim::cmd_partition(config, out);
  }
  out.close();

  nlohmann::json line = {{"command", command},
                         {"rows", summary.rows},
                         {"out", args.out_path},
                         {"wall_s", summary.wall_seconds},
                         {"seed", config.seed}};
  if (command == "figure") line["id"] = figure_id;
  std::cout << line.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-cell massive MIMO pilot simulator"};
  app.require_subcommand(1);

  CommonArgs analytic_args, figure_args, table_args, partition_args;
  int figure_id = 0;

  CLI::App* analytic =
      app.add_subcommand("analytic", "Per-user closed-form metrics");
  add_common(analytic, analytic_args);

  CLI::App* figure = app.add_subcommand("figure", "Reproduce one figure");
  figure->add_option("--id", figure_id, "Figure id (3-14)")->required();
  add_common(figure, figure_args);

  CLI::App* table1 =
      app.add_subcommand("table1", "Scheme comparison table");
  add_common(table1, table_args);

  CLI::App* partition =
      app.add_subcommand("partition", "Greedy user partition dump");
  add_common(partition, partition_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analytic->parsed()) {
      return run_command("analytic",
                         resolve_config(pcsim::analytic_defaults(),
                                        analytic_args),
                         analytic_args, 0);
    }
    if (figure->parsed()) {
      return run_command(
          "figure",
          resolve_config(pcsim::figure_defaults(figure_id), figure_args),
          figure_args, figure_id);
    }
    if (table1->parsed()) {
      return run_command("table1",
                         resolve_config(pcsim::table1_defaults(), table_args),
                         table_args, 0);
    }
    return run_command(
        "partition",
        resolve_config(pcsim::partition_defaults(), partition_args),
        partition_args, 0);
  } catch (const pcsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
