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

#include "pcsim/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "pcsim/csv.hpp"
#include "pcsim/engine.hpp"
#include "pcsim/metrics.hpp"

namespace pcsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

PowerSplit config_split(const SystemConfig& config, int antennas,
                        int formula_c_u) {
  if (config.rho_mode == RhoMode::kFixed) {
    return fixed_power_split(config.rho_d_sq);
  }
  return optimal_power_split(antennas, config.cells(), config.users_per_cell,
                             formula_c_u);
}

SystemConfig with_antennas(const SystemConfig& config, int antennas) {
  SystemConfig out = config;
  out.antennas_sweep = {antennas};
  return out;
}

double ber_of(const AggregateReport& report, const std::string& err,
              const std::string& bits) {
  const double b = report.mean(bits);
  return b > 0.0 ? report.mean(err) / b : 0.0;
}

const char* omitted_baselines_note =
    "baseline estimators from other works are omitted; columns cover the "
    "least-squares training-pilot and non-iterative superimposed-pilot "
    "receivers only";

std::vector<double> radius_axis(const SystemConfig& config) {
  return config.radius_sweep.empty()
             ? std::vector<double>{config.circle_radius}
             : config.radius_sweep;
}

std::vector<int> users_axis(const SystemConfig& config) {
  return config.users_sweep.empty()
             ? std::vector<int>{config.users_per_cell}
             : config.users_sweep;
}

const char* assignment_label(HybridAssignment a) {
  switch (a) {
    case HybridAssignment::kGreedy:
      return "hybrid";
    case HybridAssignment::kAllTp:
      return "tp";
    case HybridAssignment::kAllSp:
      return "sp";
  }
  return "?";
}

constexpr HybridAssignment kAssignments[] = {HybridAssignment::kGreedy,
                                             HybridAssignment::kAllTp,
                                             HybridAssignment::kAllSp};

RunSummary figure_cdf_sinr(const SystemConfig& config, CsvWriter& csv) {
  const int K = config.users_per_cell;
  csv.row({"sinr_db", "cdf", "scheme", "M"});
  std::vector<double> tp;
  std::vector<std::vector<double>> sp(config.antennas_sweep.size());
  for (long p = 0; p < config.trials; ++p) {
    const Scene scene = make_scene(config, p);
    for (std::size_t mi = 0; mi < config.antennas_sweep.size(); ++mi) {
      const int antennas = config.antennas_sweep[mi];
      const PowerSplit split = config_split(config, antennas, config.c_u);
      const MetricInputs in{scene.beta,  antennas,           config.c_u,
                            config.c_d,  config.tau(),       config.sigma_sq(),
                            split,       scene.color};
      for (int m = 0; m < K; ++m) {
        if (mi == 0) tp.push_back(dl_sinr_tp(in, 0, m));
        sp[mi].push_back(dl_sinr_sp_exact(in, 0, m));
      }
    }
  }
  auto emit = [&](std::vector<double>& values, const char* scheme,
                  int antennas) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      csv.row({to_db(values[i]), (static_cast<double>(i) + 1.0) / n, scheme,
               antennas});
    }
  };
  for (std::size_t mi = 0; mi < config.antennas_sweep.size(); ++mi) {
    std::vector<double> tp_copy = tp;  // identical curve at every M
    emit(tp_copy, "tp", config.antennas_sweep[mi]);
    emit(sp[mi], "sp", config.antennas_sweep[mi]);
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_dl_rate_vs_m(const SystemConfig& config, CsvWriter& csv) {
  const int K = config.users_per_cell;
  csv.row({"M", "rate_dl_tp_analytic_bpshz", "rate_dl_tp_mc_bpshz",
           "rate_dl_sp_analytic_bpshz", "rate_dl_sp_mc_bpshz"});
  const Scene scene = make_scene(config, 0);
  for (int antennas : config.antennas_sweep) {
    const SystemConfig cfg = with_antennas(config, antennas);
    const PowerSplit split = config_split(config, antennas, config.c_u);
    const MetricInputs in{scene.beta,  antennas,          config.c_u,
                          config.c_d,  config.tau(),      config.sigma_sq(),
                          split,       scene.color};
    const AggregateReport mc =
        run_trials(cfg, Experiment::kDlLink, config.trials);
    double tp_an = 0.0, sp_an = 0.0, tp_mc = 0.0, sp_mc = 0.0;
    for (int m = 0; m < K; ++m) {
      tp_an += rate_dl(dl_sinr_tp(in, 0, m), config.c_u, config.c_d);
      sp_an += rate_dl(dl_sinr_sp_exact(in, 0, m), config.c_u, config.c_d);
      const double b = scene.beta(0, 0, m);
      const std::string user = std::to_string(m);
      tp_mc += rate_dl(b * b / mc.mean("dl_intpow_tp_" + user), config.c_u,
                       config.c_d);
      sp_mc += rate_dl(b * b / mc.mean("dl_intpow_sp_" + user), config.c_u,
                       config.c_d);
    }
    csv.row({antennas, tp_an / K, tp_mc / K, sp_an / K, sp_mc / K});
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_dl_ber_vs_m(const SystemConfig& config, CsvWriter& csv,
                              bool with_note) {
  if (with_note) csv.comment(omitted_baselines_note);
  csv.row({"M", "ber_dl_tp_prob", "ber_dl_sp_prob"});
  for (int antennas : config.antennas_sweep) {
    const AggregateReport mc = run_trials(with_antennas(config, antennas),
                                          Experiment::kDlLink, config.trials);
    csv.row({antennas, ber_of(mc, "dl_err_tp", "dl_bits_tp"),
             ber_of(mc, "dl_err_sp", "dl_bits_sp")});
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_mse_vs_m(const SystemConfig& config, CsvWriter& csv) {
  const int K = config.users_per_cell;
  csv.row({"M", "mse_sp_analytic", "mse_sp_mc", "mse_tp_analytic",
           "mse_tp_mc", "crlb"});
  const Scene scene = make_scene(config, 0);
  for (int antennas : config.antennas_sweep) {
    const SystemConfig cfg = with_antennas(config, antennas);
    const PowerSplit split = config_split(config, antennas, config.c_u);
    const MetricInputs in{scene.beta,  antennas,          config.c_u,
                          config.c_d,  config.tau(),      config.sigma_sq(),
                          split,       scene.color};
    const AggregateReport mc =
        run_trials(cfg, Experiment::kMseValidation, config.trials);
    double tp_an = 0.0, sp_an = 0.0, crlb = 0.0, tp_mc = 0.0, sp_mc = 0.0;
    for (int m = 0; m < K; ++m) {
      tp_an += mse_tp(in, 0, m);
      sp_an += mse_sp(in, 0, m);
      crlb += crlb_sp(in, 0, m);
      tp_mc += mc.mean("mse_tp_emp_" + std::to_string(m));
      sp_mc += mc.mean("mse_sp_emp_" + std::to_string(m));
    }
    csv.row({antennas, sp_an / K, sp_mc / K, tp_an / K, tp_mc / K, crlb / K});
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_dl_ber_vs_radius(const SystemConfig& config,
                                   CsvWriter& csv) {
  csv.row({"radius_km", "ber_dl_tp_prob", "ber_dl_sp_prob"});
  for (double radius : radius_axis(config)) {
    SystemConfig cfg = config;
    cfg.circle_radius = radius;
    const AggregateReport mc =
        run_trials(cfg, Experiment::kDlLink, config.trials);
    csv.row({radius, ber_of(mc, "dl_err_tp", "dl_bits_tp"),
             ber_of(mc, "dl_err_sp", "dl_bits_sp")});
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_ber_vs_users(const SystemConfig& config, CsvWriter& csv,
                               bool uplink) {
  csv.comment(omitted_baselines_note);
  if (uplink) {
    csv.row({"K", "M", "ber_ul_tp_prob", "ber_ul_sp_prob"});
  } else {
    csv.row({"K", "M", "ber_dl_tp_prob", "ber_dl_sp_prob"});
  }
  for (int users : users_axis(config)) {
    SystemConfig cfg = config;
    cfg.users_per_cell = users;
    cfg.antennas_sweep = {50 * users};  // fixed antennas-per-user protocol
    const AggregateReport mc = run_trials(
        cfg, uplink ? Experiment::kUlLink : Experiment::kDlLink,
        config.trials);
    if (uplink) {
      csv.row({users, 50 * users, ber_of(mc, "ul_err_tp", "ul_bits_tp"),
               ber_of(mc, "ul_err_sp", "ul_bits_sp")});
    } else {
      csv.row({users, 50 * users, ber_of(mc, "dl_err_tp", "dl_bits_tp"),
               ber_of(mc, "dl_err_sp", "dl_bits_sp")});
    }
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_hybrid_rate_vs_radius(const SystemConfig& config,
                                        CsvWriter& csv, bool uplink) {
  csv.row({"radius_km", "scheme",
           uplink ? "ul_sum_rate_bpshz" : "dl_sum_rate_bpshz"});
  for (double radius : radius_axis(config)) {
    SystemConfig cfg = config;
    cfg.circle_radius = radius;
    for (HybridAssignment assignment : kAssignments) {
      cfg.hybrid_assignment = assignment;
      const Scene scene = make_scene(cfg, 0);
      const HybridContext ctx =
          make_hybrid_context(cfg, scene, cfg.antennas());
      csv.row({radius, assignment_label(assignment),
               uplink ? ctx.rate_ul_sum : ctx.rate_dl_sum});
    }
  }
  return {csv.rows(), 0.0};
}

RunSummary figure_hybrid_ber_vs_radius(const SystemConfig& config,
                                       CsvWriter& csv, bool uplink) {
  csv.row({"radius_km", "scheme", uplink ? "ber_ul_prob" : "ber_dl_prob"});
  for (double radius : radius_axis(config)) {
    SystemConfig cfg = config;
    cfg.circle_radius = radius;
    for (HybridAssignment assignment : kAssignments) {
      cfg.hybrid_assignment = assignment;
      const AggregateReport mc =
          run_trials(cfg, Experiment::kHybridLink, config.trials);
      csv.row({radius, assignment_label(assignment),
               uplink ? ber_of(mc, "ul_err", "ul_bits")
                      : ber_of(mc, "dl_err", "dl_bits")});
    }
  }
  return {csv.rows(), 0.0};
}

}  // namespace

const std::vector<int>& figure_ids() {
  static const std::vector<int> ids = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13,
                                       14};
  return ids;
}

RunSummary cmd_analytic(const SystemConfig& config, std::ostream& os) {
  const auto start = Clock::now();
  config.validate();
  CsvWriter csv(os);
  csv.row({"M", "cell", "user", "mse_tp", "mse_sp", "crlb_sp", "dl_sinr_tp_db",
           "dl_sinr_sp_exact_db", "dl_sinr_sp_asymptotic_db",
           "rate_dl_tp_bpshz", "rate_dl_sp_bpshz", "rho_d_sq", "rho_p_sq"});
  const Scene scene = make_scene(config, 0);
  for (int antennas : config.antennas_sweep) {
    const PowerSplit split = config_split(config, antennas, config.c_u);
    const MetricInputs in{scene.beta,  antennas,          config.c_u,
                          config.c_d,  config.tau(),      config.sigma_sq(),
                          split,       scene.color};
    for (int l = 0; l < config.cells(); ++l) {
      for (int k = 0; k < config.users_per_cell; ++k) {
        const double sinr_tp = dl_sinr_tp(in, l, k);
        const double sinr_sp = dl_sinr_sp_exact(in, l, k);
        csv.row({antennas, l, k, mse_tp(in, l, k), mse_sp(in, l, k),
                 crlb_sp(in, l, k), to_db(sinr_tp), to_db(sinr_sp),
                 to_db(dl_sinr_sp_asymptotic(in, l, k)),
                 rate_dl(sinr_tp, config.c_u, config.c_d),
                 rate_dl(sinr_sp, config.c_u, config.c_d), split.rho_d_sq,
                 split.rho_p_sq});
      }
    }
  }
  return {csv.rows(), seconds_since(start)};
}

RunSummary cmd_figure(int id, const SystemConfig& config, std::ostream& os) {
  const auto start = Clock::now();
  config.validate();
  CsvWriter csv(os);
  RunSummary summary;
  switch (id) {
    case 3:
      summary = figure_cdf_sinr(config, csv);
      break;
    case 4:
      summary = figure_dl_rate_vs_m(config, csv);
      break;
    case 5:
      summary = figure_dl_ber_vs_m(config, csv, true);
      break;
    case 6:
      summary = figure_dl_ber_vs_m(config, csv, false);
      break;
    case 7:
      summary = figure_mse_vs_m(config, csv);
      break;
    case 8:
      summary = figure_dl_ber_vs_radius(config, csv);
      break;
    case 9:
      summary = figure_ber_vs_users(config, csv, false);
      break;
    case 10:
      summary = figure_ber_vs_users(config, csv, true);
      break;
    case 11:
      summary = figure_hybrid_rate_vs_radius(config, csv, true);
      break;
    case 12:
      summary = figure_hybrid_rate_vs_radius(config, csv, false);
      break;
    case 13:
      summary = figure_hybrid_ber_vs_radius(config, csv, true);
      break;
    case 14:
      summary = figure_hybrid_ber_vs_radius(config, csv, false);
      break;
    default: {
      std::string valid;
      for (int v : figure_ids()) {
        if (!valid.empty()) valid += ", ";
        valid += std::to_string(v);
      }
      throw ConfigError("figure: unknown id " + std::to_string(id) +
                        "; valid ids: " + valid);
    }
  }
  summary.wall_seconds = seconds_since(start);
  return summary;
}

RunSummary cmd_table1(const SystemConfig& config, std::ostream& os) {
  const auto start = Clock::now();
  config.validate();
  CsvWriter csv(os);
  csv.row({"scheme", "ul_sum_rate_bpshz", "dl_sum_rate_bpshz",
           "total_rate_bpshz", "ber_ul_prob", "ber_dl_prob"});
  for (HybridAssignment assignment : kAssignments) {
    SystemConfig cfg = config;
    cfg.hybrid_assignment = assignment;
    const AggregateReport mc =
        run_trials(cfg, Experiment::kHybridLink, config.trials);
    const double ul = mc.mean("rate_ul_sum");
    const double dl = mc.mean("rate_dl_sum");
    csv.row({assignment_label(assignment), ul, dl, ul + dl,
             ber_of(mc, "ul_err", "ul_bits"),
             ber_of(mc, "dl_err", "dl_bits")});
  }
  return {csv.rows(), seconds_since(start)};
}

RunSummary cmd_partition(const SystemConfig& config, std::ostream& os) {
  const auto start = Clock::now();
  config.validate();
  CsvWriter csv(os);
  const Scene scene = make_scene(config, 0);
  const HybridContext ctx =
      make_hybrid_context(config, scene, config.antennas());
  csv.row({"record", "step", "cell", "user", "scheme", "cost"});
  for (const UserRef& u : ctx.partition.u_tp) {
    csv.row({"assignment", "", u.cell, u.user, "tp", ""});
  }
  for (const UserRef& u : ctx.partition.u_sp) {
    csv.row({"assignment", "", u.cell, u.user, "sp", ""});
  }
  for (const auto& [step, cost] : ctx.partition.cost_trace) {
    csv.row({"trace", step, "", "", "", cost});
  }
  return {csv.rows(), seconds_since(start)};
}

SystemConfig analytic_defaults() { return SystemConfig{}; }

SystemConfig table1_defaults() {
  SystemConfig cfg;
  cfg.tiers = 2;
  cfg.c_u = 40;
  cfg.c_d = 40;
  cfg.scenario = Scenario::kUniform;
  cfg.antennas_sweep = {300};
  cfg.trials = 2500;
  cfg.draws_per_placement = 50;
  return cfg;
}

SystemConfig partition_defaults() {
  SystemConfig cfg;
  cfg.tiers = 2;
  cfg.c_u = 40;
  cfg.c_d = 40;
  cfg.scenario = Scenario::kCircle;
  cfg.circle_radius = 0.8;
  cfg.antennas_sweep = {300};
  return cfg;
}

SystemConfig figure_defaults(int id) {
  SystemConfig cfg;
  switch (id) {
    case 3:
      cfg.scenario = Scenario::kUniform;
      cfg.antennas_sweep = {300, 1000, 10000};
      cfg.trials = 1000;
      break;
    case 4:
      cfg.antennas_sweep = {32, 64, 128, 256, 512, 1024};
      cfg.trials = 300;
      cfg.constellation = Constellation::kGaussian;
      break;
    case 5:
      cfg.scenario = Scenario::kUniform;
      cfg.antennas_sweep = {64, 128, 256, 512};
      cfg.trials = 300;
      break;
    case 6:
      cfg.antennas_sweep = {100, 300, 1000};
      cfg.trials = 400;
      break;
    case 7:
      cfg.antennas_sweep = {32, 128, 512, 2048, 8192};
      cfg.trials = 100;
      break;
    case 8:
      cfg.antennas_sweep = {300};
      cfg.radius_sweep = {0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
      cfg.trials = 400;
      break;
    case 9:
    case 10:
      cfg.scenario = Scenario::kUniform;
      cfg.c_u = 70;
      cfg.users_sweep = {2, 4, 6, 8, 10};
      cfg.trials = 200;
      break;
    case 11:
    case 12:
      cfg.tiers = 2;
      cfg.c_u = 40;
      cfg.c_d = 40;
      cfg.antennas_sweep = {300};
      cfg.radius_sweep = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
      break;
    case 13:
    case 14:
      cfg.tiers = 2;
      cfg.c_u = 40;
      cfg.c_d = 40;
      cfg.antennas_sweep = {300};
      cfg.radius_sweep = {0.1, 0.3, 0.5, 0.7, 0.9};
      cfg.trials = 200;
      break;
    default: {
      std::string valid;
      for (int v : figure_ids()) {
        if (!valid.empty()) valid += ", ";
        valid += std::to_string(v);
      }
      throw ConfigError("figure: unknown id " + std::to_string(id) +
                        "; valid ids: " + valid);
    }
  }
  return cfg;
}

}  // namespace pcsim
