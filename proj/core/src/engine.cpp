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

#include "pcsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pcsim/estimators.hpp"
#include "pcsim/link.hpp"
#include "pcsim/parallel.hpp"

namespace pcsim {

namespace {

SymbolAlphabet alphabet_of(const SystemConfig& config) {
  return config.constellation == Constellation::kQam4
             ? SymbolAlphabet::kQam4
             : SymbolAlphabet::kGaussian;
}

PowerSplit scheme_split(const SystemConfig& config, int antennas,
                        int formula_c_u) {
  if (config.rho_mode == RhoMode::kFixed) {
    return fixed_power_split(config.rho_d_sq);
  }
  return optimal_power_split(antennas, config.cells(), config.users_per_cell,
                             formula_c_u);
}

MetricInputs make_inputs(const GainTensor& beta, const SystemConfig& config,
                         int antennas, PowerSplit split,
                         const std::vector<int>& color) {
  return MetricInputs{beta,   antennas,          config.c_u,
                      config.c_d, config.tau(),  config.sigma_sq(),
                      split,  color};
}

struct SchemeContext {
  FramePlan plan;
  PilotSet pilots;
};

SchemeContext make_pure_scheme(const SystemConfig& config, const Scene& scene,
                               int antennas, PilotScheme scheme) {
  const PowerSplit split = scheme == PilotScheme::kPureSp
                               ? scheme_split(config, antennas, config.c_u)
                               : PowerSplit{0.5, 0.5};
  SchemeContext ctx;
  ctx.plan = make_frame_plan(
      config.cells(), config.users_per_cell, config.c_u, config.c_d,
      config.reuse_r, scene.color, split, 1.0,
      std::vector<PilotScheme>(
          static_cast<std::size_t>(config.cells()) * config.users_per_cell,
          scheme));
  ctx.pilots = make_pilots(ctx.plan);
  return ctx;
}

// One scheme's uplink pass: draw data, transmit, receive, estimate.
struct UplinkPass {
  arma::cx_mat data;
  std::vector<UplinkObservation> obs;
  ChannelEstimateSet est;
};

UplinkPass run_uplink(const SystemConfig& config, const SchemeContext& ctx,
                      const ChannelRealization& chan, std::uint64_t trial,
                      std::uint64_t salt) {
  UplinkPass pass;
  RngStream data_rng(config.seed, trial, StreamPurpose::kUplinkData, salt);
  pass.data = random_symbols(ctx.plan.user_count(), config.c_u,
                             alphabet_of(config), data_rng);
  const arma::cx_mat frames = assemble_frames(ctx.plan, ctx.pilots, pass.data);
  RngStream noise_rng(config.seed, trial, StreamPurpose::kUplinkNoise, salt);
  pass.obs = receive_uplink(chan, frames, config.sigma_sq(), noise_rng);
  pass.est = estimate_serving(pass.obs, ctx.plan, ctx.pilots);
  return pass;
}

// Bit errors of the downlink samples for users of cells [0, cells_measured),
// slicing after division by the known effective serving gain.
std::pair<long, long> downlink_errors(const arma::cx_mat& data,
                                      const arma::cx_mat& dhat,
                                      const GainTensor& beta,
                                      int cells_measured) {
  long errors = 0, bits = 0;
  const int K = beta.users_per_cell();
  for (int j = 0; j < cells_measured; ++j) {
    for (int m = 0; m < K; ++m) {
      const int u = j * K + m;
      const double gain = beta(j, j, m);
      for (arma::uword t = 0; t < data.n_cols; ++t) {
        errors += qam4_bit_errors(data(u, t), dhat(u, t), gain);
        bits += 2;
      }
    }
  }
  return {errors, bits};
}

std::pair<long, long> uplink_errors(const arma::cx_mat& data,
                                    const arma::cx_mat& soft,
                                    const FramePlan& plan,
                                    int cells_measured) {
  long errors = 0, bits = 0;
  for (int j = 0; j < cells_measured; ++j) {
    for (int k = 0; k < plan.users_per_cell; ++k) {
      const UserFrameRole& role = plan.role(j, k);
      const bool is_tp = role.scheme == PilotScheme::kPureTp ||
                         role.scheme == PilotScheme::kHybridTp;
      if (is_tp && !(role.data_power > 0.0)) continue;
      const int u = plan.user_index(j, k);
      for (int t = plan.data_start(j, k); t < plan.c_u; ++t) {
        errors += qam4_bit_errors(data(u, t), soft(u, t), 1.0);
        bits += 2;
      }
    }
  }
  return {errors, bits};
}

long placement_index(const SystemConfig& config, long trial) {
  return config.scenario == Scenario::kUniform
             ? trial / config.draws_per_placement
             : 0;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

// ---------------------------------------------------------------------------
// Experiment definitions

std::vector<std::string> mse_names(const SystemConfig& config) {
  std::vector<std::string> names;
  for (int k = 0; k < config.users_per_cell; ++k) {
    names.push_back("mse_tp_emp_" + std::to_string(k));
  }
  for (int k = 0; k < config.users_per_cell; ++k) {
    names.push_back("mse_sp_emp_" + std::to_string(k));
  }
  return names;
}

void mse_trial(const SystemConfig& config, long trial,
               std::vector<double>& out) {
  const int M = config.antennas();
  const int K = config.users_per_cell;
  const Scene scene = make_scene(config, placement_index(config, trial));
  RngStream chan_rng(config.seed, trial, StreamPurpose::kChannel);
  const ChannelRealization chan = draw_channels(scene.beta, M, chan_rng);

  const SchemeContext tp =
      make_pure_scheme(config, scene, M, PilotScheme::kPureTp);
  const SchemeContext sp =
      make_pure_scheme(config, scene, M, PilotScheme::kPureSp);
  const UplinkPass tp_pass = run_uplink(config, tp, chan, trial, 0);
  const UplinkPass sp_pass = run_uplink(config, sp, chan, trial, 1);

  for (int k = 0; k < K; ++k) {
    const arma::cx_vec err =
        tp_pass.est.serving[0].col(k) - chan.vec(0, 0, k);
    out[k] = std::real(arma::cdot(err, err)) / M;
  }
  for (int k = 0; k < K; ++k) {
    const arma::cx_vec err =
        sp_pass.est.serving[0].col(k) - chan.vec(0, 0, k);
    out[K + k] = std::real(arma::cdot(err, err)) / M;
  }
}

std::vector<std::string> decomposition_names(const SystemConfig& config) {
  std::vector<std::string> names;
  for (int m = 0; m < config.users_per_cell; ++m) {
    const std::string s = std::to_string(m);
    names.push_back("signal_pow_" + s);
    names.push_back("interference_pow_" + s);
    for (int n = 0; n <= 4; ++n) {
      names.push_back("i" + std::to_string(n) + "_pow_" + s);
    }
  }
  names.push_back("residual_max");
  for (int n = 0; n <= 4; ++n) {
    for (int p = n + 1; p <= 4; ++p) {
      names.push_back("cross_re_" + std::to_string(n) + std::to_string(p));
      names.push_back("cross_im_" + std::to_string(n) + std::to_string(p));
    }
  }
  return names;
}

void decomposition_trial(const SystemConfig& config, long trial,
                         std::vector<double>& out) {
  const int M = config.antennas();
  const int K = config.users_per_cell;
  const Scene scene = make_scene(config, placement_index(config, trial));
  RngStream chan_rng(config.seed, trial, StreamPurpose::kChannel);
  const ChannelRealization chan = draw_channels(scene.beta, M, chan_rng);
  const SchemeContext sp =
      make_pure_scheme(config, scene, M, PilotScheme::kPureSp);
  const UplinkPass pass = run_uplink(config, sp, chan, trial, 1);

  const int users = sp.plan.user_count();
  RngStream dl_data_rng(config.seed, trial, StreamPurpose::kDownlinkData);
  const arma::cx_mat d =
      random_symbols(users, 1, alphabet_of(config), dl_data_rng);
  RngStream dl_noise_rng(config.seed, trial, StreamPurpose::kDownlinkNoise);
  const arma::cx_mat eta =
      downlink_noise(users, 1, config.sigma_sq(), M, dl_noise_rng);
  const arma::cx_mat gains = downlink_gains(chan, pass.est);
  const arma::cx_mat dhat = mf_precode_downlink(gains, d, eta, M);

  std::size_t idx = 0;
  double residual_max = 0.0;
  std::vector<arma::cx_double> user0_terms;
  for (int m = 0; m < K; ++m) {
    const InterferenceDecomposition dec = decompose_dl_interference(
        chan, pass.est, scene.beta, d.col(0), eta(m, 0), 0, m);
    const arma::cx_double interference =
        dec.i0 + dec.i1 + dec.i2 + dec.i3 + dec.i4;
    out[idx++] = std::norm(dec.signal);
    out[idx++] = std::norm(interference);
    out[idx++] = std::norm(dec.i0);
    out[idx++] = std::norm(dec.i1);
    out[idx++] = std::norm(dec.i2);
    out[idx++] = std::norm(dec.i3);
    out[idx++] = std::norm(dec.i4);
    residual_max =
        std::max(residual_max, std::abs(dhat(m, 0) - dec.total()));
    if (m == 0) {
      user0_terms = {dec.i0, dec.i1, dec.i2, dec.i3, dec.i4};
    }
  }
  out[idx++] = residual_max;
  for (int n = 0; n <= 4; ++n) {
    for (int p = n + 1; p <= 4; ++p) {
      const arma::cx_double prod =
          user0_terms[n] * std::conj(user0_terms[p]);
      out[idx++] = prod.real();
      out[idx++] = prod.imag();
    }
  }
}

std::vector<std::string> dl_link_names(const SystemConfig& config) {
  std::vector<std::string> names = {"dl_err_tp", "dl_bits_tp", "dl_err_sp",
                                    "dl_bits_sp"};
  for (int m = 0; m < config.users_per_cell; ++m) {
    names.push_back("dl_intpow_tp_" + std::to_string(m));
  }
  for (int m = 0; m < config.users_per_cell; ++m) {
    names.push_back("dl_intpow_sp_" + std::to_string(m));
  }
  return names;
}

void dl_link_trial(const SystemConfig& config, long trial,
                   std::vector<double>& out) {
  const int M = config.antennas();
  const int K = config.users_per_cell;
  const Scene scene = make_scene(config, placement_index(config, trial));
  RngStream chan_rng(config.seed, trial, StreamPurpose::kChannel);
  const ChannelRealization chan = draw_channels(scene.beta, M, chan_rng);

  const int users = config.cells() * K;
  std::size_t idx_err = 0;
  std::size_t idx_pow = 4;
  for (int which = 0; which < 2; ++which) {
    const PilotScheme scheme =
        which == 0 ? PilotScheme::kPureTp : PilotScheme::kPureSp;
    const SchemeContext ctx = make_pure_scheme(config, scene, M, scheme);
    const UplinkPass pass = run_uplink(config, ctx, chan, trial, which);

    RngStream dl_data_rng(config.seed, trial, StreamPurpose::kDownlinkData,
                          which);
    const arma::cx_mat d =
        random_symbols(users, config.c_d, alphabet_of(config), dl_data_rng);
    RngStream dl_noise_rng(config.seed, trial, StreamPurpose::kDownlinkNoise,
                           which);
    const arma::cx_mat eta =
        downlink_noise(users, config.c_d, config.sigma_sq(), M, dl_noise_rng);
    const arma::cx_mat gains = downlink_gains(chan, pass.est);
    const arma::cx_mat dhat = mf_precode_downlink(gains, d, eta, M);

    if (config.constellation == Constellation::kQam4) {
      const auto [errors, bits] = downlink_errors(d, dhat, scene.beta, 1);
      out[idx_err++] = static_cast<double>(errors);
      out[idx_err++] = static_cast<double>(bits);
    } else {
      out[idx_err++] = 0.0;
      out[idx_err++] = 0.0;
    }
    for (int m = 0; m < K; ++m) {
      const double b = scene.beta(0, 0, m);
      double acc = 0.0;
      for (int t = 0; t < config.c_d; ++t) {
        acc += std::norm(dhat(m, t) - b * d(m, t));
      }
      out[idx_pow++] = acc / config.c_d;
    }
  }
}

std::vector<std::string> ul_link_names(const SystemConfig&) {
  return {"ul_err_tp", "ul_bits_tp", "ul_err_sp", "ul_bits_sp"};
}

void ul_link_trial(const SystemConfig& config, long trial,
                   std::vector<double>& out) {
  const int M = config.antennas();
  const Scene scene = make_scene(config, placement_index(config, trial));
  RngStream chan_rng(config.seed, trial, StreamPurpose::kChannel);
  const ChannelRealization chan = draw_channels(scene.beta, M, chan_rng);

  std::size_t idx = 0;
  for (int which = 0; which < 2; ++which) {
    const PilotScheme scheme =
        which == 0 ? PilotScheme::kPureTp : PilotScheme::kPureSp;
    const SchemeContext ctx = make_pure_scheme(config, scene, M, scheme);
    const UplinkPass pass = run_uplink(config, ctx, chan, trial, which);
    const arma::cx_mat soft = matched_filter_uplink(
        pass.est, pass.obs, ctx.plan, ctx.pilots, scene.beta);
    const auto [errors, bits] = uplink_errors(pass.data, soft, ctx.plan, 1);
    out[idx++] = static_cast<double>(errors);
    out[idx++] = static_cast<double>(bits);
  }
}

std::vector<std::string> hybrid_names(const SystemConfig&) {
  return {"rate_ul_sum", "rate_dl_sum", "n_sp",    "cost_final",
          "ul_err",      "ul_bits",     "dl_err",  "dl_bits"};
}

void hybrid_trial(const SystemConfig& config, long trial,
                  std::vector<double>& out) {
  const int M = config.antennas();
  const Scene scene = make_scene(config, placement_index(config, trial));
  const HybridContext ctx = make_hybrid_context(config, scene, M);

  RngStream chan_rng(config.seed, trial, StreamPurpose::kChannel);
  const ChannelRealization chan = draw_channels(ctx.beta_eff, M, chan_rng);

  RngStream data_rng(config.seed, trial, StreamPurpose::kUplinkData);
  const arma::cx_mat data = random_symbols(
      ctx.plan.user_count(), config.c_u, alphabet_of(config), data_rng);
  const arma::cx_mat frames = assemble_frames(ctx.plan, ctx.pilots, data);
  RngStream noise_rng(config.seed, trial, StreamPurpose::kUplinkNoise);
  const std::vector<UplinkObservation> obs =
      receive_uplink(chan, frames, config.sigma_sq(), noise_rng);
  const ChannelEstimateSet est = estimate_serving(obs, ctx.plan, ctx.pilots);

  out[0] = ctx.rate_ul_sum;
  out[1] = ctx.rate_dl_sum;
  out[2] = static_cast<double>(ctx.partition.u_sp.size());
  out[3] = ctx.partition.final_cost;

  const int inner = measured_cells(config);
  if (config.constellation == Constellation::kQam4) {
    const arma::cx_mat soft =
        matched_filter_uplink(est, obs, ctx.plan, ctx.pilots, ctx.beta_eff);
    const auto [ul_errors, ul_bits] =
        uplink_errors(data, soft, ctx.plan, inner);
    out[4] = static_cast<double>(ul_errors);
    out[5] = static_cast<double>(ul_bits);

    const int users = ctx.plan.user_count();
    RngStream dl_data_rng(config.seed, trial, StreamPurpose::kDownlinkData);
    const arma::cx_mat d = random_symbols(users, config.c_d,
                                          SymbolAlphabet::kQam4, dl_data_rng);
    RngStream dl_noise_rng(config.seed, trial, StreamPurpose::kDownlinkNoise);
    const arma::cx_mat eta = downlink_noise(users, config.c_d,
                                            config.sigma_sq(), M, dl_noise_rng);
    const arma::cx_mat gains = downlink_gains(chan, est);
    const arma::cx_mat dhat = mf_precode_downlink(gains, d, eta, M);
    const auto [dl_errors, dl_bits] =
        downlink_errors(d, dhat, ctx.beta_eff, inner);
    out[6] = static_cast<double>(dl_errors);
    out[7] = static_cast<double>(dl_bits);
  } else {
    out[4] = out[5] = out[6] = out[7] = 0.0;
  }
}

void validate_experiment(const SystemConfig& config, Experiment experiment) {
  config.validate();
  const int users = config.cells() * config.users_per_cell;
  switch (experiment) {
    case Experiment::kMseValidation:
    case Experiment::kDlDecomposition:
    case Experiment::kDlLink:
    case Experiment::kUlLink:
      require(users <= config.c_u,
              "experiment: superimposed pilots need L*K <= c_u for distinct "
              "pilot columns");
      break;
    case Experiment::kHybridLink:
      require(measured_cells(config) * config.users_per_cell <=
                  config.c_u - config.tau(),
              "experiment: hybrid needs inner-cell users <= c_u - tau");
      break;
  }
  if (experiment == Experiment::kUlLink &&
      config.constellation != Constellation::kQam4) {
    throw ConfigError("experiment: uplink bit errors need qam4 symbols");
  }
}

}  // namespace

int AggregateReport::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw std::out_of_range("AggregateReport: no series named " + name);
}

const SeriesStat& AggregateReport::stat(const std::string& name) const {
  return stats[static_cast<std::size_t>(index_of(name))];
}

double AggregateReport::mean(const std::string& name) const {
  return stat(name).mean;
}

AggregateReport reduce_trials(
    std::vector<std::string> names, long trials, std::uint64_t seed,
    const std::function<void(long, std::vector<double>&)>& trial_fn) {
  if (trials < 1) throw std::invalid_argument("reduce_trials: trials >= 1");
  const std::size_t width = names.size();
  std::vector<std::vector<double>> slots(static_cast<std::size_t>(trials));
  parallel_for(trials, [&](long t) {
    slots[static_cast<std::size_t>(t)].assign(width, 0.0);
    trial_fn(t, slots[static_cast<std::size_t>(t)]);
  });

  AggregateReport report;
  report.trials = trials;
  report.seed = seed;
  report.names = std::move(names);
  report.stats.resize(width);
  for (std::size_t i = 0; i < width; ++i) {
    double sum = 0.0;
    double lo = slots[0][i], hi = slots[0][i];
    for (const auto& s : slots) {
      sum += s[i];
      lo = std::min(lo, s[i]);
      hi = std::max(hi, s[i]);
    }
    const double mean = sum / static_cast<double>(trials);
    double sq = 0.0;
    for (const auto& s : slots) {
      const double d = s[i] - mean;
      sq += d * d;
    }
    const double var =
        trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
    report.stats[i] = SeriesStat{
        mean, 1.96 * std::sqrt(var / static_cast<double>(trials)), lo, hi};
  }
  return report;
}

Scene make_scene(const SystemConfig& config, long placement) {
  Scene scene;
  scene.grid = build_hex_grid(config.tiers, config.cell_radius);
  RngStream placement_rng(config.seed, static_cast<std::uint64_t>(placement),
                          StreamPurpose::kPlacement);
  scene.layout = place_users(
      scene.grid, config.users_per_cell,
      config.scenario == Scenario::kUniform ? Scenario::kUniform
                                            : Scenario::kCircle,
      config.min_dist, config.circle_radius, placement_rng);
  const GainTensor raw =
      raw_gain_tensor(scene.grid, scene.layout, config.path_loss_exponent);
  scene.beta = apply_power_control(raw, config.omega);
  scene.color = reuse_coloring(scene.grid, config.reuse_r);
  return scene;
}

int measured_cells(const SystemConfig& config) {
  return std::min(7, config.cells());
}

HybridContext make_hybrid_context(const SystemConfig& config,
                                  const Scene& scene, int antennas) {
  HybridContext ctx;
  ctx.split = scheme_split(config, antennas, config.c_u - config.tau());

  PartitionProblem problem(scene.beta, scene.color, config.c_u, config.tau(),
                           ctx.split, make_cost_weights(config.xi_ul));
  std::vector<UserRef> universe;
  const int inner = measured_cells(config);
  for (int l = 0; l < inner; ++l) {
    for (int k = 0; k < config.users_per_cell; ++k) {
      universe.push_back({l, k});
    }
  }
  problem.set_universe(universe);

  switch (config.hybrid_assignment) {
    case HybridAssignment::kGreedy:
      ctx.partition = problem.greedy();
      break;
    case HybridAssignment::kAllTp:
    case HybridAssignment::kAllSp: {
      std::vector<std::uint8_t> mask(
          static_cast<std::size_t>(config.cells()) * config.users_per_cell,
          0);
      if (config.hybrid_assignment == HybridAssignment::kAllSp) {
        for (const UserRef& u : universe) {
          mask[static_cast<std::size_t>(u.cell) * config.users_per_cell +
               u.user] = 1;
        }
      }
      PartitionResult result;
      result.sp_mask = mask;
      result.cost_trace = {{0, problem.total_cost(mask)}};
      result.final_cost = result.cost_trace.back().second;
      for (int l = 0; l < config.cells(); ++l) {
        for (int k = 0; k < config.users_per_cell; ++k) {
          (mask[static_cast<std::size_t>(l) * config.users_per_cell + k] != 0
               ? result.u_sp
               : result.u_tp)
              .push_back({l, k});
        }
      }
      ctx.partition = std::move(result);
      break;
    }
  }

  ctx.beta_eff = scene.beta;
  for (const UserRef& u : ctx.partition.u_sp) {
    scale_user_gain(ctx.beta_eff, u.cell, u.user,
                    config.omega_sp / config.omega);
  }

  std::vector<PilotScheme> schemes(
      static_cast<std::size_t>(config.cells()) * config.users_per_cell,
      PilotScheme::kHybridTp);
  for (const UserRef& u : ctx.partition.u_sp) {
    schemes[static_cast<std::size_t>(u.cell) * config.users_per_cell +
            u.user] = PilotScheme::kHybridSp;
  }
  ctx.plan = make_frame_plan(config.cells(), config.users_per_cell,
                             config.c_u, config.c_d, config.reuse_r,
                             scene.color, ctx.split, config.lambda_tp,
                             schemes);
  ctx.pilots = make_pilots(ctx.plan);

  const MetricInputs inputs =
      make_inputs(ctx.beta_eff, config, antennas, ctx.split, scene.color);
  const int inner_cells = measured_cells(config);
  for (int j = 0; j < inner_cells; ++j) {
    for (int m = 0; m < config.users_per_cell; ++m) {
      const LinkSinr sinr = hybrid_sinrs(inputs, ctx.partition, j, m);
      ctx.rate_ul_sum +=
          rate_ul(sinr.ul, config.c_u, config.c_d, config.tau());
      ctx.rate_dl_sum += rate_dl(sinr.dl, config.c_u, config.c_d);
    }
  }
  return ctx;
}

std::vector<std::string> trial_metric_names(const SystemConfig& config,
                                            Experiment experiment) {
  switch (experiment) {
    case Experiment::kMseValidation:
      return mse_names(config);
    case Experiment::kDlDecomposition:
      return decomposition_names(config);
    case Experiment::kDlLink:
      return dl_link_names(config);
    case Experiment::kUlLink:
      return ul_link_names(config);
    case Experiment::kHybridLink:
      return hybrid_names(config);
  }
  throw std::invalid_argument("trial_metric_names: unknown experiment");
}

std::vector<double> run_single_trial(const SystemConfig& config,
                                     Experiment experiment, long trial) {
  validate_experiment(config, experiment);
  std::vector<double> out(trial_metric_names(config, experiment).size(), 0.0);
  switch (experiment) {
    case Experiment::kMseValidation:
      mse_trial(config, trial, out);
      break;
    case Experiment::kDlDecomposition:
      decomposition_trial(config, trial, out);
      break;
    case Experiment::kDlLink:
      dl_link_trial(config, trial, out);
      break;
    case Experiment::kUlLink:
      ul_link_trial(config, trial, out);
      break;
    case Experiment::kHybridLink:
      hybrid_trial(config, trial, out);
      break;
  }
  return out;
}

AggregateReport run_trials(const SystemConfig& config, Experiment experiment,
                           long trials) {
  validate_experiment(config, experiment);
  auto fn = [&config, experiment](long t, std::vector<double>& out) {
    switch (experiment) {
      case Experiment::kMseValidation:
        mse_trial(config, t, out);
        break;
      case Experiment::kDlDecomposition:
        decomposition_trial(config, t, out);
        break;
      case Experiment::kDlLink:
        dl_link_trial(config, t, out);
        break;
      case Experiment::kUlLink:
        ul_link_trial(config, t, out);
        break;
      case Experiment::kHybridLink:
        hybrid_trial(config, t, out);
        break;
    }
  };
  return reduce_trials(trial_metric_names(config, experiment), trials,
                       config.seed, fn);
}

}  // namespace pcsim
