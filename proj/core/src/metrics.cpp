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

#include "pcsim/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pcsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio_or_inf(double num, double den) {
  return den > 0.0 ? num / den : kInf;
}

}  // namespace

double mse_tp(const MetricInputs& in, int j, int m) {
  if (in.tau < 1) throw std::invalid_argument("mse_tp: tau must be >= 1");
  double interference = 0.0;
  for (int l = 0; l < in.beta.cells(); ++l) {
    if (l != j && in.same_group(l, j)) interference += in.beta(j, l, m);
  }
  return interference + in.sigma_sq / in.tau;
}

double mse_sp(const MetricInputs& in, int j, int /*m*/) {
  if (!(in.split.rho_p_sq > 0.0)) {
    throw std::invalid_argument("mse_sp: rho_p_sq must be > 0");
  }
  double sum = 0.0;
  for (int l = 0; l < in.beta.cells(); ++l) {
    for (int k = 0; k < in.beta.users_per_cell(); ++k) {
      sum += in.beta(j, l, k);
    }
  }
  return in.split.rho_d_sq / (in.c_u * in.split.rho_p_sq) * sum +
         in.sigma_sq / (in.split.rho_p_sq * in.c_u);
}

double mse_sp_optimal_form(const MetricInputs& in, int j, int /*m*/) {
  const int lk = in.beta.cells() * in.beta.users_per_cell();
  double sum = 0.0;
  for (int l = 0; l < in.beta.cells(); ++l) {
    for (int k = 0; k < in.beta.users_per_cell(); ++k) {
      sum += in.beta(j, l, k);
    }
  }
  const PowerSplit opt = optimal_power_split(
      in.antennas, in.beta.cells(), in.beta.users_per_cell(), in.c_u);
  return sum / std::sqrt(static_cast<double>(in.antennas + lk) * in.c_u) +
         in.sigma_sq / (opt.rho_p_sq * in.c_u);
}

double crlb_sp(const MetricInputs& in, int j, int m) {
  const double b = in.beta(j, j, m);
  if (!(b > 0.0)) throw std::invalid_argument("crlb_sp: serving gain <= 0");
  if (in.sigma_sq == 0.0) return 0.0;
  return 1.0 / (in.c_u / in.sigma_sq + 1.0 / b);
}

double crlb_sp_noise_floor(const MetricInputs& in) {
  return in.sigma_sq / in.c_u;
}

double dl_sinr_tp(const MetricInputs& in, int j, int m) {
  const double b = in.beta(j, j, m);
  double den = 0.0;
  for (int l = 0; l < in.beta.cells(); ++l) {
    if (l != j && in.same_group(l, j)) {
      const double g = in.beta(l, j, m);
      den += g * g;
    }
  }
  return ratio_or_inf(b * b, den);
}

double dl_sinr_sp_exact(const MetricInputs& in, int j, int m) {
  if (!(in.split.rho_p_sq > 0.0)) {
    throw std::invalid_argument("dl_sinr_sp_exact: rho_p_sq must be > 0");
  }
  const int L = in.beta.cells();
  const int K = in.beta.users_per_cell();
  const double lead =
      in.split.rho_d_sq * K / (in.c_u * in.split.rho_p_sq);

  double contaminating = 0.0;  // sum of squared own cross gains
  double cross_total = 0.0;    // sum over sites of own gain * total site gain
  double intra = 0.0;          // own gain times each site's serving gains
  for (int l = 0; l < L; ++l) {
    const double g = in.beta(l, j, m);
    contaminating += g * g;
    double site_total = 0.0;
    double site_serving = 0.0;
    for (int n = 0; n < L; ++n) {
      for (int p = 0; p < K; ++p) {
        site_total += in.beta(l, n, p);
      }
    }
    for (int k = 0; k < K; ++k) {
      site_serving += in.beta(l, l, k);
    }
    cross_total += g * site_total;
    intra += g * site_serving;
  }

  const double b = in.beta(j, j, m);
  const double den =
      lead * contaminating +
      (lead * cross_total + intra + in.sigma_sq) / in.antennas;
  return ratio_or_inf(b * b, den);
}

double dl_sinr_sp_asymptotic(const MetricInputs& in, int j, int m) {
  if (!(in.split.rho_p_sq > 0.0)) {
    throw std::invalid_argument("dl_sinr_sp_asymptotic: rho_p_sq must be > 0");
  }
  const int K = in.beta.users_per_cell();
  double contaminating = 0.0;
  for (int l = 0; l < in.beta.cells(); ++l) {
    const double g = in.beta(l, j, m);
    contaminating += g * g;
  }
  const double b = in.beta(j, j, m);
  const double den =
      in.split.rho_d_sq * K / (in.c_u * in.split.rho_p_sq) * contaminating;
  return ratio_or_inf(b * b, den);
}

double dl_sinr_sp_asymptotic_optimal_form(const MetricInputs& in, int j,
                                          int m) {
  const int L = in.beta.cells();
  const int K = in.beta.users_per_cell();
  double contaminating = 0.0;
  for (int l = 0; l < L; ++l) {
    const double g = in.beta(l, j, m);
    contaminating += g * g;
  }
  const double b = in.beta(j, j, m);
  const double scale =
      std::sqrt(static_cast<double>(in.c_u) * (in.antennas + L * K));
  return ratio_or_inf(scale * b * b, K * contaminating);
}

double rate_dl(double sinr, int c_u, int c_d) {
  if (sinr < 0.0) throw std::invalid_argument("rate_dl: sinr must be >= 0");
  return static_cast<double>(c_d) / (c_u + c_d) * std::log2(1.0 + sinr);
}

double rate_ul(double sinr, int c_u, int c_d, int tau) {
  if (sinr < 0.0) throw std::invalid_argument("rate_ul: sinr must be >= 0");
  return static_cast<double>(c_u - tau) / (c_u + c_d) *
         std::log2(1.0 + sinr);
}

LinkSinr hybrid_sinrs(const MetricInputs& in, const PartitionResult& part,
                      int j, int m) {
  const int L = in.beta.cells();
  const int K = in.beta.users_per_cell();
  const double b = in.beta(j, j, m);
  LinkSinr out;

  if (!part.is_sp(j, m, K)) {
    // Training user: uplink interference from co-pilot training users,
    // downlink contamination from every co-pilot cell.
    double den_ul = 0.0;
    double den_dl = 0.0;
    for (int l = 0; l < L; ++l) {
      if (l == j || !in.same_group(l, j)) continue;
      if (!part.is_sp(l, m, K)) {
        const double g = in.beta(j, l, m);
        den_ul += g * g;
      }
      const double g = in.beta(l, j, m);
      den_dl += g * g;
    }
    out.ul = ratio_or_inf(b * b, den_ul);
    out.dl = ratio_or_inf(b * b, den_dl);
    return out;
  }

  if (in.tau >= in.c_u) {
    throw std::invalid_argument("hybrid_sinrs: tau must be < c_u");
  }
  // Superimposed user: both sums run over the superimposed set, including
  // the user's own term, scaled by the window and power split.
  double sum_ul = 0.0;
  double sum_dl = 0.0;
  for (int l = 0; l < L; ++l) {
    const double g_dl = in.beta(l, j, m);
    for (int k = 0; k < K; ++k) {
      if (!part.is_sp(l, k, K)) continue;
      const double g_ul = in.beta(j, l, k);
      sum_ul += g_ul * g_ul;
      sum_dl += g_dl * g_dl;
    }
  }
  const double window =
      static_cast<double>(in.c_u - in.tau) * in.split.rho_p_sq;
  out.ul = ratio_or_inf(b * b, sum_ul / window);
  out.dl = ratio_or_inf(b * b, in.split.rho_d_sq * sum_dl / window);
  return out;
}

}  // namespace pcsim
