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

#include "pcsim/link.hpp"

#include <cmath>
#include <stdexcept>

namespace pcsim {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

}  // namespace

arma::cx_double qam4_mod(bool b0, bool b1) {
  return {b0 ? -kInvSqrt2 : kInvSqrt2, b1 ? -kInvSqrt2 : kInvSqrt2};
}

std::pair<bool, bool> qam4_demod(arma::cx_double symbol) {
  return {symbol.real() < 0.0, symbol.imag() < 0.0};
}

int qam4_bit_errors(arma::cx_double sent, arma::cx_double received,
                    double gain) {
  const auto [s0, s1] = qam4_demod(sent);
  const auto [r0, r1] = qam4_demod(received / gain);
  return static_cast<int>(s0 != r0) + static_cast<int>(s1 != r1);
}

arma::cx_mat random_symbols(int rows, int cols, SymbolAlphabet alphabet,
                            RngStream& rng) {
  arma::cx_mat x(rows, cols);
  // Row-major fill so each user's symbols form one contiguous draw sequence.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      x(r, c) = alphabet == SymbolAlphabet::kQam4
                    ? qam4_mod(rng.bit(), rng.bit())
                    : rng.cnormal(1.0);
    }
  }
  return x;
}

arma::cx_mat downlink_gains(const ChannelRealization& chan,
                            const ChannelEstimateSet& est) {
  const int L = chan.cells;
  const int K = chan.users_per_cell;
  const int users = L * K;
  if (static_cast<int>(est.serving.size()) != L) {
    throw std::invalid_argument("downlink_gains: missing estimates");
  }
  arma::cx_mat g(users, users);
  for (int l = 0; l < L; ++l) {
    // Rows: receiving users (j, m); columns: site l's precoded users.
    g.cols(l * K, (l + 1) * K - 1) =
        arma::strans(chan.per_site[l]) * arma::conj(est.serving[l]) /
        static_cast<double>(chan.antennas);
  }
  return g;
}

arma::cx_mat downlink_noise(int users, int symbols, double sigma_sq,
                            int antennas, RngStream& rng) {
  arma::cx_mat eta(users, symbols);
  const double var = static_cast<double>(antennas) * sigma_sq;
  for (int u = 0; u < users; ++u) {
    for (int t = 0; t < symbols; ++t) {
      eta(u, t) = sigma_sq > 0.0 ? rng.cnormal(var) : arma::cx_double{};
    }
  }
  return eta;
}

arma::cx_mat mf_precode_downlink(const arma::cx_mat& gains,
                                 const arma::cx_mat& data,
                                 const arma::cx_mat& eta, int antennas) {
  if (gains.n_cols != data.n_rows || arma::size(eta) != arma::size(data)) {
    throw std::invalid_argument("mf_precode_downlink: dimension mismatch");
  }
  return gains * data + eta / static_cast<double>(antennas);
}

arma::cx_mat mf_precode_downlink(const ChannelRealization& chan,
                                 const ChannelEstimateSet& est,
                                 const arma::cx_mat& data, double sigma_sq,
                                 RngStream& rng) {
  const arma::cx_mat gains = downlink_gains(chan, est);
  const arma::cx_mat eta =
      downlink_noise(static_cast<int>(data.n_rows),
                     static_cast<int>(data.n_cols), sigma_sq, chan.antennas,
                     rng);
  return mf_precode_downlink(gains, data, eta, chan.antennas);
}

InterferenceDecomposition decompose_dl_interference(
    const ChannelRealization& chan, const ChannelEstimateSet& est,
    const GainTensor& beta, const arma::cx_vec& data, arma::cx_double eta,
    int j, int m) {
  const int L = chan.cells;
  const int K = chan.users_per_cell;
  const double M = static_cast<double>(chan.antennas);
  if (static_cast<int>(data.n_elem) != L * K) {
    throw std::invalid_argument("decompose_dl_interference: data size");
  }

  InterferenceDecomposition out;
  const arma::cx_vec h_own = chan.vec(j, j, m);
  const double b = beta(j, j, m);
  const double own_energy = std::real(arma::cdot(h_own, h_own));
  out.signal = b * data(j * K + m);
  out.i0 = (own_energy - M * b) * data(j * K + m) / M;
  out.i3 = eta / M;

  for (int l = 0; l < L; ++l) {
    const arma::cx_vec h_to_me = chan.vec(l, j, m);
    for (int k = 0; k < K; ++k) {
      const arma::cx_double d = data(l * K + k);
      if (l == j && k == m) continue;
      // h^T conj(g) = conj(g^H h)
      const arma::cx_double through_true =
          std::conj(arma::cdot(chan.vec(l, l, k), h_to_me)) * d / M;
      (l == j ? out.i1 : out.i2) += through_true;
    }
    for (int k = 0; k < K; ++k) {
      const arma::cx_vec delta =
          chan.vec(l, l, k) - est.serving[l].col(k);
      out.i4 -= std::conj(arma::cdot(delta, h_to_me)) * data(l * K + k) / M;
    }
  }
  return out;
}

arma::cx_mat matched_filter_uplink(const ChannelEstimateSet& est,
                                   const std::vector<UplinkObservation>& obs,
                                   const FramePlan& plan,
                                   const PilotSet& pilots,
                                   const GainTensor& beta) {
  const int L = plan.cells;
  const int K = plan.users_per_cell;
  const double M =
      static_cast<double>(est.serving.empty() ? 0 : est.serving[0].n_rows);
  const double rho_d = plan.split.rho_d();
  const double rho_p = plan.split.rho_p();

  arma::cx_mat soft(L * K, plan.c_u, arma::fill::zeros);
  for (int j = 0; j < L; ++j) {
    // Known superimposed-pilot component of this cell's own users.
    arma::cx_mat cleaned;
    bool have_cleaned = false;
    for (int k = 0; k < K; ++k) {
      const UserFrameRole& role = plan.role(j, k);
      const int start = plan.data_start(j, k);
      const arma::cx_vec w = est.serving[j].col(k);
      arma::cx_rowvec filtered;
      switch (role.scheme) {
        case PilotScheme::kPureTp:
        case PilotScheme::kHybridTp: {
          if (!(role.data_power > 0.0)) continue;
          filtered = w.t() * obs[j].y.cols(start, plan.c_u - 1) /
                     (M * beta(j, j, k) * std::sqrt(role.data_power));
          break;
        }
        case PilotScheme::kPureSp:
        case PilotScheme::kHybridSp: {
          if (!(rho_d > 0.0)) {
            throw std::invalid_argument(
                "matched_filter_uplink: no data power on SP users");
          }
          if (!have_cleaned) {
            cleaned = obs[j].y.cols(start, plan.c_u - 1);
            for (int kk = 0; kk < K; ++kk) {
              const UserFrameRole& rr = plan.role(j, kk);
              if (rr.scheme == PilotScheme::kPureSp ||
                  rr.scheme == PilotScheme::kHybridSp) {
                cleaned -= rho_p * est.serving[j].col(kk) *
                           pilots.sp.p.col(rr.pilot_index).st();
              }
            }
            have_cleaned = true;
          }
          filtered = w.t() * cleaned / (M * beta(j, j, k) * rho_d);
          break;
        }
      }
      soft.row(plan.user_index(j, k)).cols(start, plan.c_u - 1) = filtered;
    }
  }
  return soft;
}

}  // namespace pcsim
