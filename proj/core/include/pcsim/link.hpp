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

#pragma once

#include <armadillo>
#include <utility>
#include <vector>

#include "pcsim/channel.hpp"
#include "pcsim/estimators.hpp"
#include "pcsim/pilots.hpp"
#include "pcsim/rng.hpp"

namespace pcsim {

// Gray-mapped 4-QAM with unit average power: symbols (+-1 +- i) / sqrt(2).
arma::cx_double qam4_mod(bool b0, bool b1);
std::pair<bool, bool> qam4_demod(arma::cx_double symbol);

// Bit errors between a transmitted 4-QAM symbol and the nearest-neighbor
// decision on the received sample after dividing by the effective gain.
int qam4_bit_errors(arma::cx_double sent, arma::cx_double received,
                    double gain);

enum class SymbolAlphabet { kQam4, kGaussian };

arma::cx_mat random_symbols(int rows, int cols, SymbolAlphabet alphabet,
                            RngStream& rng);

// Effective downlink gains of the matched-filter precoder:
// g[(j,m),(l,k)] = h(l,j,m)^T conj(hhat(l,l,k)) / M. The received sample of
// user (j,m) is row (j,m) of g * d plus scaled noise.
arma::cx_mat downlink_gains(const ChannelRealization& chan,
                            const ChannelEstimateSet& est);

// Receiver-side noise samples for the downlink, drawn CN(0, M sigma_sq) so
// that the 1/M precoder normalization leaves per-user noise power
// sigma_sq / M.
arma::cx_mat downlink_noise(int users, int symbols, double sigma_sq,
                            int antennas, RngStream& rng);

// dhat = gains * data + eta / M.
arma::cx_mat mf_precode_downlink(const arma::cx_mat& gains,
                                 const arma::cx_mat& data,
                                 const arma::cx_mat& eta, int antennas);

// Convenience form drawing the noise internally.
arma::cx_mat mf_precode_downlink(const ChannelRealization& chan,
                                 const ChannelEstimateSet& est,
                                 const arma::cx_mat& data, double sigma_sq,
                                 RngStream& rng);

// Split of one received downlink sample into the useful signal and the five
// interference terms: self-gain fluctuation, intra-cell leakage, inter-cell
// leakage, receiver noise, and estimation-error leakage. signal + sum of the
// terms reproduces the matched-filter output exactly.
struct InterferenceDecomposition {
  arma::cx_double signal{};
  arma::cx_double i0{};
  arma::cx_double i1{};
  arma::cx_double i2{};
  arma::cx_double i3{};
  arma::cx_double i4{};

  arma::cx_double total() const { return signal + i0 + i1 + i2 + i3 + i4; }
};

InterferenceDecomposition decompose_dl_interference(
    const ChannelRealization& chan, const ChannelEstimateSet& est,
    const GainTensor& beta, const arma::cx_vec& data, arma::cx_double eta,
    int j, int m);

// Matched-filter uplink detection. Returns soft symbol estimates per user
// over the full uplink frame; entries outside a user's data window are zero.
// Superimposed users have their cell's known pilot contribution subtracted
// before filtering, and the output is normalized so the decision statistic
// approaches the unit-power symbol.
arma::cx_mat matched_filter_uplink(const ChannelEstimateSet& est,
                                   const std::vector<UplinkObservation>& obs,
                                   const FramePlan& plan,
                                   const PilotSet& pilots,
                                   const GainTensor& beta);

}  // namespace pcsim
