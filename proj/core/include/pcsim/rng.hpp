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

#include <complex>
#include <cstdint>
#include <random>

namespace pcsim {

// Role of a substream within one trial. Keeping channel, noise and data
// draws on separate substreams means adding draws to one consumer never
// shifts the values seen by another.
enum class StreamPurpose : std::uint64_t {
  kPlacement = 1,
  kChannel = 2,
  kUplinkNoise = 3,
  kUplinkData = 4,
  kDownlinkData = 5,
  kDownlinkNoise = 6,
  kGeneric = 7,
};

// Mixes (master seed, trial, purpose, salt) into a 64-bit substream seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial,
                          StreamPurpose purpose, std::uint64_t salt = 0);

// Seeded random stream. Substreams are derived from (master seed, trial
// index, purpose), so per-trial draws are independent of execution order
// and thread schedule. Gaussians use Box-Muller on 53-bit uniforms rather
// than std::normal_distribution, whose output is implementation defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}
  RngStream(std::uint64_t master_seed, std::uint64_t trial,
            StreamPurpose purpose = StreamPurpose::kGeneric,
            std::uint64_t salt = 0)
      : gen_(derive_seed(master_seed, trial, purpose, salt)) {}

  std::uint64_t bits() { return gen_(); }

  // Single random bit, buffered from bits().
  bool bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = bits();
      bits_left_ = 64;
    }
    const bool b = (bit_buffer_ & 1u) != 0;
    bit_buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  // Standard real Gaussian. Consumes two uniforms per call.
  double normal();

  // Circularly symmetric complex Gaussian CN(0, variance).
  std::complex<double> cnormal(double variance);

 private:
  std::mt19937_64 gen_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace pcsim
