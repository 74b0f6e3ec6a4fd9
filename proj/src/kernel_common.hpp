// Copyright 2026 The addcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>

#include "addcodes/fpmat.hpp"

namespace addcodes::kernels::detail {

/// splitmix64 finalizer; the stream for (seed, trial) is the sequence
/// mix(key + i * golden) for i = 1, 2, ... with key = mix(seed ^ mix(trial)).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class TrialStream {
  public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) : state_(mix64(seed ^ mix64(trial + 0x632BE59BD9B4E019ULL))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform residue in [0, p) by multiply-shift on the high 32 bits.
    Residue residue(std::uint32_t p) { return static_cast<Residue>(((next() >> 32) * p) >> 32); }

  private:
    std::uint64_t state_;
};

/// Fills `out` (row-major k x width) with the entries of trial `trial`.
inline void fill_trial(std::uint32_t p, std::uint64_t seed, std::uint64_t trial, std::span<Residue> out) {
    TrialStream stream(seed, trial);
    for (auto &v : out) v = stream.residue(p);
}

}  // namespace addcodes::kernels::detail
