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

// Hot loops of the search engine. Each kernel has two implementations:
//
//   *_reference  plain serial code built on FpMatrix; slow, kept as the
//                oracle the parallel kernels are tested against.
//   *_parallel   packed-word, OpenMP-parallel kernels used in production.
//
// Both walk candidates in the same global order and merge with the same
// (max distance, min index) rule, so their outcomes are identical for any
// thread count.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "addcodes/fpmat.hpp"

namespace addcodes::kernels {

/// Codes handled by the packed kernels have at most this many F_p coordinates.
inline constexpr std::size_t kMaxPackedWidth = 64;

/// Search space description: k-dimensional F_p-subspaces of F_{p^e}^n under
/// the duality matrix `duality` (e x e).
struct Problem {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t n = 1;
    std::uint32_t k = 1;
    FpMatrix duality;

    std::uint32_t width() const { return e * n; }
};

struct Outcome {
    /// Best minimum distance among ACD candidates; empty when none was ACD.
    std::optional<int> best;
    /// Global index (subspace rank in enumeration order, or trial number) of
    /// the first candidate reaching `best`.
    std::uint64_t best_index = 0;
    /// Generator rows of that candidate, k x (e*n).
    FpMatrix witness;
    std::uint64_t examined = 0;
    std::uint64_t acd_count = 0;

    friend bool operator==(const Outcome &, const Outcome &) = default;
};

/// Minimum number of nonzero length-e blocks over all nonzero F_p-combinations
/// of the rows of `gen`. Rows must be independent. Returns 0 for k = 0.
int min_weight_reference(const FpMatrix &gen, std::uint32_t e);

/// Same quantity. When `prune_below` > 0 the kernel may stop as soon as it
/// sees a weight below it, returning that (non-minimal) weight.
int min_weight_parallel(const FpMatrix &gen, std::uint32_t e, int jobs = 0, int prune_below = 0);

/// True iff the Gram exponent matrix rows * (I (x) K) * rows^T is invertible.
bool gram_invertible_reference(const FpMatrix &rows, const FpMatrix &duality);

/// Visits every k-dimensional subspace of F_p^width once, as its RREF
/// generator matrix: pivot sets in lexicographic order, then the free entries
/// (row-major, first slot least significant) as a base-p counter.
void for_each_subspace(std::uint32_t p, std::uint32_t width, std::uint32_t k,
                       const std::function<void(const FpMatrix &)> &visit);

Outcome exhaustive_reference(const Problem &problem);
Outcome exhaustive_parallel(const Problem &problem, int jobs = 0);

/// Deterministic sample for trial `trial`: a k x width matrix with uniform
/// entries, drawn from a counter-based stream keyed by (seed, trial).
FpMatrix sample_trial(std::uint32_t p, std::uint32_t k, std::uint32_t width, std::uint64_t seed, std::uint64_t trial);

Outcome random_reference(const Problem &problem, std::uint64_t trials, std::uint64_t seed);
Outcome random_parallel(const Problem &problem, std::uint64_t trials, std::uint64_t seed, int jobs = 0);

/// Number of OpenMP threads a `jobs` value resolves to (0 = runtime default).
int resolve_jobs(int jobs);

}  // namespace addcodes::kernels
