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

#include <cstddef>
#include <optional>
#include <span>

#include "addcodes/code.hpp"
#include "addcodes/duality.hpp"

namespace addcodes {

#ifdef NDEBUG
inline constexpr bool kCrossCheckByDefault = false;
#else
inline constexpr bool kCrossCheckByDefault = true;
#endif

/// C^M: all x with sum_i x_i^T K c_i = 0 for every codeword c.
AdditiveCode dual(const AdditiveCode &c, const Duality &d);

/// Gram exponent matrix G (I (x) K) G^T of the canonical generator: entry
/// (i, j) is the character exponent of row i evaluated at row j.
FpMatrix gram(const AdditiveCode &c, const Duality &d);
/// Same, for an arbitrary list of expanded rows (no canonicalization).
FpMatrix gram_of_rows(const FpMatrix &rows, const Duality &d);
FpMatrix gram_of_rows(std::span<const GFVector> rows, const Duality &d);

struct AcdVerdict {
    bool acd = true;
    std::size_t gram_rank = 0;
    /// dim(C intersect C^M); filled when the oracle ran.
    std::optional<std::size_t> intersection_dim;
};

/// ACD iff the Gram exponent matrix of the canonical generator is invertible.
/// With `cross_check` the verdict is compared against the intersection oracle
/// and a disagreement throws std::logic_error.
AcdVerdict is_acd(const AdditiveCode &c, const Duality &d, bool cross_check = kCrossCheckByDefault);

/// dim(C intersect C^M), computed from the subspaces directly.
std::size_t intersection_dimension(const AdditiveCode &c, const Duality &d);

bool is_self_orthogonal(const AdditiveCode &c, const Duality &d);
bool is_self_dual(const AdditiveCode &c, const Duality &d);

/// True iff every element is orthogonal to itself (x^T K x = 0 for all x).
bool all_self_orthogonal_elements(const Duality &d);

/// Whether the one-generator code {0, x, 2x, ...} of length 1 is ACD.
bool acd_length1(const GFElement &x, const Duality &d);

}  // namespace addcodes
