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
#include <string>
#include <utility>
#include <vector>

#include "addcodes/code.hpp"
#include "addcodes/duality.hpp"
#include "addcodes/gf.hpp"

namespace addcodes {

/// A constructed code together with what the construction promises about it.
/// Tests compare the claims against measurement.
struct ConstructionReport {
    AdditiveCode code;
    /// The generator rows as built, before canonicalization.
    std::vector<GFVector> rows;
    std::optional<int> claimed_distance;
    bool claimed_acd = true;
    std::string source;
    /// False when the construction degenerates to the whole space.
    bool nontrivial = true;
};

/// First (x, y) in canonical element order with a nonzero character exponent.
std::pair<GFElement, GFElement> find_nonorthogonal_pair(const Duality &d);

/// First (a, b) in canonical element order, independent over F_p, with
/// exponent 0. Throws NoSuchPair when none exists (every skew duality of
/// F_{p^2} is an example).
std::pair<GFElement, GFElement> find_orthogonal_independent_pair(const Duality &d);

/// A length-1 ACD code: <x> for the first x with x^T K x != 0, otherwise <x, y>
/// for the first non-orthogonal pair.
ConstructionReport construct_length1(const Duality &d);

/// Rows whose pairwise exponents (i < j) all equal one nonzero value; even
/// row count. Throws TemplateViolation otherwise.
ConstructionReport construct_acd1(const Duality &d, std::span<const GFVector> rows);

/// Rows paired as (0,1), (2,3), ...: nonzero exponent inside each pair, zero
/// between rows of different pairs. Throws TemplateViolation otherwise.
ConstructionReport construct_acd2(const Duality &d, std::span<const GFVector> rows);

/// Block-diagonal [n, p^(2s), floor(n/s)] ACD code for a skew duality.
ConstructionReport construct_bound(const Duality &d, std::size_t n, std::size_t s);

/// [n, p^(2n-2), 2] ACD code: the dual of a two-row ACD code of full weight.
/// Skew dualities of F_{p^2}, and D1 / D2.
ConstructionReport construct_n_2n2(const Duality &d, std::size_t n);

/// Quaternary constructions for D1, D2 (k = 1, 2, 2n-2, 2n-1) and the skew
/// duality A4 (k = 2, 2n-2). Other ranks throw UnsupportedK.
ConstructionReport construct_f4(const Duality &d, std::size_t n, std::size_t k);

}  // namespace addcodes
