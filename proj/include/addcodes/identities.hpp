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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "addcodes/code.hpp"
#include "addcodes/duality.hpp"

namespace addcodes {

/// Uniformly random rows (possibly dependent) spanning a code of length n.
AdditiveCode random_code(const FieldSpec &spec, std::size_t n, std::size_t rows, std::mt19937_64 &rng);

struct IdentityCheck {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
};

/// Runs the duality identities on `instances` random (code, duality) pairs
/// each, over F_4 and F_9 with every duality of each field. Conditional
/// identities count only instances where the hypothesis holds.
std::vector<IdentityCheck> verify_identities(std::size_t instances, std::uint64_t seed);

struct OracleAgreement {
    std::size_t codes = 0;
    std::size_t acd = 0;
    std::size_t disagreements = 0;
};

/// Compares the Gram criterion with the intersection oracle on random codes.
OracleAgreement check_gram_oracle(std::size_t codes, std::uint64_t seed);

}  // namespace addcodes
