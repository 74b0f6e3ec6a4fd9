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
#include <functional>
#include <span>
#include <vector>

#include "addcodes/fpmat.hpp"
#include "addcodes/gf.hpp"

namespace addcodes {

/// Largest code enumerated explicitly by codewords() / for_each_codeword().
inline constexpr std::uint64_t kDefaultCodewordBound = 1ULL << 24;

/// An additive code: an F_p-subspace of F_{p^e}^n. The generator is kept in
/// canonical form (reduced row echelon, zero rows dropped), so two codes are
/// equal exactly when their generators are.
class AdditiveCode {
  public:
    /// Rows over F_{p^e}; they may be dependent. `spec` and `n` fix the
    /// ambient space when `rows` is empty.
    static AdditiveCode from_rows(std::span<const GFVector> rows);
    static AdditiveCode from_rows(std::span<const GFVector> rows, const FieldSpec &spec, std::size_t n);
    /// F_p matrix with e*n columns (coordinate layout as in expand()).
    static AdditiveCode from_matrix(const FpMatrix &m, const FieldSpec &spec);
    static AdditiveCode zero(const FieldSpec &spec, std::size_t n);
    static AdditiveCode full(const FieldSpec &spec, std::size_t n);

    const FieldSpec &spec() const noexcept { return spec_; }
    std::size_t length() const noexcept { return n_; }
    /// Dimension over F_p; the code has p^dimension() codewords.
    std::size_t dimension() const noexcept { return gen_.rows(); }
    const FpMatrix &generator() const noexcept { return gen_; }
    std::vector<GFVector> generator_rows() const;
    BigInt size() const;

    /// Calls `visit` on the expanded form of every codeword, zero first.
    void for_each_codeword(const std::function<void(std::span<const Residue>)> &visit,
                           std::uint64_t bound = kDefaultCodewordBound) const;
    std::vector<GFVector> codewords(std::uint64_t bound = kDefaultCodewordBound) const;

    bool contains(const GFVector &v) const;
    bool contains(std::span<const Residue> expanded) const;

    /// Minimum Hamming weight over F_{p^e}; throws ZeroCode for {0}.
    int min_distance(int jobs = 0) const;

    friend bool operator==(const AdditiveCode &a, const AdditiveCode &b) {
        return a.spec_ == b.spec_ && a.n_ == b.n_ && a.gen_ == b.gen_;
    }

  private:
    AdditiveCode(FieldSpec spec, std::size_t n, FpMatrix gen) : spec_(std::move(spec)), n_(n), gen_(std::move(gen)) {}

    FieldSpec spec_;
    std::size_t n_ = 0;
    FpMatrix gen_;
};

/// Canonical generator of the row space of m.
FpMatrix canonical_generator(const FpMatrix &m);

AdditiveCode sum(const AdditiveCode &a, const AdditiveCode &b);
AdditiveCode intersection(const AdditiveCode &a, const AdditiveCode &b);
/// Concatenation {(x, y) : x in a, y in b} of length n_a + n_b.
AdditiveCode product(const AdditiveCode &a, const AdditiveCode &b);

}  // namespace addcodes
