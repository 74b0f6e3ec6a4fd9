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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcodes {

using Residue = std::uint16_t;
using BigInt = boost::multiprecision::cpp_int;

/// Largest supported modulus. Residues are stored in 16 bits and products are
/// accumulated in 64 bits.
inline constexpr std::uint32_t kMaxPrime = 65521;

bool is_prime(std::uint64_t n);

/// Multiplicative inverse of a nonzero residue modulo the prime p.
Residue inverse_mod(Residue a, std::uint32_t p);

/// Dense row-major matrix over the prime field F_p.
class FpMatrix {
  public:
    FpMatrix() = default;
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

    /// Builds from nested integer lists, reducing every entry mod p (so -1 is
    /// accepted and stored as p - 1).
    static FpMatrix from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<long>> rows);
    static FpMatrix identity(std::uint32_t p, std::size_t n);

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, long value);

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Residue> &entries() const noexcept { return data_; }

    FpMatrix transpose() const;
    /// Vertical concatenation; both operands must agree on modulus and width.
    FpMatrix stacked(const FpMatrix &below) const;
    void append_row(std::span<const Residue> values);
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const FpMatrix &a, const FpMatrix &b) = default;

  private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

struct RrefResult {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. The reduced matrix keeps the input shape; rows
/// past `rank` are zero.
RrefResult rref(const FpMatrix &m);

std::size_t rank(const FpMatrix &m);

/// Canonical (RREF) basis of the right kernel {v : m v = 0}, one vector per
/// row. The result has cols(m) - rank(m) rows.
FpMatrix nullspace(const FpMatrix &m);

/// Throws Error(Singular) when m is not invertible.
FpMatrix invert(const FpMatrix &m);

FpMatrix mat_mul(const FpMatrix &a, const FpMatrix &b);

/// Kronecker product I_n (x) k: block-diagonal with n copies of k.
FpMatrix block_diagonal(const FpMatrix &k, std::size_t copies);

/// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(unsigned n, unsigned k, std::uint32_t p);

}  // namespace addcodes
