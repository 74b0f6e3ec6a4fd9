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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addcodes/fpmat.hpp"

namespace addcodes {

/// The field F_{p^e}, viewed only through its additive group: elements are
/// coordinate vectors over F_p on the power basis {1, w, w^2, ...}.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::string basis_symbol = "w";

    FieldSpec() = default;
    FieldSpec(std::uint32_t prime, std::uint32_t degree, std::string symbol = "w");

    /// p^e; throws TooLarge if it does not fit in 64 bits.
    std::uint64_t order() const;

    friend bool operator==(const FieldSpec &a, const FieldSpec &b) { return a.p == b.p && a.e == b.e; }
};

class GFElement {
  public:
    GFElement(const FieldSpec &spec, std::vector<Residue> coords);

    static GFElement zero(const FieldSpec &spec);
    /// Element at position `index` of the canonical ordering 0, 1, ..., p-1, w,
    /// w+1, ...: the base-p digits of `index`, lowest digit = coefficient of 1.
    static GFElement from_index(const FieldSpec &spec, std::uint64_t index);

    const FieldSpec &spec() const noexcept { return spec_; }
    std::span<const Residue> coords() const noexcept { return coords_; }
    Residue coord(std::size_t i) const { return coords_.at(i); }
    std::uint64_t index() const;
    bool is_zero() const;

    GFElement operator+(const GFElement &other) const;
    GFElement scaled(Residue c) const;

    friend bool operator==(const GFElement &a, const GFElement &b) {
        return a.spec_ == b.spec_ && a.coords_ == b.coords_;
    }

  private:
    FieldSpec spec_;
    std::vector<Residue> coords_;
};

class GFVector {
  public:
    GFVector(const FieldSpec &spec, std::vector<GFElement> entries);

    static GFVector zero(const FieldSpec &spec, std::size_t n);

    const FieldSpec &spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const GFElement &operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<GFElement> &entries() const noexcept { return entries_; }
    std::size_t weight() const;

    friend bool operator==(const GFVector &a, const GFVector &b) = default;

  private:
    FieldSpec spec_;
    std::vector<GFElement> entries_;
};

/// Digit-string codec: exactly e base-p digits, coefficient of 1 first.
/// Only p <= 10 has a digit-string form; larger primes are rejected.
GFElement parse_element(std::string_view text, const FieldSpec &spec);
std::string format_element(const GFElement &x);
/// Human-readable form such as "w+2" or "2w"; display only.
std::string display_element(const GFElement &x);

GFVector parse_vector(std::span<const std::string> tokens, const FieldSpec &spec);
std::string format_vector(const GFVector &v);

/// Flattens rows over F_{p^e} into an F_p matrix with the e coordinates of
/// position j in columns e*j .. e*j+e-1.
FpMatrix expand(std::span<const GFVector> rows);
FpMatrix expand(std::span<const GFVector> rows, const FieldSpec &spec, std::size_t n);
std::vector<GFVector> contract(const FpMatrix &m, const FieldSpec &spec);
GFVector contract_row(std::span<const Residue> row, const FieldSpec &spec);

/// Contents of a generator-matrix text file.
struct GeneratorFile {
    FieldSpec spec;
    std::size_t n = 0;
    std::vector<GFVector> rows;
};

/// Format: first non-comment line "p e n m", then m lines of n digit strings.
/// Lines starting with '#' are ignored.
GeneratorFile read_generator(std::istream &in);
GeneratorFile read_generator_file(const std::string &path);
void write_generator(std::ostream &out, const FieldSpec &spec, std::size_t n, std::span<const GFVector> rows);

}  // namespace addcodes
