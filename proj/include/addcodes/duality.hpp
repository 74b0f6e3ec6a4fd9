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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addcodes/fpmat.hpp"
#include "addcodes/gf.hpp"

namespace addcodes {

/// SkewSymmetric is the class of dualities under which every element is
/// self-orthogonal: K^T = -K with zero diagonal. Over p = 2 these matrices are
/// symmetric, and they are classified SkewSymmetric rather than Symmetric.
enum class DualityClass { Symmetric, SkewSymmetric, OtherNonSymmetric };
enum class ClassFilter { All, Symmetric, SkewSymmetric, OtherNonSymmetric };

std::string_view to_string(DualityClass c);
ClassFilter parse_class_filter(std::string_view text);

DualityClass classify(const FpMatrix &k);

/// A duality of (F_{p^e}, +): the character of x evaluated at y is
/// xi^(x^T K y) for an invertible e x e matrix K over F_p. Characters are
/// handled throughout as their exponents of xi.
class Duality {
  public:
    Duality(const FpMatrix &k, const FieldSpec &spec, std::string label = {});

    const FieldSpec &spec() const noexcept { return spec_; }
    const FpMatrix &matrix() const noexcept { return k_; }
    DualityClass cls() const noexcept { return class_; }
    const std::string &label() const noexcept { return label_; }

    /// x^T K y mod p on raw coordinate spans (length e each).
    Residue exponent(std::span<const Residue> x, std::span<const Residue> y) const;

    friend bool operator==(const Duality &a, const Duality &b) { return a.spec_ == b.spec_ && a.k_ == b.k_; }

  private:
    FieldSpec spec_;
    FpMatrix k_;
    DualityClass class_;
    std::string label_;
};

Residue char_exponent(const Duality &d, const GFElement &x, const GFElement &y);
Residue vector_exponent(const Duality &d, const GFVector &a, const GFVector &b);
Duality transpose(const Duality &d);

/// M1, M2 over F_9; D1, D2, A4 over F_4.
Duality named(std::string_view name);
std::vector<std::string> named_dualities();

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

/// |GL(e, p)|.
BigInt gl_order(std::uint32_t p, std::uint32_t e);

/// Calls `visit` once for every invertible e x e matrix matching `filter`, in
/// lexicographic order of the row-major entries.
void for_each_duality(const FieldSpec &spec, ClassFilter filter, const std::function<void(const Duality &)> &visit,
                      std::uint64_t bound = kDefaultEnumerationBound);
std::vector<Duality> enumerate_dualities(const FieldSpec &spec, ClassFilter filter,
                                         std::uint64_t bound = kDefaultEnumerationBound);

/// Closed-form count of invertible symmetric e x e matrices over F_p.
BigInt count_symmetric(std::uint32_t p, std::uint32_t e);
/// Closed-form count of dualities of F_{p^two_e} with every element
/// self-orthogonal. Throws OddDimension for odd two_e.
BigInt count_skew(std::uint32_t p, std::uint32_t two_e);

inline constexpr std::uint64_t kDefaultTableBound = 4096;

/// Exponent table of a duality, rows and columns in canonical element order
/// (see GFElement::from_index).
struct CharacterTable {
    FieldSpec spec;
    std::size_t order = 0;
    std::vector<Residue> exponents;

    Residue at(std::size_t x, std::size_t y) const { return exponents[x * order + y]; }
};

CharacterTable character_table(const Duality &d, std::uint64_t bound = kDefaultTableBound);

struct TableDiagnostic {
    std::size_t row = 0;
    std::size_t col = 0;
    Residue expected = 0;
    Residue found = 0;
    std::string message;
};

struct TableValidation {
    std::optional<Duality> duality;
    std::vector<TableDiagnostic> diagnostics;

    bool valid() const { return duality.has_value() && diagnostics.empty(); }
};

/// Fits K from the basis-pair cells and reports every cell that the fitted
/// bilinear form does not reproduce, plus a diagnostic if K is singular.
TableValidation validate_table(const CharacterTable &t);

/// Text rendering: a header line of element labels, then one labelled row per
/// element. Cells are "1", "a", "a2", ... (exponent notation) or "-1" when p = 2.
std::string render_table(const CharacterTable &t);
/// Parses the format produced by render_table, preceded by a "p e" line.
CharacterTable parse_table(std::istream &in);
std::string render_cell(Residue exponent, std::uint32_t p);

/// Text format: "p e" then e rows of e residues.
Duality read_duality(std::istream &in);
/// Accepts "name:M1" or "file:PATH".
Duality resolve_duality(std::string_view reference);

}  // namespace addcodes
