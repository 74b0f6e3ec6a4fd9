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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addcodes/duality.hpp"
#include "addcodes/fpmat.hpp"
#include "addcodes/gf.hpp"
#include "addcodes/tables.hpp"

namespace addcodes {

enum class Optimality { ExhaustiveProven, SingletonProven, LowerBound };
std::string_view to_string(Optimality o);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// d <= n - ceil(k / e) + 1 for an additive [n, p^k, d] code over F_{p^e}.
int singleton_bound(std::size_t n, std::size_t k, std::uint32_t e);

struct SearchResult {
    FieldSpec spec;
    std::string duality;
    std::size_t n = 0;
    std::size_t k = 0;
    /// Empty when no ACD code of this rank was found (or exists, when proven).
    std::optional<int> best_distance;
    std::vector<GFVector> witness;
    Optimality optimality = Optimality::LowerBound;
    BigInt candidates_examined = 0;
    std::uint64_t acd_count = 0;
    std::optional<std::uint64_t> seed;
};

/// Every k-dimensional F_p-subspace of F_{p^e}^n, by canonical RREF form.
/// Throws BudgetExceeded when the subspace count exceeds `budget`.
SearchResult exhaustive_best(const Duality &d, std::size_t n, std::size_t k, std::uint64_t budget = kDefaultBudget,
                             int jobs = 0);

/// `trials` seeded random k x (e*n) matrices; rank-deficient samples are never
/// ACD and drop out. Identical for any `jobs`.
SearchResult random_best(const Duality &d, std::size_t n, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                         int jobs = 0);

enum class TableMode { Exhaustive, Mixed };
enum class CellMethod { Exhaustive, Construction, Random, None };
enum class CellStatus { Pass, Fail, Warn, Skipped };

std::string_view to_string(CellMethod m);
std::string_view to_string(CellStatus s);

struct TableOptions {
    TableMode mode = TableMode::Mixed;
    std::size_t n_max = 4;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 1;
    int jobs = 0;
    /// Table 2 only: recompute exhaustive cells under D2 and compare.
    bool verify_transpose = false;
};

struct TableCell {
    std::string duality;
    std::size_t n = 0;
    std::size_t k = 0;
    TableEntry expected;
    std::optional<int> found;
    CellMethod method = CellMethod::None;
    Optimality optimality = Optimality::LowerBound;
    CellStatus status = CellStatus::Skipped;
    std::vector<GFVector> witness;
    BigInt examined = 0;
    /// Result of the D2 recomputation when requested.
    std::optional<bool> transpose_agrees;
    std::string note;
};

struct TableReport {
    TableName table = TableName::Table2;
    std::vector<TableCell> cells;

    std::size_t count(CellStatus s) const;
    /// 0 when every cell passed or warned, 1 otherwise.
    int exit_code() const;
};

/// Best verified construction for a table cell: any published or theorem
/// construction whose code is ACD of rank k. Empty if none applies.
struct ConstructionCertificate {
    int distance = 0;
    std::vector<GFVector> rows;
    std::string source;
};
std::optional<ConstructionCertificate> best_construction(TableName t, const Duality &d, std::size_t n, std::size_t k);

TableReport reproduce_table(TableName t, const TableOptions &options);

}  // namespace addcodes
