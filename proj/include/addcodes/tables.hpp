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
#include <string>
#include <vector>

#include "addcodes/gf.hpp"

namespace addcodes {

enum class TableName { Table1, Table2 };

std::string to_string(TableName t);
TableName parse_table_name(const std::string &text);

/// One published cell: the best distance of an ACD code of length n and
/// F_p-rank k.
struct TableEntry {
    std::size_t n = 0;
    std::size_t k = 0;
    int distance = 0;
    /// Printed in bold, i.e. claimed optimal.
    bool optimal = true;
    /// Marked as an improvement over earlier constructions.
    bool improved = false;
};

/// Table 1: skew dualities M1 / M2 over F_9, n <= 4, even k.
/// Table 2: D1 / D2 over F_4, n <= 10, k <= 2n.
const std::vector<TableEntry> &table_entries(TableName t);
std::optional<TableEntry> table_entry(TableName t, std::size_t n, std::size_t k);
/// Dualities each table covers; the first is the one computed by default.
std::vector<std::string> table_dualities(TableName t);
FieldSpec table_field(TableName t);

/// Published generator matrix for a Table 1 cell, if one was printed.
std::optional<std::vector<GFVector>> table1_witness(std::size_t n, std::size_t k);

}  // namespace addcodes
