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

#include "addcodes/tables.hpp"

#include <algorithm>
#include <array>

#include "addcodes/error.hpp"

namespace addcodes {

namespace {

std::vector<TableEntry> build_table1() {
    std::vector<TableEntry> out;
    const int rows[4][4] = {{1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}};
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t i = 0; i < n; ++i) out.push_back({n, 2 * (i + 1), rows[n - 1][i], true, false});
    }
    return out;
}

std::vector<TableEntry> build_table2() {
    const std::vector<std::vector<int>> rows = {
        {1, 1},
        {1, 2, 1, 1},
        {3, 3, 2, 2, 1, 1},
        {3, 4, 3, 3, 2, 2, 1, 1},
        {5, 5, 4, 4, 3, 3, 2, 2, 1, 1},
        {5, 6, 5, 4, 4, 4, 3, 2, 2, 2, 1, 1},
        {7, 7, 6, 5, 5, 4, 4, 3, 3, 2, 2, 2, 1, 1},
        {7, 8, 6, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 2, 1, 1},
        {9, 9, 7, 7, 6, 5, 5, 4, 4, 4, 3, 3, 2, 2, 2, 2, 1, 1},
        {9, 10, 8, 8, 7, 6, 5, 5, 5, 4, 4, 3, 3, 3, 2, 2, 2, 2, 1, 1},
    };
    const std::array<std::pair<std::size_t, std::size_t>, 8> not_optimal = {
        {{8, 5}, {9, 6}, {9, 8}, {9, 13}, {10, 7}, {10, 8}, {10, 10}, {10, 12}}};
    const std::array<std::pair<std::size_t, std::size_t>, 12> improved = {{{5, 6},
                                                                            {6, 6},
                                                                            {7, 5},
                                                                            {7, 7},
                                                                            {7, 9},
                                                                            {8, 8},
                                                                            {8, 11},
                                                                            {9, 10},
                                                                            {9, 15},
                                                                            {10, 4},
                                                                            {10, 5},
                                                                            {10, 9}}};
    std::vector<TableEntry> out;
    for (std::size_t n = 1; n <= rows.size(); ++n) {
        for (std::size_t k = 1; k <= 2 * n; ++k) {
            const std::pair cell{n, k};
            const bool bold = std::find(not_optimal.begin(), not_optimal.end(), cell) == not_optimal.end();
            const bool star = std::find(improved.begin(), improved.end(), cell) != improved.end();
            out.push_back({n, k, rows[n - 1][k - 1], bold, star});
        }
    }
    return out;
}

}  // namespace

std::string to_string(TableName t) { return t == TableName::Table1 ? "table1" : "table2"; }

TableName parse_table_name(const std::string &text) {
    if (text == "table1") return TableName::Table1;
    if (text == "table2") return TableName::Table2;
    throw Error(ErrorKind::UnknownName, "no table named '" + text + "'");
}

const std::vector<TableEntry> &table_entries(TableName t) {
    static const std::vector<TableEntry> t1 = build_table1();
    static const std::vector<TableEntry> t2 = build_table2();
    return t == TableName::Table1 ? t1 : t2;
}

std::optional<TableEntry> table_entry(TableName t, std::size_t n, std::size_t k) {
    for (const auto &e : table_entries(t)) {
        if (e.n == n && e.k == k) return e;
    }
    return std::nullopt;
}

std::vector<std::string> table_dualities(TableName t) {
    if (t == TableName::Table1) return {"M1", "M2"};
    return {"D1", "D2"};
}

FieldSpec table_field(TableName t) { return t == TableName::Table1 ? FieldSpec(3, 2, "w") : FieldSpec(2, 2, "v"); }

std::optional<std::vector<GFVector>> table1_witness(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::string>> rows;
    if (n == 3 && k == 4) {
        rows = {{"10", "10", "00"}, {"01", "01", "00"}, {"10", "00", "10"}, {"01", "00", "01"}};
    } else if (n == 4 && k == 4) {
        rows = {{"10", "00", "10", "11"}, {"01", "00", "01", "01"}, {"00", "10", "10", "01"}, {"00", "01", "01", "10"}};
    } else if (n == 4 && k == 6) {
        rows = {{"10", "10", "10", "00"}, {"01", "01", "01", "00"}, {"10", "10", "00", "10"},
                {"01", "01", "00", "01"}, {"10", "00", "10", "10"}, {"01", "00", "01", "01"}};
    } else {
        return std::nullopt;
    }
    const FieldSpec spec = table_field(TableName::Table1);
    std::vector<GFVector> out;
    for (const auto &r : rows) out.push_back(parse_vector(r, spec));
    return out;
}

}  // namespace addcodes
