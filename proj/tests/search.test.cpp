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

#include "addcodes/search.hpp"

#include <sstream>

#include "gtest/gtest.h"

#include "addcodes/error.hpp"
#include "addcodes/ortho.hpp"
#include "test_util.hpp"

using namespace addcodes;
using addcodes::testing::kind_of;

namespace {

// A witness must survive serialization and re-verify from the file alone.
void check_witness(const SearchResult &r, const Duality &d) {
    ASSERT_TRUE(r.best_distance.has_value());
    std::stringstream file;
    write_generator(file, r.spec, r.n, r.witness);
    const auto back = read_generator(file);
    const auto code = AdditiveCode::from_rows(back.rows, back.spec, back.n);
    ASSERT_EQ(code.dimension(), r.k);
    ASSERT_TRUE(is_acd(code, d, true).acd);
    ASSERT_EQ(code.min_distance(), *r.best_distance);
    ASSERT_LE(*r.best_distance, singleton_bound(r.n, r.k, r.spec.e));
}

}  // namespace

TEST(search, singleton_bound) {
    ASSERT_EQ(singleton_bound(4, 4, 2), 3);
    ASSERT_EQ(singleton_bound(4, 5, 2), 2);
    ASSERT_EQ(singleton_bound(5, 1, 2), 5);
    ASSERT_EQ(singleton_bound(3, 6, 2), 1);
}

TEST(search, exhaustive_examples) {
    const auto d1 = named("D1"), m1 = named("M1");
    const auto a = exhaustive_best(d1, 2, 2);
    ASSERT_EQ(a.best_distance, 2);
    ASSERT_EQ(a.optimality, Optimality::ExhaustiveProven);
    ASSERT_EQ(a.candidates_examined, gaussian_binomial(4, 2, 2));
    check_witness(a, d1);
    const auto b = exhaustive_best(m1, 2, 4);
    ASSERT_EQ(b.best_distance, 1);
    check_witness(b, m1);
    const auto c = exhaustive_best(m1, 1, 1);
    ASSERT_FALSE(c.best_distance.has_value());
    ASSERT_TRUE(c.witness.empty());
    ASSERT_EQ(c.candidates_examined, 4);
    const auto e = exhaustive_best(d1, 3, 5);
    ASSERT_EQ(e.best_distance, 1);
    check_witness(e, d1);
}

TEST(search, exhaustive_budget) {
    try {
        exhaustive_best(named("M1"), 4, 4, 1000);
        FAIL() << "budget not enforced";
    } catch (const Error &err) {
        ASSERT_EQ(err.kind(), ErrorKind::BudgetExceeded);
        ASSERT_NE(std::string(err.what()).find(gaussian_binomial(8, 4, 3).str()), std::string::npos);
    }
    ASSERT_EQ(kind_of([] { exhaustive_best(named("D1"), 2, 5); }), ErrorKind::BadLength);
    ASSERT_EQ(kind_of([] { exhaustive_best(named("D1"), 2, 0); }), ErrorKind::ZeroCode);
}

TEST(search, odd_rank_has_no_acd_code_under_skew_dualities) {
    for (const char *name : {"M1", "M2"}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            for (std::size_t k = 1; k <= 2 * n; k += 2) {
                const auto r = exhaustive_best(named(name), n, k);
                ASSERT_FALSE(r.best_distance.has_value()) << name << " " << n << " " << k;
                ASSERT_EQ(r.acd_count, 0u);
            }
        }
    }
}

TEST(search, random_examples) {
    const auto d1 = named("D1"), m1 = named("M1");
    const auto r = random_best(d1, 5, 6, 100'000, 2024);
    ASSERT_GE(*r.best_distance, 3);
    ASSERT_EQ(r.seed, 2024u);
    check_witness(r, d1);
    const auto s = random_best(m1, 4, 4, 100'000, 2024);
    ASSERT_EQ(s.best_distance, 3);
    ASSERT_EQ(s.optimality, Optimality::SingletonProven);
    check_witness(s, m1);
}

TEST(search, random_is_deterministic) {
    const auto d1 = named("D1");
    const auto a = random_best(d1, 4, 3, 1, 77), b = random_best(d1, 4, 3, 1, 77);
    ASSERT_EQ(a.best_distance, b.best_distance);
    ASSERT_EQ(a.witness, b.witness);
    const auto c = random_best(d1, 6, 5, 5000, 9, 1), d = random_best(d1, 6, 5, 5000, 9, 4);
    ASSERT_EQ(c.best_distance, d.best_distance);
    ASSERT_EQ(c.witness, d.witness);
    ASSERT_EQ(c.acd_count, d.acd_count);
    ASSERT_EQ(kind_of([&] { random_best(d1, 4, 3, 0, 1); }), ErrorKind::BadLength);
}

TEST(search, published_entries) {
    ASSERT_EQ(table_entries(TableName::Table1).size(), 10u);
    ASSERT_EQ(table_entries(TableName::Table2).size(), 110u);
    ASSERT_EQ(table_entry(TableName::Table2, 5, 6)->distance, 3);
    ASSERT_TRUE(table_entry(TableName::Table2, 5, 6)->improved);
    ASSERT_FALSE(table_entry(TableName::Table2, 8, 5)->optimal);
    ASSERT_EQ(table_entry(TableName::Table1, 4, 4)->distance, 3);
    ASSERT_FALSE(table_entry(TableName::Table1, 4, 3).has_value());
    ASSERT_EQ(parse_table_name("table1"), TableName::Table1);
    ASSERT_EQ(kind_of([] { parse_table_name("table3"); }), ErrorKind::UnknownName);
}

TEST(search, published_witnesses_verify) {
    const struct {
        std::size_t n, k;
        int d;
        bool acd;
    } cells[] = {{3, 4, 2, false}, {4, 4, 3, true}, {4, 6, 2, true}};
    for (const auto &c : cells) {
        const auto rows = table1_witness(c.n, c.k);
        ASSERT_TRUE(rows.has_value());
        const auto code = AdditiveCode::from_rows(*rows, table_field(TableName::Table1), c.n);
        ASSERT_EQ(code.dimension(), c.k);
        ASSERT_EQ(code.min_distance(), c.d);
        for (const char *name : {"M1", "M2"}) ASSERT_EQ(is_acd(code, named(name), true).acd, c.acd) << c.n << "," << c.k;
    }
    // The printed [3, 3^4] generator repeats (1, w) in all three columns, so
    // the character product of each pair is trivial; the swapped-tail code
    // for n = 0 mod 3 is the ACD one.
    const auto printed = AdditiveCode::from_rows(*table1_witness(3, 4), table_field(TableName::Table1), 3);
    ASSERT_EQ(is_acd(printed, named("M1"), true).intersection_dim, 2u);
    const auto cert3 = best_construction(TableName::Table1, named("M1"), 3, 4);
    ASSERT_TRUE(cert3.has_value());
    ASSERT_EQ(cert3->distance, 2);
    ASSERT_NE(cert3->source, "published generator");
    const auto cert = best_construction(TableName::Table1, named("M1"), 4, 4);
    ASSERT_TRUE(cert.has_value());
    ASSERT_EQ(cert->distance, 3);
}

TEST(search, table2_exhaustive_rows_one_to_three) {
    TableOptions opt;
    opt.mode = TableMode::Exhaustive;
    opt.n_max = 3;
    const auto report = reproduce_table(TableName::Table2, opt);
    ASSERT_EQ(report.cells.size(), 12u);
    ASSERT_EQ(report.count(CellStatus::Pass), 12u);
    ASSERT_EQ(report.exit_code(), 0);
}

TEST(search, table2_row_four_with_transpose) {
    TableOptions opt;
    opt.mode = TableMode::Exhaustive;
    opt.n_max = 4;
    opt.verify_transpose = true;
    const auto report = reproduce_table(TableName::Table2, opt);
    std::vector<int> row4;
    for (const auto &cell : report.cells) {
        ASSERT_EQ(cell.status, CellStatus::Pass) << cell.n << "," << cell.k;
        ASSERT_EQ(cell.transpose_agrees, true);
        if (cell.n == 4) row4.push_back(*cell.found);
    }
    ASSERT_EQ(row4, (std::vector<int>{3, 4, 3, 3, 2, 2, 1, 1}));
}

TEST(search, table1_mixed_rows_one_to_three) {
    TableOptions opt;
    opt.n_max = 3;
    const auto report = reproduce_table(TableName::Table1, opt);
    ASSERT_EQ(report.cells.size(), 12u);
    for (const auto &cell : report.cells) {
        ASSERT_EQ(cell.status, CellStatus::Pass) << cell.duality << " " << cell.n << "," << cell.k;
        ASSERT_EQ(cell.method, CellMethod::Exhaustive);
    }
}

TEST(search, exhaustive_mode_skips_over_budget_cells) {
    TableOptions opt;
    opt.mode = TableMode::Exhaustive;
    opt.n_max = 2;
    opt.budget = 10;
    const auto report = reproduce_table(TableName::Table2, opt);
    ASSERT_GT(report.count(CellStatus::Skipped), 0u);
    ASSERT_EQ(report.exit_code(), 1);
}

TEST(search, lower_bounds_are_labelled) {
    TableOptions opt;
    opt.n_max = 6;
    opt.budget = 1000;
    opt.trials = 200;
    const auto report = reproduce_table(TableName::Table2, opt);
    for (const auto &cell : report.cells) {
        if (cell.method == CellMethod::Exhaustive) continue;
        if (cell.optimality == Optimality::LowerBound && cell.found < cell.expected.distance) {
            ASSERT_EQ(cell.status, cell.n >= 6 ? CellStatus::Warn : CellStatus::Fail);
        }
        if (cell.optimality != Optimality::LowerBound) {
            ASSERT_EQ(*cell.found, singleton_bound(cell.n, cell.k, 2));
        }
    }
}
