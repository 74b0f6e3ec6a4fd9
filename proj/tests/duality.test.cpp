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

#include "addcodes/duality.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

#include "addcodes/error.hpp"
#include "test_util.hpp"

using namespace addcodes;
using addcodes::testing::data_path;
using addcodes::testing::f4;
using addcodes::testing::f9;
using addcodes::testing::kind_of;

namespace {

CharacterTable load_table(const std::string &name) {
    std::ifstream in(data_path(name));
    return parse_table(in);
}

}  // namespace

TEST(duality, classify) {
    ASSERT_EQ(classify(named("M1").matrix()), DualityClass::SkewSymmetric);
    ASSERT_EQ(classify(named("M2").matrix()), DualityClass::SkewSymmetric);
    ASSERT_EQ(classify(named("A4").matrix()), DualityClass::SkewSymmetric);
    ASSERT_EQ(classify(named("D1").matrix()), DualityClass::OtherNonSymmetric);
    ASSERT_EQ(classify(named("D2").matrix()), DualityClass::OtherNonSymmetric);
    ASSERT_EQ(classify(FpMatrix::identity(3, 2)), DualityClass::Symmetric);
    ASSERT_EQ(classify(FpMatrix::identity(2, 2)), DualityClass::Symmetric);
    // Symmetric over F_2 but with a nonzero diagonal: not every element is self-orthogonal.
    ASSERT_EQ(classify(FpMatrix::from_rows(2, {{1, 1}, {1, 0}})), DualityClass::Symmetric);
}

TEST(duality, rejects_singular_matrix) {
    ASSERT_EQ(kind_of([] { Duality(FpMatrix::from_rows(3, {{1, 2}, {2, 1}}), f9()); }), ErrorKind::NotInvertible);
    ASSERT_EQ(kind_of([] { named("X9"); }), ErrorKind::UnknownName);
}

TEST(duality, exponent_matches_matrix) {
    const Duality m1 = named("M1");
    const auto one = GFElement::from_index(f9(), 1), w = GFElement::from_index(f9(), 3);
    ASSERT_EQ(char_exponent(m1, one, w), 1);
    ASSERT_EQ(char_exponent(m1, w, one), 2);
    ASSERT_EQ(char_exponent(m1, one, one), 0);
    ASSERT_EQ(kind_of([&] { char_exponent(m1, GFElement::from_index(f4(), 1), one); }), ErrorKind::SpecMismatch);
}

TEST(duality, transpose_swaps_named_pairs) {
    ASSERT_EQ(transpose(named("M1")), named("M2"));
    ASSERT_EQ(transpose(named("M1")).label(), "M2");
    ASSERT_EQ(transpose(named("D1")), named("D2"));
    ASSERT_EQ(transpose(named("D2")).label(), "D1");
    ASSERT_EQ(transpose(named("A4")), named("A4"));
}

TEST(duality, tables_match_published_cells) {
    for (const auto &[name, file] : std::vector<std::pair<std::string, std::string>>{
             {"M1", "m1.table"}, {"M2", "m2.table"}, {"D1", "d1.table"}, {"D2", "d2.table"}}) {
        const auto published = load_table(file);
        const auto computed = character_table(named(name));
        ASSERT_EQ(computed.order, published.order) << name;
        ASSERT_EQ(computed.exponents, published.exponents) << name;
    }
}

TEST(duality, validate_recovers_matrix) {
    for (const auto &[name, file] : std::vector<std::pair<std::string, std::string>>{
             {"M1", "m1.table"}, {"M2", "m2.table"}, {"D1", "d1.table"}, {"D2", "d2.table"}}) {
        const auto v = validate_table(load_table(file));
        ASSERT_TRUE(v.valid()) << name;
        ASSERT_EQ(v.duality->matrix(), named(name).matrix()) << name;
    }
}

TEST(duality, validate_reports_non_additive_tables) {
    const auto n1 = validate_table(load_table("n1.table"));
    ASSERT_FALSE(n1.valid());
    // chi_1(1) = a forces chi_1(2) = a2, but the printed cell is 1.
    bool found = false;
    for (const auto &d : n1.diagnostics) found = found || (d.row == 1 && d.col == 2 && d.expected == 2 && d.found == 0);
    ASSERT_TRUE(found);
    ASSERT_FALSE(validate_table(load_table("n2.table")).valid());
}

TEST(duality, validate_flags_singular_fit) {
    CharacterTable t{f9(), 9, std::vector<Residue>(81, 0)};
    const auto v = validate_table(t);
    ASSERT_FALSE(v.valid());
    ASSERT_FALSE(v.diagnostics.empty());
}

TEST(duality, render_parse_round_trip) {
    for (const auto &name : named_dualities()) {
        const auto t = character_table(named(name));
        std::istringstream in(std::to_string(t.spec.p) + " " + std::to_string(t.spec.e) + "\n" + render_table(t));
        const auto back = parse_table(in);
        ASSERT_EQ(back.exponents, t.exponents) << name;
    }
    ASSERT_EQ(render_cell(0, 3), "1");
    ASSERT_EQ(render_cell(1, 3), "a");
    ASSERT_EQ(render_cell(2, 3), "a2");
    ASSERT_EQ(render_cell(1, 2), "-1");
}

TEST(duality, read_and_resolve) {
    std::istringstream in("# A4\n2 2\n0 1\n1 0\n");
    ASSERT_EQ(read_duality(in), named("A4"));
    ASSERT_EQ(resolve_duality("file:" + data_path("a4.duality")), named("A4"));
    ASSERT_EQ(resolve_duality("name:D1"), named("D1"));
    ASSERT_EQ(kind_of([] { resolve_duality("D1"); }), ErrorKind::Parse);
}

TEST(duality, enumeration_is_lexicographic_and_complete) {
    const auto all = enumerate_dualities(f9(), ClassFilter::All);
    ASSERT_EQ(all.size(), 48u);
    for (std::size_t i = 1; i < all.size(); ++i) {
        ASSERT_LT(all[i - 1].matrix().entries(), all[i].matrix().entries());
    }
    const auto skew = enumerate_dualities(f9(), ClassFilter::SkewSymmetric);
    ASSERT_EQ(skew.size(), 2u);
    ASSERT_EQ(skew[0], named("M1"));
    ASSERT_EQ(skew[1], named("M2"));
    ASSERT_EQ(enumerate_dualities(f4(), ClassFilter::All).size(), 6u);
    ASSERT_EQ(enumerate_dualities(f4(), ClassFilter::OtherNonSymmetric).size(), 2u);
}

TEST(duality, count_formulas_match_enumeration) {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {5, 1}, {2, 4}}) {
        std::uint64_t symmetric = 0, skew = 0, total = 0;
        for_each_duality(FieldSpec(p, e), ClassFilter::All, [&](const Duality &d) {
            ++total;
            symmetric += d.matrix() == d.matrix().transpose();
            skew += d.cls() == DualityClass::SkewSymmetric;
        });
        ASSERT_EQ(BigInt(total), gl_order(p, e));
        ASSERT_EQ(BigInt(symmetric), count_symmetric(p, e)) << p << "," << e;
        if (e % 2 == 0) {
            ASSERT_EQ(BigInt(skew), count_skew(p, e)) << p << "," << e;
        } else {
            ASSERT_EQ(skew, 0u);
        }
    }
    ASSERT_EQ(kind_of([] { count_skew(3, 3); }), ErrorKind::OddDimension);
}

TEST(duality, enumeration_bound) {
    ASSERT_EQ(kind_of([] { for_each_duality(FieldSpec(3, 4), ClassFilter::All, [](const Duality &) {}); }),
              ErrorKind::TooLarge);
    ASSERT_EQ(kind_of([] { character_table(Duality(FpMatrix::identity(2, 13), FieldSpec(2, 13))); }), ErrorKind::TooLarge);
}

TEST(duality, skew_class_means_all_elements_self_orthogonal) {
    for (const FieldSpec &spec : {f4(), f9(), FieldSpec(2, 4), FieldSpec(3, 3)}) {
        if (gl_order(spec.p, spec.e) > 30000) continue;
        for_each_duality(spec, ClassFilter::All, [&](const Duality &d) {
            bool all_zero = true;
            for (std::uint64_t i = 0; i < spec.order(); ++i) {
                const auto x = GFElement::from_index(spec, i);
                all_zero = all_zero && char_exponent(d, x, x) == 0;
            }
            ASSERT_EQ(all_zero, d.cls() == DualityClass::SkewSymmetric);
        });
    }
}
