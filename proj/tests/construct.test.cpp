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

#include "addcodes/construct.hpp"

#include "gtest/gtest.h"

#include "addcodes/error.hpp"
#include "addcodes/ortho.hpp"
#include "test_util.hpp"

using namespace addcodes;
using addcodes::testing::brute_min_distance;
using addcodes::testing::data_path;
using addcodes::testing::f4;
using addcodes::testing::f9;
using addcodes::testing::kind_of;
using addcodes::testing::rows_of;

namespace {

// Claim against measurement: ACD by both criteria, and the promised distance.
void verify(const ConstructionReport &r, const Duality &d) {
    ASSERT_TRUE(r.claimed_acd);
    ASSERT_TRUE(is_acd(r.code, d, true).acd) << r.source;
    if (r.claimed_distance) {
        ASSERT_EQ(r.code.min_distance(), *r.claimed_distance) << r.source;
    }
    ASSERT_EQ(r.code, AdditiveCode::from_rows(r.rows, r.code.spec(), r.code.length()));
}

Duality first_skew(const FieldSpec &spec) {
    Duality out = named("A4");
    bool found = false;
    for_each_duality(spec, ClassFilter::SkewSymmetric, [&](const Duality &d) {
        if (!found) out = d;
        found = true;
    });
    return out;
}

}  // namespace

TEST(construct, nonorthogonal_pair) {
    const auto [x, y] = find_nonorthogonal_pair(named("M1"));
    ASSERT_EQ(format_element(x), "10");
    ASSERT_EQ(format_element(y), "01");
    ASSERT_EQ(char_exponent(named("M1"), x, y), 1);
    const auto [a, b] = find_nonorthogonal_pair(named("A4"));
    ASSERT_EQ(format_element(a), "10");
    ASSERT_EQ(format_element(b), "01");
    const auto [u, v] = find_nonorthogonal_pair(named("D1"));
    ASSERT_EQ(u, v);
    ASSERT_EQ(u.index(), 1u);
}

TEST(construct, orthogonal_independent_pair) {
    ASSERT_EQ(kind_of([] { find_orthogonal_independent_pair(named("M1")); }), ErrorKind::NoSuchPair);
    ASSERT_EQ(kind_of([] { find_orthogonal_independent_pair(named("A4")); }), ErrorKind::NoSuchPair);
    std::size_t checked = 0;
    for_each_duality(FieldSpec(2, 4), ClassFilter::SkewSymmetric, [&](const Duality &d) {
        const auto [a, b] = find_orthogonal_independent_pair(d);
        ASSERT_FALSE(a.is_zero());
        ASSERT_FALSE(b.is_zero());
        ASSERT_NE(a, b);
        ASSERT_EQ(char_exponent(d, a, b), 0);
        ++checked;
    });
    ASSERT_EQ(BigInt(checked), count_skew(2, 4));
}

TEST(construct, length_one) {
    const FieldSpec f27(3, 3);
    std::size_t checked = 0;
    for_each_duality(f27, ClassFilter::All, [&](const Duality &d) {
        const auto r = construct_length1(d);
        ASSERT_TRUE(r.nontrivial);
        ASSERT_TRUE(r.code.dimension() == 1 || r.code.dimension() == 2);
        ASSERT_TRUE(is_acd(r.code, d, true).acd);
        ++checked;
    });
    ASSERT_EQ(checked, 11232u);
    const auto m1 = construct_length1(named("M1"));
    ASSERT_FALSE(m1.nontrivial);
    ASSERT_EQ(m1.code, AdditiveCode::full(f9(), 1));
    const auto d1 = construct_length1(named("D1"));
    ASSERT_EQ(d1.code, AdditiveCode::from_rows(rows_of(f4(), {{"10"}})));
    verify(d1, named("D1"));
}

TEST(construct, acd1_template) {
    const auto rows = read_generator_file(data_path("acd1.gen")).rows;
    verify(construct_acd1(named("M1"), rows), named("M1"));
    verify(construct_acd1(named("M2"), rows), named("M2"));
    const auto dup = rows_of(f9(), {{"10", "01", "00"}, {"10", "01", "00"}});
    ASSERT_EQ(kind_of([&] { construct_acd1(named("M1"), dup); }), ErrorKind::TemplateViolation);
    auto odd = rows;
    odd.pop_back();
    ASSERT_EQ(kind_of([&] { construct_acd1(named("M1"), odd); }), ErrorKind::TemplateViolation);
    ASSERT_EQ(kind_of([&] { construct_acd1(named("D1"), rows_of(f4(), {{"10"}, {"01"}})); }), ErrorKind::Unsupported);
}

TEST(construct, acd2_template) {
    const auto rows = read_generator_file(data_path("acd2.gen")).rows;
    const auto r1 = construct_acd2(named("M1"), rows);
    verify(r1, named("M1"));
    ASSERT_EQ(gram_of_rows(r1.rows, named("M1")),
              FpMatrix::from_rows(3, {{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}}));
    verify(construct_acd2(named("M2"), rows), named("M2"));
    // Row 2 overlaps the first pair's support.
    const auto crossed = rows_of(f9(), {{"10", "01"}, {"01", "01"}, {"01", "00"}, {"10", "00"}});
    ASSERT_EQ(kind_of([&] { construct_acd2(named("M1"), crossed); }), ErrorKind::TemplateViolation);
}

TEST(construct, bound_grid_over_f9) {
    for (const char *name : {"M1", "M2"}) {
        const auto d = named(name);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (std::size_t s = 1; s <= n; ++s) {
                const auto r = construct_bound(d, n, s);
                ASSERT_EQ(r.code.dimension(), 2 * s);
                ASSERT_EQ(*r.claimed_distance, static_cast<int>(n / s));
                verify(r, d);
            }
        }
    }
    const auto case2 = construct_bound(named("M1"), 3, 1);
    ASSERT_EQ(case2.rows, rows_of(f9(), {{"10", "10", "01"}, {"01", "01", "10"}}));
    ASSERT_EQ(construct_bound(named("M1"), 4, 2).code.min_distance(), 2);
    ASSERT_EQ(construct_bound(named("M1"), 1, 1).code.min_distance(), 1);
    ASSERT_EQ(kind_of([] { construct_bound(named("M1"), 2, 3); }), ErrorKind::BadLength);
    ASSERT_EQ(kind_of([] { construct_bound(named("D1"), 2, 1); }), ErrorKind::Unsupported);
}

TEST(construct, bound_over_other_fields) {
    const auto a4 = named("A4");
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t s = 1; s <= n; ++s) {
            if ((n / s) % 2 == 0) {
                ASSERT_EQ(kind_of([&] { construct_bound(a4, n, s); }), ErrorKind::Unsupported);
            } else {
                verify(construct_bound(a4, n, s), a4);
            }
        }
    }
    for (const FieldSpec &spec : {FieldSpec(2, 4), FieldSpec(5, 2)}) {
        const auto d = first_skew(spec);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (std::size_t s = 1; s <= std::min<std::size_t>(n, 2); ++s) {
                const auto r = construct_bound(d, n, s);
                ASSERT_EQ(r.code.dimension(), 2 * s);
                ASSERT_EQ(brute_min_distance(r.code.generator(), spec.e), *r.claimed_distance);
                verify(r, d);
            }
        }
    }
}

TEST(construct, n_2n2) {
    for (const char *name : {"M1", "M2"}) {
        for (std::size_t n = 2; n <= 6; ++n) {
            const auto r = construct_n_2n2(named(name), n);
            ASSERT_EQ(r.code.dimension(), 2 * n - 2);
            ASSERT_EQ(*r.claimed_distance, 2);
            verify(r, named(name));
        }
    }
    for (const char *name : {"D1", "D2"}) {
        for (std::size_t n = 2; n <= 10; ++n) {
            const auto r = construct_n_2n2(named(name), n);
            ASSERT_EQ(r.code.dimension(), 2 * n - 2);
            verify(r, named(name));
        }
    }
    for (std::size_t n = 3; n <= 9; n += 2) verify(construct_n_2n2(named("A4"), n), named("A4"));
    ASSERT_EQ(kind_of([] { construct_n_2n2(named("A4"), 4); }), ErrorKind::Unsupported);
    ASSERT_EQ(kind_of([] { construct_n_2n2(named("M1"), 1); }), ErrorKind::Unsupported);
    ASSERT_EQ(construct_n_2n2(named("M1"), 3).code.size(), 81);
    ASSERT_EQ(construct_n_2n2(named("D1"), 4).code.size(), 64);
    ASSERT_EQ(construct_n_2n2(named("M1"), 4).code.size(), 729);
}

TEST(construct, quaternary) {
    for (const char *name : {"D1", "D2"}) {
        const auto d = named(name);
        for (std::size_t n = 1; n <= 10; ++n) {
            for (std::size_t k : {std::size_t{1}, std::size_t{2}, 2 * n - 2, 2 * n - 1}) {
                if (k == 0 || (k == 2 * n - 2 && n < 2)) continue;
                const auto r = construct_f4(d, n, k);
                ASSERT_EQ(r.code.dimension(), k) << name << " " << n << " " << k;
                verify(r, d);
            }
        }
        ASSERT_EQ(kind_of([&] { construct_f4(d, 5, 3); }), ErrorKind::UnsupportedK);
    }
    ASSERT_EQ(*construct_f4(named("D1"), 5, 1).claimed_distance, 5);
    ASSERT_EQ(*construct_f4(named("D1"), 4, 1).claimed_distance, 3);
    ASSERT_EQ(construct_f4(named("D2"), 6, 2).code.min_distance(), 6);
    const auto a4 = named("A4");
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto r = construct_f4(a4, n, 2);
        ASSERT_EQ(*r.claimed_distance, static_cast<int>(n % 2 ? n : n - 1));
        verify(r, a4);
    }
    ASSERT_EQ(construct_f4(a4, 4, 2).code.min_distance(), 3);
    ASSERT_EQ(kind_of([&] { construct_f4(a4, 4, 1); }), ErrorKind::UnsupportedK);
    ASSERT_EQ(kind_of([] { construct_f4(named("M1"), 4, 1); }), ErrorKind::Unsupported);
}

TEST(construct, single_full_weight_row_parity) {
    // Every nonzero element of F_4 pairs with itself to -1 under D1 and D2, so
    // a full-support row is ACD exactly when its length is odd.
    for (const char *name : {"D1", "D2"}) {
        const auto d = named(name);
        for (std::size_t n = 1; n <= 5; ++n) {
            std::vector<std::uint64_t> idx(n, 1);
            while (true) {
                std::vector<GFElement> entries;
                for (auto i : idx) entries.push_back(GFElement::from_index(f4(), i));
                const GFVector rows[] = {GFVector(f4(), entries)};
                ASSERT_EQ(is_acd(AdditiveCode::from_rows(rows), d, true).acd, n % 2 == 1);
                std::size_t pos = 0;
                while (pos < n && idx[pos] == 3) idx[pos++] = 1;
                if (pos == n) break;
                ++idx[pos];
            }
        }
    }
}
