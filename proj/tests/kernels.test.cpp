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

#include "addcodes/kernels.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "addcodes/error.hpp"
#include "addcodes/ortho.hpp"
#include "test_util.hpp"

using namespace addcodes;
using namespace addcodes::kernels;
using addcodes::testing::brute_min_distance;
using addcodes::testing::kind_of;

namespace {

// Random k x width matrix of full row rank.
FpMatrix random_full_rank(std::uint32_t p, std::size_t k, std::size_t width, std::mt19937_64 &rng) {
    std::uniform_int_distribution<unsigned> digit(0, p - 1);
    while (true) {
        FpMatrix m(p, k, width);
        for (std::size_t r = 0; r < k; ++r) {
            for (auto &v : m.row(r)) v = static_cast<Residue>(digit(rng));
        }
        if (rank(m) == k) return m;
    }
}

Problem problem(const Duality &d, std::uint32_t n, std::uint32_t k) {
    return Problem{d.spec().p, d.spec().e, n, k, d.matrix()};
}

}  // namespace

TEST(kernels, min_weight_agrees_with_brute_force) {
    std::mt19937_64 rng(1);
    struct Shape {
        std::uint32_t p, e, n, k;
    };
    for (const Shape s : {Shape{2, 2, 5, 4}, Shape{2, 1, 12, 6}, Shape{3, 2, 4, 5}, Shape{2, 3, 4, 5},
                          Shape{5, 1, 5, 3}, Shape{3, 3, 3, 4}, Shape{7, 2, 3, 3}}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto gen = random_full_rank(s.p, s.k, s.e * s.n, rng);
            const int expected = brute_min_distance(gen, s.e);
            ASSERT_EQ(min_weight_reference(gen, s.e), expected);
            ASSERT_EQ(min_weight_parallel(gen, s.e, 1), expected);
            ASSERT_EQ(min_weight_parallel(gen, s.e, 4), expected);
        }
    }
}

TEST(kernels, min_weight_wide_and_large_codes) {
    std::mt19937_64 rng(2);
    // 16 rows over F_4 of length 30: 2^16 codewords, spread over several tasks.
    const auto gen = random_full_rank(2, 16, 60, rng);
    const int ref = min_weight_reference(gen, 2);
    ASSERT_EQ(min_weight_parallel(gen, 2, 1), ref);
    ASSERT_EQ(min_weight_parallel(gen, 2, 4), ref);
    const auto tern = random_full_rank(3, 9, 40, rng);
    ASSERT_EQ(min_weight_parallel(tern, 2, 4), min_weight_reference(tern, 2));
    // Wider than one packed word: falls back to the reference kernel.
    const auto wide = random_full_rank(2, 6, 80, rng);
    ASSERT_EQ(min_weight_parallel(wide, 2, 4), min_weight_reference(wide, 2));
    ASSERT_EQ(min_weight_parallel(FpMatrix(2, 0, 8), 2), 0);
}

TEST(kernels, min_weight_pruning) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto gen = random_full_rank(3, 4, 10, rng);
        const int d = min_weight_reference(gen, 2);
        // Any weight below the threshold may end the walk early.
        const int pruned = min_weight_parallel(gen, 2, 2, 100);
        ASSERT_GE(pruned, d);
        ASSERT_LE(pruned, 5);
        ASSERT_EQ(min_weight_parallel(gen, 2, 2, d), d);
    }
}

TEST(kernels, subspace_enumeration_is_complete) {
    struct Shape {
        std::uint32_t p, width, k;
    };
    for (const Shape s : {Shape{2, 4, 2}, Shape{2, 6, 3}, Shape{3, 4, 2}, Shape{3, 4, 3}, Shape{2, 5, 1}, Shape{5, 3, 2}}) {
        std::set<std::vector<Residue>> seen;
        std::size_t visits = 0;
        for_each_subspace(s.p, s.width, s.k, [&](const FpMatrix &m) {
            ++visits;
            ASSERT_EQ(rref(m).reduced, m);
            ASSERT_EQ(rank(m), s.k);
            seen.insert(m.entries());
        });
        ASSERT_EQ(visits, seen.size());
        ASSERT_EQ(BigInt(visits), gaussian_binomial(s.width, s.k, s.p));
    }
}

TEST(kernels, gram_invertibility_matches_ortho) {
    std::mt19937_64 rng(4);
    for (const char *name : {"M1", "M2", "D1", "D2", "A4"}) {
        const auto d = named(name);
        for (int trial = 0; trial < 30; ++trial) {
            const auto gen = canonical_generator(random_full_rank(d.spec().p, 1 + trial % 4, d.spec().e * 3, rng));
            ASSERT_EQ(gram_invertible_reference(gen, d.matrix()),
                      is_acd(AdditiveCode::from_matrix(gen, d.spec()), d, true).acd);
        }
    }
}

TEST(kernels, exhaustive_parallel_matches_reference) {
    struct Case {
        const char *name;
        std::uint32_t n, k;
    };
    for (const Case c : {Case{"D1", 2, 2}, Case{"D1", 3, 3}, Case{"D2", 3, 4}, Case{"A4", 3, 2}, Case{"M1", 2, 2},
                         Case{"M1", 2, 3}, Case{"M2", 3, 2}, Case{"D1", 4, 2}}) {
        const auto prob = problem(named(c.name), c.n, c.k);
        const auto ref = exhaustive_reference(prob);
        ASSERT_EQ(BigInt(ref.examined), gaussian_binomial(prob.width(), c.k, prob.p));
        for (int jobs : {1, 4}) {
            const auto par = exhaustive_parallel(prob, jobs);
            ASSERT_EQ(par.best, ref.best) << c.name << " " << c.n << " " << c.k << " jobs " << jobs;
            ASSERT_EQ(par.best_index, ref.best_index);
            ASSERT_EQ(par.witness, ref.witness);
            ASSERT_EQ(par.examined, ref.examined);
            ASSERT_EQ(par.acd_count, ref.acd_count);
        }
    }
}

TEST(kernels, exhaustive_odd_rank_under_skew_duality_finds_nothing) {
    for (std::uint32_t k : {1u, 3u}) {
        const auto out = exhaustive_parallel(problem(named("M1"), 2, k), 4);
        ASSERT_FALSE(out.best.has_value());
        ASSERT_EQ(out.acd_count, 0u);
    }
}

TEST(kernels, random_parallel_matches_reference) {
    for (const char *name : {"D1", "M1", "A4"}) {
        const auto prob = problem(named(name), 4, 4);
        const auto ref = random_reference(prob, 3000, 99);
        for (int jobs : {1, 3, 4}) ASSERT_EQ(random_parallel(prob, 3000, 99, jobs), ref) << name << " jobs " << jobs;
        ASSERT_EQ(ref.examined, 3000u);
    }
}

TEST(kernels, trial_stream_is_deterministic) {
    ASSERT_EQ(sample_trial(3, 4, 8, 7, 12), sample_trial(3, 4, 8, 7, 12));
    ASSERT_NE(sample_trial(3, 4, 8, 7, 12), sample_trial(3, 4, 8, 7, 13));
    ASSERT_NE(sample_trial(3, 4, 8, 7, 12), sample_trial(3, 4, 8, 8, 12));
    const auto m = sample_trial(5, 3, 6, 1, 0);
    for (auto v : m.entries()) ASSERT_LT(v, 5);
}

TEST(kernels, problem_validation) {
    ASSERT_EQ(kind_of([] { exhaustive_parallel(problem(named("D1"), 33, 1)); }), ErrorKind::TooLarge);
    ASSERT_EQ(kind_of([] { exhaustive_parallel(problem(named("D1"), 3, 0)); }), ErrorKind::ZeroCode);
    ASSERT_EQ(kind_of([] {
                  exhaustive_parallel(Problem{3, 2, 2, 2, named("D1").matrix()});
              }),
              ErrorKind::DimensionMismatch);
    ASSERT_GE(resolve_jobs(0), 1);
    ASSERT_EQ(resolve_jobs(3), 3);
}
