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

#include <algorithm>
#include <limits>
#include <vector>

#include "addcodes/error.hpp"
#include "addcodes/kernels.hpp"
#include "kernel_common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addcodes::kernels {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

int block_weight(std::span<const Residue> v, std::uint32_t e) {
    int w = 0;
    for (std::size_t j = 0; j < v.size(); j += e) {
        for (std::size_t t = 0; t < e; ++t) {
            if (v[j + t] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

}  // namespace

int min_weight_reference(const FpMatrix &gen, std::uint32_t e) {
    const std::uint32_t p = gen.modulus();
    const std::size_t k = gen.rows(), width = gen.cols();
    if (k == 0) return 0;
    std::vector<Residue> coeff(k, 0), word(width);
    int best = std::numeric_limits<int>::max();
    while (true) {
        std::size_t pos = 0;
        while (pos < k && ++coeff[pos] == p) coeff[pos++] = 0;
        if (pos == k) break;
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (coeff[i] == 0) continue;
            auto row = gen.row(i);
            for (std::size_t c = 0; c < width; ++c) word[c] = static_cast<Residue>((word[c] + coeff[i] * row[c]) % p);
        }
        const int w = block_weight(word, e);
        if (w > 0) best = std::min(best, w);
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

bool gram_invertible_reference(const FpMatrix &rows, const FpMatrix &duality) {
    if (rows.rows() == 0) return true;
    const std::size_t n = rows.cols() / duality.rows();
    const FpMatrix gram = mat_mul(mat_mul(rows, block_diagonal(duality, n)), rows.transpose());
    return rank(gram) == rows.rows();
}

void for_each_subspace(std::uint32_t p, std::uint32_t width, std::uint32_t k,
                       const std::function<void(const FpMatrix &)> &visit) {
    if (k > width) return;
    std::vector<std::uint32_t> pivots(k);
    for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        // Free slots: entries right of each pivot that are not pivot columns.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
        std::vector<bool> is_pivot(width, false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::uint32_t r = 0; r < k; ++r) {
            for (std::uint32_t c = pivots[r] + 1; c < width; ++c) {
                if (!is_pivot[c]) slots.emplace_back(r, c);
            }
        }
        std::vector<Residue> digits(slots.size(), 0);
        while (true) {
            FpMatrix m(p, k, width);
            for (std::uint32_t r = 0; r < k; ++r) m.set(r, pivots[r], 1);
            for (std::size_t s = 0; s < slots.size(); ++s) m.set(slots[s].first, slots[s].second, digits[s]);
            visit(m);
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        // Next k-combination of [0, width) in lexicographic order.
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && pivots[i] == width - k + i) --i;
        if (i < 0) return;
        ++pivots[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

namespace {

void consider(Outcome &out, const FpMatrix &rows, std::uint64_t index, std::uint32_t e, const FpMatrix &duality) {
    ++out.examined;
    if (!gram_invertible_reference(rows, duality)) return;
    ++out.acd_count;
    const int d = min_weight_reference(rows, e);
    if (!out.best || d > *out.best) {
        out.best = d;
        out.best_index = index;
        out.witness = rows;
    }
}

}  // namespace

Outcome exhaustive_reference(const Problem &problem) {
    Outcome out;
    std::uint64_t index = 0;
    for_each_subspace(problem.p, problem.width(), problem.k, [&](const FpMatrix &m) {
        consider(out, m, index++, problem.e, problem.duality);
    });
    return out;
}

FpMatrix sample_trial(std::uint32_t p, std::uint32_t k, std::uint32_t width, std::uint64_t seed, std::uint64_t trial) {
    std::vector<Residue> entries(static_cast<std::size_t>(k) * width);
    detail::fill_trial(p, seed, trial, entries);
    return FpMatrix(p, k, width, std::move(entries));
}

Outcome random_reference(const Problem &problem, std::uint64_t trials, std::uint64_t seed) {
    Outcome out;
    for (std::uint64_t t = 0; t < trials; ++t) {
        consider(out, sample_trial(problem.p, problem.k, problem.width(), seed, t), t, problem.e, problem.duality);
    }
    return out;
}

}  // namespace addcodes::kernels
