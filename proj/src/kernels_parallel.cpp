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
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <vector>

#include "addcodes/error.hpp"
#include "addcodes/kernels.hpp"
#include "kernel_common.hpp"

namespace addcodes::kernels {

namespace {

// F_2 coordinates packed one per bit; bit c holds coordinate c.
struct BinaryOps {
    using Vec = std::uint64_t;

    std::uint32_t p = 2;
    std::uint32_t e, n, width;
    std::uint64_t starts = 0;
    std::uint64_t block_mask;
    std::vector<std::uint64_t> form;  // e-bit block x -> x^T K

    BinaryOps(std::uint32_t e_, std::uint32_t n_, const FpMatrix &k)
        : e(e_), n(n_), width(e_ * n_), block_mask((1ULL << e_) - 1), form(1ULL << e_, 0) {
        for (std::uint32_t j = 0; j < n; ++j) starts |= 1ULL << (j * e);
        for (std::uint64_t x = 0; x < form.size(); ++x) {
            std::uint64_t out = 0;
            for (std::uint32_t b = 0; b < e; ++b) {
                unsigned bit = 0;
                for (std::uint32_t a = 0; a < e; ++a) bit ^= ((x >> a) & 1) & k(a, b);
                out |= static_cast<std::uint64_t>(bit) << b;
            }
            form[x] = out;
        }
    }

    Vec zero() const { return 0; }
    void add(Vec &v, const Vec &r) const { v ^= r; }
    void add_scaled(Vec &v, const Vec &r, Residue c) const {
        if (c & 1) v ^= r;
    }
    void set_digit(Vec &v, std::uint32_t c, Residue d) const {
        v = (v & ~(1ULL << c)) | (static_cast<std::uint64_t>(d & 1) << c);
    }
    int weight(Vec v) const {
        std::uint64_t m = v;
        for (std::uint32_t s = 1; s < e; ++s) m |= v >> s;
        return std::popcount(m & starts);
    }
    Vec times_form(Vec v) const {
        Vec h = 0;
        for (std::uint32_t j = 0; j < n; ++j) h |= form[(v >> (j * e)) & block_mask] << (j * e);
        return h;
    }
    bool gram_invertible(const Vec *rows, std::uint32_t k) const {
        std::array<std::uint64_t, kMaxPackedWidth> g{};
        for (std::uint32_t i = 0; i < k; ++i) {
            const Vec h = times_form(rows[i]);
            std::uint64_t bits = 0;
            for (std::uint32_t j = 0; j < k; ++j) bits |= static_cast<std::uint64_t>(std::popcount(h & rows[j]) & 1) << j;
            g[i] = bits;
        }
        for (std::uint32_t col = 0; col < k; ++col) {
            std::uint32_t r = col;
            while (r < k && !((g[r] >> col) & 1)) ++r;
            if (r == k) return false;
            std::swap(g[r], g[col]);
            for (std::uint32_t i = col + 1; i < k; ++i) {
                if ((g[i] >> col) & 1) g[i] ^= g[col];
            }
        }
        return true;
    }
    Vec load(std::span<const Residue> row) const {
        Vec v = 0;
        for (std::uint32_t c = 0; c < width; ++c) v |= static_cast<std::uint64_t>(row[c] & 1) << c;
        return v;
    }
    void store(const Vec &v, std::span<Residue> out) const {
        for (std::uint32_t c = 0; c < width; ++c) out[c] = static_cast<Residue>((v >> c) & 1);
    }
};

// Odd characteristic: one residue per coordinate.
struct PrimeOps {
    struct Vec {
        std::array<Residue, kMaxPackedWidth> d{};
    };

    std::uint32_t p, e, n, width;
    std::vector<std::uint32_t> k;  // e x e

    PrimeOps(std::uint32_t p_, std::uint32_t e_, std::uint32_t n_, const FpMatrix &km)
        : p(p_), e(e_), n(n_), width(e_ * n_), k(km.entries().begin(), km.entries().end()) {}

    Vec zero() const { return {}; }
    void add(Vec &v, const Vec &r) const {
        for (std::uint32_t c = 0; c < width; ++c) {
            const std::uint32_t s = v.d[c] + r.d[c];
            v.d[c] = static_cast<Residue>(s >= p ? s - p : s);
        }
    }
    void add_scaled(Vec &v, const Vec &r, Residue c) const {
        for (std::uint32_t i = 0; i < width; ++i) {
            v.d[i] = static_cast<Residue>((v.d[i] + static_cast<std::uint64_t>(c) * r.d[i]) % p);
        }
    }
    void set_digit(Vec &v, std::uint32_t c, Residue d) const { v.d[c] = d; }
    int weight(const Vec &v) const {
        int w = 0;
        for (std::uint32_t j = 0; j < width; j += e) {
            for (std::uint32_t t = 0; t < e; ++t) {
                if (v.d[j + t]) {
                    ++w;
                    break;
                }
            }
        }
        return w;
    }
    Vec times_form(const Vec &v) const {
        Vec h{};
        for (std::uint32_t j = 0; j < width; j += e) {
            for (std::uint32_t b = 0; b < e; ++b) {
                std::uint64_t acc = 0;
                for (std::uint32_t a = 0; a < e; ++a) acc += static_cast<std::uint64_t>(v.d[j + a]) * k[a * e + b];
                h.d[j + b] = static_cast<Residue>(acc % p);
            }
        }
        return h;
    }
    bool gram_invertible(const Vec *rows, std::uint32_t kk) const {
        std::array<std::array<std::uint32_t, kMaxPackedWidth>, kMaxPackedWidth> g;
        for (std::uint32_t i = 0; i < kk; ++i) {
            const Vec h = times_form(rows[i]);
            for (std::uint32_t j = 0; j < kk; ++j) {
                std::uint64_t acc = 0;
                for (std::uint32_t c = 0; c < width; ++c) acc += static_cast<std::uint64_t>(h.d[c]) * rows[j].d[c];
                g[i][j] = static_cast<std::uint32_t>(acc % p);
            }
        }
        for (std::uint32_t col = 0; col < kk; ++col) {
            std::uint32_t r = col;
            while (r < kk && g[r][col] == 0) ++r;
            if (r == kk) return false;
            std::swap(g[r], g[col]);
            const std::uint64_t inv = inverse_mod(static_cast<Residue>(g[col][col]), p);
            for (std::uint32_t i = col + 1; i < kk; ++i) {
                if (g[i][col] == 0) continue;
                const std::uint64_t f = g[i][col] * inv % p;
                for (std::uint32_t c = col; c < kk; ++c) g[i][c] = static_cast<std::uint32_t>((g[i][c] + (p - f) * g[col][c]) % p);
            }
        }
        return true;
    }
    Vec load(std::span<const Residue> row) const {
        Vec v{};
        std::copy(row.begin(), row.begin() + width, v.d.begin());
        return v;
    }
    void store(const Vec &v, std::span<Residue> out) const { std::copy(v.d.begin(), v.d.begin() + width, out.begin()); }
};

// Walks the lower `low` coefficients of leading row `h` by a p-ary modular
// Gray code: each step adds exactly one row, so every word costs one vector
// add. Returns early with a weight below `prune_below`, or 1.
template <class Ops>
int gray_min(const Ops &ops, const typename Ops::Vec *rows, typename Ops::Vec v, std::uint32_t low, int best,
             int prune_below, const std::atomic<int> *shared = nullptr) {
    std::array<Residue, kMaxPackedWidth> digits{};
    auto note = [&](int w) {
        if (w > 0 && w < best) best = w;
    };
    note(ops.weight(v));
    std::uint64_t steps = 0;
    while (best > 1 && best >= prune_below) {
        std::uint32_t j = 0;
        while (j < low && digits[j] == ops.p - 1) digits[j++] = 0;
        if (j == low) break;
        ++digits[j];
        ops.add(v, rows[j]);
        note(ops.weight(v));
        if (shared && (++steps & 1023) == 0 && shared->load(std::memory_order_relaxed) <= 1) break;
    }
    return best;
}

template <class Ops>
int min_weight_rows(const Ops &ops, const typename Ops::Vec *rows, std::uint32_t k, int prune_below) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t h = 0; h < k; ++h) {
        best = gray_min(ops, rows, rows[h], h, best, prune_below);
        if (best <= 1 || best < prune_below) break;
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

template <class Ops>
int min_weight_tasks(const Ops &ops, const std::vector<typename Ops::Vec> &rows, int threads, int prune_below) {
    const std::uint32_t k = static_cast<std::uint32_t>(rows.size());
    if (k == 0) return 0;
    // Enough low digits for roughly 4096 words per task.
    std::uint32_t low_max = 0;
    for (std::uint64_t words = 1; words < 4096; words *= ops.p) ++low_max;

    struct Task {
        std::uint32_t h;
        std::uint64_t high;
    };
    std::vector<Task> tasks;
    for (std::uint32_t h = 0; h < k; ++h) {
        const std::uint32_t high_digits = h > low_max ? h - low_max : 0;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < high_digits; ++i) count *= ops.p;
        for (std::uint64_t v = 0; v < count; ++v) tasks.push_back({h, v});
    }

    std::atomic<int> shared{std::numeric_limits<int>::max()};
    const auto ntasks = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t t = 0; t < ntasks; ++t) {
        const int seen = shared.load(std::memory_order_relaxed);
        if (seen <= 1 || seen < prune_below) continue;
        const auto [h, high] = tasks[static_cast<std::size_t>(t)];
        const std::uint32_t low = std::min(h, low_max);
        auto v = rows[h];
        std::uint64_t rest = high;
        for (std::uint32_t i = low; i < h; ++i) {
            ops.add_scaled(v, rows[i], static_cast<Residue>(rest % ops.p));
            rest /= ops.p;
        }
        const int w = gray_min(ops, rows.data(), v, low, std::numeric_limits<int>::max(), prune_below, &shared);
        int cur = shared.load(std::memory_order_relaxed);
        while (w < cur && !shared.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
    }
    const int best = shared.load();
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

template <class Ops>
std::vector<typename Ops::Vec> load_rows(const Ops &ops, const FpMatrix &m) {
    std::vector<typename Ops::Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(ops.load(m.row(r)));
    return rows;
}

// Candidate bookkeeping shared by the exhaustive and random walkers.
template <class Ops>
struct Evaluator {
    const Ops &ops;
    std::uint32_t k;
    std::atomic<int> &shared_best;
    Outcome local;
    std::vector<Residue> witness;

    void evaluate(const typename Ops::Vec *rows, std::uint64_t index) {
        ++local.examined;
        if (!ops.gram_invertible(rows, k)) return;
        ++local.acd_count;
        const int floor = shared_best.load(std::memory_order_relaxed);
        const int d = min_weight_rows(ops, rows, k, floor);
        // A candidate at or above the shared floor has its exact distance;
        // anything below cannot win the merge.
        if (d < floor) return;
        if (local.best && d <= *local.best) return;
        local.best = d;
        local.best_index = index;
        witness.assign(static_cast<std::size_t>(k) * ops.width, 0);
        for (std::uint32_t r = 0; r < k; ++r) {
            ops.store(rows[r], std::span<Residue>(witness.data() + static_cast<std::size_t>(r) * ops.width, ops.width));
        }
        int cur = shared_best.load(std::memory_order_relaxed);
        while (d > cur && !shared_best.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
        }
    }
};

void merge(Outcome &into, const Outcome &part, const std::vector<Residue> &witness, std::uint32_t p, std::uint32_t k,
           std::uint32_t width) {
    into.examined += part.examined;
    into.acd_count += part.acd_count;
    if (!part.best) return;
    if (!into.best || *part.best > *into.best || (*part.best == *into.best && part.best_index < into.best_index)) {
        into.best = part.best;
        into.best_index = part.best_index;
        into.witness = FpMatrix(p, k, width, witness);
    }
}

struct PivotTable {
    std::uint32_t k = 0;
    std::vector<std::uint8_t> pivots;    // k per set
    std::vector<std::uint64_t> prefix;  // prefix[s] = first global index of set s
};

PivotTable pivot_table(std::uint32_t p, std::uint32_t width, std::uint32_t k) {
    PivotTable table;
    table.k = k;
    table.prefix.push_back(0);
    std::vector<std::uint32_t> piv(k);
    for (std::uint32_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::uint32_t free = 0;
        for (std::uint32_t r = 0; r < k; ++r) free += (width - 1 - piv[r]) - (k - 1 - r);
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < free; ++i) {
            if (count > std::numeric_limits<std::uint64_t>::max() / p) throw Error(ErrorKind::TooLarge, "subspace count overflows");
            count *= p;
        }
        if (table.prefix.back() > std::numeric_limits<std::uint64_t>::max() - count) {
            throw Error(ErrorKind::TooLarge, "subspace count overflows");
        }
        for (auto c : piv) table.pivots.push_back(static_cast<std::uint8_t>(c));
        table.prefix.push_back(table.prefix.back() + count);
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && piv[i] == width - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return table;
}

template <class Ops>
Outcome exhaustive_walk(const Ops &ops, const Problem &problem, int threads) {
    const std::uint32_t k = problem.k, width = problem.width(), p = problem.p;
    Outcome total;
    if (k > width) return total;
    const PivotTable table = pivot_table(p, width, k);
    const std::uint64_t count = table.prefix.back();
    const std::uint64_t sets = table.prefix.size() - 1;
    constexpr std::uint64_t kChunk = 1 << 12;
    const auto chunks = static_cast<std::int64_t>((count + kChunk - 1) / kChunk);
    std::atomic<int> shared_best{0};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
        const std::uint64_t start = static_cast<std::uint64_t>(chunk) * kChunk;
        const std::uint64_t end = std::min(count, start + kChunk);
        Evaluator<Ops> eval{ops, k, shared_best, {}, {}};

        std::uint64_t set = static_cast<std::uint64_t>(
            std::upper_bound(table.prefix.begin(), table.prefix.end(), start) - table.prefix.begin() - 1);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
        std::array<Residue, kMaxPackedWidth * kMaxPackedWidth / 2> digits{};
        std::array<typename Ops::Vec, kMaxPackedWidth> rows;

        auto setup = [&](std::uint64_t s, std::uint64_t offset) {
            const std::uint8_t *piv = table.pivots.data() + s * k;
            std::array<bool, kMaxPackedWidth> is_pivot{};
            for (std::uint32_t r = 0; r < k; ++r) is_pivot[piv[r]] = true;
            slots.clear();
            for (std::uint32_t r = 0; r < k; ++r) {
                rows[r] = ops.zero();
                ops.set_digit(rows[r], piv[r], 1);
                for (std::uint32_t c = piv[r] + 1u; c < width; ++c) {
                    if (!is_pivot[c]) slots.emplace_back(r, c);
                }
            }
            for (std::size_t i = 0; i < slots.size(); ++i) {
                digits[i] = static_cast<Residue>(offset % p);
                offset /= p;
                if (digits[i]) ops.set_digit(rows[slots[i].first], slots[i].second, digits[i]);
            }
        };
        setup(set, start - table.prefix[set]);

        for (std::uint64_t index = start; index < end; ++index) {
            eval.evaluate(rows.data(), index);
            if (index + 1 == end) break;
            std::size_t pos = 0;
            while (pos < slots.size() && digits[pos] == p - 1) {
                digits[pos] = 0;
                ops.set_digit(rows[slots[pos].first], slots[pos].second, 0);
                ++pos;
            }
            if (pos == slots.size()) {
                if (++set < sets) setup(set, 0);
                continue;
            }
            ++digits[pos];
            ops.set_digit(rows[slots[pos].first], slots[pos].second, digits[pos]);
        }
#pragma omp critical(addcodes_exhaustive_merge)
        merge(total, eval.local, eval.witness, p, k, width);
    }
    return total;
}

template <class Ops>
Outcome random_walk(const Ops &ops, const Problem &problem, std::uint64_t trials, std::uint64_t seed, int threads) {
    const std::uint32_t k = problem.k, width = problem.width(), p = problem.p;
    Outcome total;
    constexpr std::uint64_t kChunk = 1 << 10;
    const auto chunks = static_cast<std::int64_t>((trials + kChunk - 1) / kChunk);
    std::atomic<int> shared_best{0};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
        const std::uint64_t start = static_cast<std::uint64_t>(chunk) * kChunk;
        const std::uint64_t end = std::min(trials, start + kChunk);
        Evaluator<Ops> eval{ops, k, shared_best, {}, {}};
        std::vector<Residue> buffer(static_cast<std::size_t>(k) * width);
        std::array<typename Ops::Vec, kMaxPackedWidth> rows;
        for (std::uint64_t t = start; t < end; ++t) {
            detail::fill_trial(p, seed, t, buffer);
            for (std::uint32_t r = 0; r < k; ++r) {
                rows[r] = ops.load(std::span<const Residue>(buffer.data() + static_cast<std::size_t>(r) * width, width));
            }
            eval.evaluate(rows.data(), t);
        }
#pragma omp critical(addcodes_random_merge)
        merge(total, eval.local, eval.witness, p, k, width);
    }
    return total;
}

void check_problem(const Problem &problem) {
    if (problem.width() > kMaxPackedWidth) {
        throw Error(ErrorKind::TooLarge, "packed kernels support at most 64 F_p coordinates");
    }
    if (problem.k == 0) throw Error(ErrorKind::ZeroCode, "search needs k >= 1");
    if (problem.duality.rows() != problem.e || problem.duality.cols() != problem.e || problem.duality.modulus() != problem.p) {
        throw Error(ErrorKind::DimensionMismatch, "duality matrix does not match the problem's field");
    }
}

}  // namespace

int min_weight_parallel(const FpMatrix &gen, std::uint32_t e, int jobs, int prune_below) {
    if (gen.rows() == 0) return 0;
    if (gen.cols() > kMaxPackedWidth) return min_weight_reference(gen, e);
    const std::uint32_t n = static_cast<std::uint32_t>(gen.cols() / e);
    const int threads = resolve_jobs(jobs);
    if (gen.modulus() == 2) {
        BinaryOps ops(e, n, FpMatrix::identity(2, e));
        return min_weight_tasks(ops, load_rows(ops, gen), threads, prune_below);
    }
    PrimeOps ops(gen.modulus(), e, n, FpMatrix::identity(gen.modulus(), e));
    return min_weight_tasks(ops, load_rows(ops, gen), threads, prune_below);
}

Outcome exhaustive_parallel(const Problem &problem, int jobs) {
    check_problem(problem);
    const int threads = resolve_jobs(jobs);
    if (problem.p == 2) return exhaustive_walk(BinaryOps(problem.e, problem.n, problem.duality), problem, threads);
    return exhaustive_walk(PrimeOps(problem.p, problem.e, problem.n, problem.duality), problem, threads);
}

Outcome random_parallel(const Problem &problem, std::uint64_t trials, std::uint64_t seed, int jobs) {
    check_problem(problem);
    const int threads = resolve_jobs(jobs);
    if (problem.p == 2) return random_walk(BinaryOps(problem.e, problem.n, problem.duality), problem, trials, seed, threads);
    return random_walk(PrimeOps(problem.p, problem.e, problem.n, problem.duality), problem, trials, seed, threads);
}

}  // namespace addcodes::kernels
