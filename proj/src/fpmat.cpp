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
#include "addcodes/fpmat.hpp"

#include <sstream>
#include <utility>

#include "addcodes/error.hpp"

namespace addcodes {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Residue inverse_mod(Residue a, std::uint32_t p) {
    if (a % p == 0) throw Error(ErrorKind::Singular, "zero has no inverse");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<Residue>(result);
}

namespace {

void check_modulus(std::uint32_t p) {
    if (p > kMaxPrime || !is_prime(p)) {
        throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not a supported prime");
    }
}

Residue reduce(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Residue>(r);
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_modulus(p);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_modulus(p);
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    }
    for (Residue v : data_) {
        if (v >= p) throw Error(ErrorKind::BadDigit, "entry not reduced mod p");
    }
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    std::vector<Residue> entries;
    entries.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols) throw Error(ErrorKind::RaggedRows, "rows differ in length");
        for (long v : r) entries.push_back(reduce(v, p));
    }
    return FpMatrix(p, rows.size(), cols, std::move(entries));
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Residue FpMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(ErrorKind::DimensionMismatch, "index out of range");
    return data_[r * cols_ + c];
}

void FpMatrix::set(std::size_t r, std::size_t c, long value) {
    if (r >= rows_ || c >= cols_) throw Error(ErrorKind::DimensionMismatch, "index out of range");
    data_[r * cols_ + c] = reduce(value, p_);
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    }
    return t;
}

FpMatrix FpMatrix::stacked(const FpMatrix &below) const {
    if (below.p_ != p_) throw Error(ErrorKind::ModulusMismatch, "cannot stack matrices over different fields");
    if (below.cols_ != cols_) throw Error(ErrorKind::DimensionMismatch, "cannot stack matrices of different widths");
    FpMatrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

void FpMatrix::append_row(std::span<const Residue> values) {
    if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row width mismatch");
    for (Residue v : values) {
        if (v >= p_) throw Error(ErrorKind::BadDigit, "entry not reduced mod p");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool FpMatrix::is_zero() const {
    for (Residue v : data_) {
        if (v != 0) return false;
    }
    return true;
}

std::string FpMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << data_[r * cols_ + c];
        }
        out << '\n';
    }
    return out.str();
}

RrefResult rref(const FpMatrix &m) {
    const std::uint32_t p = m.modulus();
    RrefResult result{m, 0, {}};
    FpMatrix &a = result.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < a.rows() && a(found, col) == 0) ++found;
        if (found == a.rows()) continue;
        if (found != pivot_row) {
            auto r1 = a.row(found), r2 = a.row(pivot_row);
            std::swap_ranges(r1.begin(), r1.end(), r2.begin());
        }
        auto prow = a.row(pivot_row);
        const std::uint64_t inv = inverse_mod(prow[col], p);
        for (auto &v : prow) v = static_cast<Residue>(v * inv % p);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            auto row = a.row(r);
            const std::uint64_t factor = row[col];
            if (factor == 0) continue;
            for (std::size_t c = col; c < a.cols(); ++c) {
                row[c] = static_cast<Residue>((row[c] + (p - factor) * prow[c]) % p);
            }
        }
        result.pivot_columns.push_back(col);
        ++pivot_row;
    }
    result.rank = pivot_row;
    return result;
}

std::size_t rank(const FpMatrix &m) { return rref(m).rank; }

FpMatrix nullspace(const FpMatrix &m) {
    const std::uint32_t p = m.modulus();
    const auto [reduced, r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    FpMatrix basis(p, 0, m.cols());
    std::vector<Residue> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r; ++i) {
            v[pivots[i]] = static_cast<Residue>((p - reduced(i, free)) % p);
        }
        basis.append_row(v);
    }
    auto canonical = rref(basis);
    FpMatrix out(p, canonical.rank, m.cols());
    for (std::size_t i = 0; i < canonical.rank; ++i) {
        auto src = canonical.reduced.row(i);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

FpMatrix invert(const FpMatrix &m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "only square matrices are invertible");
    const std::size_t n = m.rows();
    const std::uint32_t p = m.modulus();
    FpMatrix aug(p, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
        aug.set(i, n + i, 1);
    }
    const auto reduced = rref(aug);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= reduced.pivot_columns.size() || reduced.pivot_columns[i] != i) {
            throw Error(ErrorKind::Singular, "matrix has rank below its dimension");
        }
    }
    FpMatrix inv(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, reduced.reduced(i, n + j));
    }
    return inv;
}

FpMatrix mat_mul(const FpMatrix &a, const FpMatrix &b) {
    if (a.modulus() != b.modulus()) throw Error(ErrorKind::ModulusMismatch, "operands over different fields");
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
    const std::uint32_t p = a.modulus();
    std::vector<Residue> out(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) {
                acc = (acc + static_cast<std::uint64_t>(a(i, t)) * b(t, j)) % p;
            }
            out[i * b.cols() + j] = static_cast<Residue>(acc);
        }
    }
    return FpMatrix(p, a.rows(), b.cols(), std::move(out));
}

FpMatrix block_diagonal(const FpMatrix &k, std::size_t copies) {
    FpMatrix out(k.modulus(), k.rows() * copies, k.cols() * copies);
    for (std::size_t b = 0; b < copies; ++b) {
        for (std::size_t i = 0; i < k.rows(); ++i) {
            for (std::size_t j = 0; j < k.cols(); ++j) out.set(b * k.rows() + i, b * k.cols() + j, k(i, j));
        }
    }
    return out;
}

BigInt gaussian_binomial(unsigned n, unsigned k, std::uint32_t p) {
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(BigInt(p), n - i) - 1;
        den *= boost::multiprecision::pow(BigInt(p), i + 1) - 1;
    }
    return num / den;
}

}  // namespace addcodes
