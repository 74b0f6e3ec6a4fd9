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

#include "addcodes/code.hpp"

#include <algorithm>

#include "addcodes/error.hpp"
#include "addcodes/kernels.hpp"

namespace addcodes {

namespace {

void require_length(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::EmptyLength, "code length must be at least 1");
}

void require_same_space(const AdditiveCode &a, const AdditiveCode &b) {
    if (!(a.spec() == b.spec())) throw Error(ErrorKind::ShapeMismatch, "codes over different fields");
    if (a.length() != b.length()) throw Error(ErrorKind::ShapeMismatch, "codes of different lengths");
}

}  // namespace

FpMatrix canonical_generator(const FpMatrix &m) {
    const auto reduced = rref(m);
    FpMatrix out(m.modulus(), reduced.rank, m.cols());
    for (std::size_t i = 0; i < reduced.rank; ++i) {
        auto src = reduced.reduced.row(i);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

AdditiveCode AdditiveCode::from_rows(std::span<const GFVector> rows) {
    if (rows.empty()) throw Error(ErrorKind::RaggedRows, "cannot infer the ambient space of an empty row list");
    return from_rows(rows, rows.front().spec(), rows.front().size());
}

AdditiveCode AdditiveCode::from_rows(std::span<const GFVector> rows, const FieldSpec &spec, std::size_t n) {
    require_length(n);
    return AdditiveCode(spec, n, canonical_generator(expand(rows, spec, n)));
}

AdditiveCode AdditiveCode::from_matrix(const FpMatrix &m, const FieldSpec &spec) {
    if (m.modulus() != spec.p) throw Error(ErrorKind::ModulusMismatch, "matrix modulus differs from the field characteristic");
    if (m.cols() % spec.e != 0) throw Error(ErrorKind::BadWidth, "width not divisible by e");
    require_length(m.cols() / spec.e);
    return AdditiveCode(spec, m.cols() / spec.e, canonical_generator(m));
}

AdditiveCode AdditiveCode::zero(const FieldSpec &spec, std::size_t n) {
    require_length(n);
    return AdditiveCode(spec, n, FpMatrix(spec.p, 0, spec.e * n));
}

AdditiveCode AdditiveCode::full(const FieldSpec &spec, std::size_t n) {
    require_length(n);
    return AdditiveCode(spec, n, FpMatrix::identity(spec.p, spec.e * n));
}

std::vector<GFVector> AdditiveCode::generator_rows() const { return contract(gen_, spec_); }

BigInt AdditiveCode::size() const {
    BigInt s = 1;
    for (std::size_t i = 0; i < dimension(); ++i) s *= spec_.p;
    return s;
}

void AdditiveCode::for_each_codeword(const std::function<void(std::span<const Residue>)> &visit,
                                     std::uint64_t bound) const {
    if (size() > bound) throw Error(ErrorKind::TooLarge, "code has more codewords than the enumeration bound");
    const std::size_t k = dimension(), width = gen_.cols();
    const std::uint32_t p = spec_.p;
    std::vector<Residue> coeff(k, 0), word(width, 0);
    while (true) {
        visit(word);
        std::size_t i = 0;
        while (i < k && coeff[i] == p - 1) {
            coeff[i] = 0;
            auto row = gen_.row(i);
            for (std::size_t c = 0; c < width; ++c) word[c] = static_cast<Residue>((word[c] + row[c]) % p);
            ++i;
        }
        if (i == k) return;
        ++coeff[i];
        auto row = gen_.row(i);
        for (std::size_t c = 0; c < width; ++c) word[c] = static_cast<Residue>((word[c] + row[c]) % p);
    }
}

std::vector<GFVector> AdditiveCode::codewords(std::uint64_t bound) const {
    std::vector<GFVector> out;
    for_each_codeword([&](std::span<const Residue> w) { out.push_back(contract_row(w, spec_)); }, bound);
    return out;
}

bool AdditiveCode::contains(const GFVector &v) const {
    if (!(v.spec() == spec_)) throw Error(ErrorKind::SpecMismatch, "vector over a different field");
    if (v.size() != n_) throw Error(ErrorKind::ShapeMismatch, "vector length differs from the code length");
    const GFVector one[] = {v};
    const FpMatrix m = expand(one, spec_, n_);
    return contains(m.row(0));
}

bool AdditiveCode::contains(std::span<const Residue> expanded) const {
    if (expanded.size() != gen_.cols()) throw Error(ErrorKind::ShapeMismatch, "vector width differs from the code width");
    FpMatrix extended = gen_;
    extended.append_row(expanded);
    return rank(extended) == dimension();
}

int AdditiveCode::min_distance(int jobs) const {
    if (dimension() == 0) throw Error(ErrorKind::ZeroCode, "the zero code has no minimum distance");
    return kernels::min_weight_parallel(gen_, spec_.e, jobs);
}

AdditiveCode sum(const AdditiveCode &a, const AdditiveCode &b) {
    require_same_space(a, b);
    return AdditiveCode::from_matrix(a.generator().stacked(b.generator()), a.spec());
}

AdditiveCode intersection(const AdditiveCode &a, const AdditiveCode &b) {
    require_same_space(a, b);
    // Both codes are cut out by their Euclidean parity checks; the
    // intersection is cut out by the union of the checks.
    const FpMatrix checks = nullspace(a.generator()).stacked(nullspace(b.generator()));
    return AdditiveCode::from_matrix(nullspace(checks), a.spec());
}

AdditiveCode product(const AdditiveCode &a, const AdditiveCode &b) {
    if (!(a.spec() == b.spec())) throw Error(ErrorKind::SpecMismatch, "codes over different fields");
    const std::size_t wa = a.generator().cols(), wb = b.generator().cols();
    FpMatrix m(a.spec().p, a.dimension() + b.dimension(), wa + wb);
    for (std::size_t r = 0; r < a.dimension(); ++r) {
        auto src = a.generator().row(r);
        std::copy(src.begin(), src.end(), m.row(r).begin());
    }
    for (std::size_t r = 0; r < b.dimension(); ++r) {
        auto src = b.generator().row(r);
        std::copy(src.begin(), src.end(), m.row(a.dimension() + r).begin() + wa);
    }
    return AdditiveCode::from_matrix(m, a.spec());
}

}  // namespace addcodes
