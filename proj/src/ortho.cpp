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

#include "addcodes/ortho.hpp"

#include <stdexcept>

#include "addcodes/error.hpp"

namespace addcodes {

namespace {

void require_spec(const FieldSpec &spec, const Duality &d) {
    if (!(spec == d.spec())) throw Error(ErrorKind::SpecMismatch, "code and duality are over different fields");
}

}  // namespace

AdditiveCode dual(const AdditiveCode &c, const Duality &d) {
    require_spec(c.spec(), d);
    const FpMatrix checks = mat_mul(c.generator(), block_diagonal(d.matrix().transpose(), c.length()));
    return AdditiveCode::from_matrix(nullspace(checks), c.spec());
}

FpMatrix gram_of_rows(const FpMatrix &rows, const Duality &d) {
    if (rows.cols() % d.spec().e != 0) throw Error(ErrorKind::BadWidth, "width not divisible by e");
    if (rows.modulus() != d.spec().p) throw Error(ErrorKind::SpecMismatch, "rows and duality over different fields");
    const FpMatrix form = block_diagonal(d.matrix(), rows.cols() / d.spec().e);
    return mat_mul(mat_mul(rows, form), rows.transpose());
}

FpMatrix gram_of_rows(std::span<const GFVector> rows, const Duality &d) {
    if (rows.empty()) return FpMatrix(d.spec().p, 0, 0);
    for (const auto &r : rows) require_spec(r.spec(), d);
    return gram_of_rows(expand(rows), d);
}

FpMatrix gram(const AdditiveCode &c, const Duality &d) {
    require_spec(c.spec(), d);
    return gram_of_rows(c.generator(), d);
}

std::size_t intersection_dimension(const AdditiveCode &c, const Duality &d) {
    return intersection(c, dual(c, d)).dimension();
}

AcdVerdict is_acd(const AdditiveCode &c, const Duality &d, bool cross_check) {
    AcdVerdict verdict;
    verdict.gram_rank = rank(gram(c, d));
    verdict.acd = verdict.gram_rank == c.dimension();
    if (cross_check) {
        verdict.intersection_dim = intersection_dimension(c, d);
        if ((*verdict.intersection_dim == 0) != verdict.acd) {
            throw std::logic_error("Gram criterion and intersection oracle disagree");
        }
    }
    return verdict;
}

bool is_self_orthogonal(const AdditiveCode &c, const Duality &d) {
    const AdditiveCode dc = dual(c, d);
    return sum(c, dc) == dc;
}

bool is_self_dual(const AdditiveCode &c, const Duality &d) { return dual(c, d) == c; }

bool all_self_orthogonal_elements(const Duality &d) {
    const FieldSpec &spec = d.spec();
    const FpMatrix &k = d.matrix();
    if (spec.e <= 12 && spec.order() <= kDefaultTableBound) {
        for (std::uint64_t i = 0; i < spec.order(); ++i) {
            const auto x = GFElement::from_index(spec, i);
            if (char_exponent(d, x, x) != 0) return false;
        }
        return true;
    }
    // x^T K x vanishes identically iff K has zero diagonal and K + K^T = 0.
    for (std::size_t i = 0; i < spec.e; ++i) {
        if (k(i, i) != 0) return false;
        for (std::size_t j = 0; j < spec.e; ++j) {
            if ((k(i, j) + k(j, i)) % spec.p != 0) return false;
        }
    }
    return true;
}

bool acd_length1(const GFElement &x, const Duality &d) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "the zero element generates the zero code");
    return char_exponent(d, x, x) != 0;
}

}  // namespace addcodes
