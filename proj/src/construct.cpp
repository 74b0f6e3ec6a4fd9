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

#include "addcodes/error.hpp"
#include "addcodes/ortho.hpp"

namespace addcodes {

namespace {

ConstructionReport report(const FieldSpec &spec, std::size_t n, std::vector<GFVector> rows, std::optional<int> distance,
                          std::string source) {
    AdditiveCode code = AdditiveCode::from_rows(rows, spec, n);
    return ConstructionReport{std::move(code), std::move(rows), distance, true, std::move(source), true};
}

ConstructionReport report_of(const AdditiveCode &code, std::optional<int> distance, std::string source) {
    return ConstructionReport{code, code.generator_rows(), distance, true, std::move(source), true};
}

GFVector repeated(const FieldSpec &spec, std::size_t n, const GFElement &x) {
    return GFVector(spec, std::vector<GFElement>(n, x));
}

GFVector with_tail(const FieldSpec &spec, std::size_t n, const GFElement &body, const GFElement &tail) {
    std::vector<GFElement> v(n, body);
    v.back() = tail;
    return GFVector(spec, std::move(v));
}

bool is_skew(const Duality &d) { return d.cls() == DualityClass::SkewSymmetric; }

void require_skew(const Duality &d) {
    if (!is_skew(d)) throw Error(ErrorKind::Unsupported, "construction requires a duality with all elements self-orthogonal");
}

enum class Quaternary { D1, D2, A4 };

Quaternary quaternary_kind(const Duality &d) {
    for (auto [name, kind] : {std::pair{"D1", Quaternary::D1}, {"D2", Quaternary::D2}, {"A4", Quaternary::A4}}) {
        if (d == named(name)) return kind;
    }
    throw Error(ErrorKind::Unsupported, "quaternary constructions need D1, D2 or A4");
}

// Two rows of full weight whose Gram matrix is invertible under D1 / D2:
// (1..1), (v..v) for odd n, and the same with the last entries swapped for
// even n.
std::vector<GFVector> d_pair_rows(const FieldSpec &spec, std::size_t n) {
    const auto one = GFElement::from_index(spec, 1), nu = GFElement::from_index(spec, 2);
    if (n % 2 == 1) return {repeated(spec, n, one), repeated(spec, n, nu)};
    return {with_tail(spec, n, one, nu), with_tail(spec, n, nu, one)};
}

}  // namespace

std::pair<GFElement, GFElement> find_nonorthogonal_pair(const Duality &d) {
    const FieldSpec &spec = d.spec();
    const std::uint64_t q = spec.order();
    for (std::uint64_t i = 1; i < q; ++i) {
        const auto x = GFElement::from_index(spec, i);
        for (std::uint64_t j = 1; j < q; ++j) {
            const auto y = GFElement::from_index(spec, j);
            if (char_exponent(d, x, y) != 0) return {x, y};
        }
    }
    throw Error(ErrorKind::NoSuchPair, "every pair of elements is orthogonal");
}

std::pair<GFElement, GFElement> find_orthogonal_independent_pair(const Duality &d) {
    const FieldSpec &spec = d.spec();
    const std::uint64_t q = spec.order();
    for (std::uint64_t i = 1; i < q; ++i) {
        const auto a = GFElement::from_index(spec, i);
        for (std::uint64_t j = 1; j < q; ++j) {
            const auto b = GFElement::from_index(spec, j);
            bool dependent = false;
            for (Residue c = 0; c < spec.p && !dependent; ++c) dependent = a.scaled(c) == b;
            if (!dependent && char_exponent(d, a, b) == 0) return {a, b};
        }
    }
    throw Error(ErrorKind::NoSuchPair, "no independent orthogonal pair exists for this duality");
}

ConstructionReport construct_length1(const Duality &d) {
    const FieldSpec &spec = d.spec();
    const std::uint64_t q = spec.order();
    for (std::uint64_t i = 1; i < q; ++i) {
        const auto x = GFElement::from_index(spec, i);
        if (char_exponent(d, x, x) != 0) {
            auto r = report(spec, 1, {GFVector(spec, {x})}, 1, "length one, non-self-orthogonal element");
            r.nontrivial = spec.e > 1;
            return r;
        }
    }
    const auto [x, y] = find_nonorthogonal_pair(d);
    auto r = report(spec, 1, {GFVector(spec, {x}), GFVector(spec, {y})}, 1, "length one, non-orthogonal pair");
    r.nontrivial = spec.e > 2;
    return r;
}

ConstructionReport construct_acd1(const Duality &d, std::span<const GFVector> rows) {
    require_skew(d);
    if (rows.empty() || rows.size() % 2 != 0) throw Error(ErrorKind::TemplateViolation, "template needs an even, nonzero row count");
    const FpMatrix g = gram_of_rows(rows, d);
    const Residue common = g(0, 1);
    if (common == 0) throw Error(ErrorKind::TemplateViolation, "rows 0 and 1 are orthogonal");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (g(i, j) != common) {
                throw Error(ErrorKind::TemplateViolation,
                            "rows " + std::to_string(i) + " and " + std::to_string(j) + " break the common exponent");
            }
        }
    }
    return report(d.spec(), rows.front().size(), {rows.begin(), rows.end()}, std::nullopt, "uniform pairwise exponent");
}

ConstructionReport construct_acd2(const Duality &d, std::span<const GFVector> rows) {
    require_skew(d);
    if (rows.empty() || rows.size() % 2 != 0) throw Error(ErrorKind::TemplateViolation, "template needs an even, nonzero row count");
    const FpMatrix g = gram_of_rows(rows, d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const bool paired = i % 2 == 0 && j == i + 1;
            if (paired != (g(i, j) != 0)) {
                throw Error(ErrorKind::TemplateViolation, "rows " + std::to_string(i) + " and " + std::to_string(j) +
                                                              (paired ? " form a pair but are orthogonal"
                                                                      : " lie in different pairs but are not orthogonal"));
            }
        }
    }
    return report(d.spec(), rows.front().size(), {rows.begin(), rows.end()}, std::nullopt, "paired block exponents");
}

ConstructionReport construct_bound(const Duality &d, std::size_t n, std::size_t s) {
    require_skew(d);
    if (s == 0 || s > n) throw Error(ErrorKind::BadLength, "pair count must satisfy 1 <= s <= n");
    const FieldSpec &spec = d.spec();
    const std::size_t m = n / s;
    const auto [x, y] = find_nonorthogonal_pair(d);

    // The tail column of each block, used when m copies of (x, y) would
    // multiply to exponent 0.
    std::optional<std::pair<GFElement, GFElement>> tail;
    std::string source = "block construction, case 1";
    if (spec.p != 2 && m % spec.p == 0) {
        tail.emplace(y, x);
        source = "block construction, case 2 (swapped tail)";
    } else if (spec.p == 2 && m % 2 == 0) {
        if (spec.e <= 2) {
            throw Error(ErrorKind::Unsupported, "even block width over F_4 has no orthogonal pair for the tail column");
        }
        tail.emplace(find_orthogonal_independent_pair(d));
        source = "block construction, case 2 (orthogonal tail)";
    }

    std::vector<GFVector> rows;
    const auto zero = GFElement::zero(spec);
    for (std::size_t b = 0; b < s; ++b) {
        std::vector<GFElement> first(n, zero), second(n, zero);
        for (std::size_t j = 0; j < m; ++j) {
            const bool last = tail && j + 1 == m;
            first[b * m + j] = last ? tail->first : x;
            second[b * m + j] = last ? tail->second : y;
        }
        rows.emplace_back(spec, std::move(first));
        rows.emplace_back(spec, std::move(second));
    }
    return report(spec, n, std::move(rows), static_cast<int>(m), std::move(source));
}

ConstructionReport construct_n_2n2(const Duality &d, std::size_t n) {
    if (n < 2) throw Error(ErrorKind::Unsupported, "needs n >= 2");
    const FieldSpec &spec = d.spec();
    std::vector<GFVector> pair;
    if (is_skew(d)) {
        if (spec.e != 2) throw Error(ErrorKind::Unsupported, "skew case is defined over F_{p^2} only");
        const auto x1 = GFElement::from_index(spec, 1), x2 = GFElement::from_index(spec, spec.p);
        if (n % spec.p != 0) {
            pair = {repeated(spec, n, x1), repeated(spec, n, x2)};
        } else if (spec.p != 2) {
            pair = {with_tail(spec, n, x1, x2), with_tail(spec, n, x2, x1)};
        } else {
            throw Error(ErrorKind::Unsupported, "over F_4 with a skew duality no full-weight two-row ACD code exists for even n");
        }
    } else {
        quaternary_kind(d);
        pair = d_pair_rows(spec, n);
    }
    const AdditiveCode inner = AdditiveCode::from_rows(pair, spec, n);
    return report_of(dual(inner, transpose(d)), 2, "dual of a full-weight two-row ACD code");
}

ConstructionReport construct_f4(const Duality &d, std::size_t n, std::size_t k) {
    const Quaternary kind = quaternary_kind(d);
    if (n == 0) throw Error(ErrorKind::EmptyLength, "code length must be at least 1");
    const FieldSpec &spec = d.spec();
    const auto zero = GFElement::zero(spec), one = GFElement::from_index(spec, 1), nu = GFElement::from_index(spec, 2);
    const int ni = static_cast<int>(n);

    if (kind == Quaternary::A4) {
        if (k == 2) {
            if (n % 2 == 1) return report(spec, n, {repeated(spec, n, one), repeated(spec, n, nu)}, ni, "two repeated rows");
            return report(spec, n, {with_tail(spec, n, one, zero), with_tail(spec, n, nu, zero)}, ni - 1,
                          "two repeated rows, zero tail");
        }
        if (k == 2 * n - 2 && n >= 2) return construct_n_2n2(d, n);
        throw Error(ErrorKind::UnsupportedK, "a skew duality admits only even-rank ACD codes with k = 2 or 2n-2 here");
    }

    if (k == 1) {
        if (n % 2 == 1) return report(spec, n, {repeated(spec, n, one)}, ni, "all-ones row");
        return report(spec, n, {with_tail(spec, n, one, zero)}, ni - 1, "all-ones row, zero tail");
    }
    if (k == 2) return report(spec, n, d_pair_rows(spec, n), ni, "two full-weight rows");
    if (k == 2 * n - 1) {
        const ConstructionReport base = construct_f4(d, n, 1);
        return report_of(dual(base.code, transpose(d)), 1, "dual of a rank-one ACD code");
    }
    if (k == 2 * n - 2) return construct_n_2n2(d, n);
    throw Error(ErrorKind::UnsupportedK, "quaternary constructions cover k = 1, 2, 2n-2 and 2n-1");
}

}  // namespace addcodes
