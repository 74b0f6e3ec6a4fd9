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
#include <istream>
#include <sstream>

#include "addcodes/error.hpp"

namespace addcodes {

std::string_view to_string(DualityClass c) {
    switch (c) {
        case DualityClass::Symmetric: return "Symmetric";
        case DualityClass::SkewSymmetric: return "SkewSymmetric";
        case DualityClass::OtherNonSymmetric: return "OtherNonSymmetric";
    }
    return "?";
}

ClassFilter parse_class_filter(std::string_view text) {
    if (text == "all") return ClassFilter::All;
    if (text == "symmetric") return ClassFilter::Symmetric;
    if (text == "skew") return ClassFilter::SkewSymmetric;
    if (text == "other") return ClassFilter::OtherNonSymmetric;
    throw Error(ErrorKind::Parse, "class filter must be all|symmetric|skew|other");
}

DualityClass classify(const FpMatrix &k) {
    const std::uint32_t p = k.modulus();
    bool symmetric = true, skew = true;
    for (std::size_t i = 0; i < k.rows(); ++i) {
        if (k(i, i) != 0) skew = false;
        for (std::size_t j = 0; j < k.cols(); ++j) {
            if (k(i, j) != k(j, i)) symmetric = false;
            if ((k(i, j) + k(j, i)) % p != 0) skew = false;
        }
    }
    if (skew) return DualityClass::SkewSymmetric;
    if (symmetric) return DualityClass::Symmetric;
    return DualityClass::OtherNonSymmetric;
}

Duality::Duality(const FpMatrix &k, const FieldSpec &spec, std::string label)
    : spec_(spec), k_(k), label_(std::move(label)) {
    if (k.modulus() != spec.p) throw Error(ErrorKind::ModulusMismatch, "duality matrix over the wrong prime field");
    if (k.rows() != spec.e || k.cols() != spec.e) throw Error(ErrorKind::DimensionMismatch, "duality matrix must be e x e");
    if (rank(k) != spec.e) throw Error(ErrorKind::NotInvertible, "character map is not an isomorphism");
    class_ = classify(k);
}

Residue Duality::exponent(std::span<const Residue> x, std::span<const Residue> y) const {
    const std::uint32_t p = spec_.p;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < spec_.e; ++i) {
        if (x[i] == 0) continue;
        std::uint64_t inner = 0;
        for (std::size_t j = 0; j < spec_.e; ++j) inner += static_cast<std::uint64_t>(k_(i, j)) * y[j] % p;
        acc = (acc + x[i] * (inner % p)) % p;
    }
    return static_cast<Residue>(acc);
}

Residue char_exponent(const Duality &d, const GFElement &x, const GFElement &y) {
    if (!(x.spec() == d.spec()) || !(y.spec() == d.spec())) {
        throw Error(ErrorKind::SpecMismatch, "elements not over the duality's field");
    }
    return d.exponent(x.coords(), y.coords());
}

Residue vector_exponent(const Duality &d, const GFVector &a, const GFVector &b) {
    if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "vectors differ in length");
    if (!(a.spec() == d.spec()) || !(b.spec() == d.spec())) {
        throw Error(ErrorKind::SpecMismatch, "vectors not over the duality's field");
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += d.exponent(a[i].coords(), b[i].coords());
    return static_cast<Residue>(acc % d.spec().p);
}

Duality transpose(const Duality &d) {
    std::string label;
    if (d.label() == "D1") label = "D2";
    else if (d.label() == "D2") label = "D1";
    else if (d.label() == "M1") label = "M2";
    else if (d.label() == "M2") label = "M1";
    else if (d.label() == "A4") label = "A4";
    else if (!d.label().empty()) label = d.label() + "^T";
    return Duality(d.matrix().transpose(), d.spec(), label);
}

Duality named(std::string_view name) {
    const FieldSpec f9(3, 2, "w"), f4(2, 2, "v");
    if (name == "M1") return Duality(FpMatrix::from_rows(3, {{0, 1}, {2, 0}}), f9, "M1");
    if (name == "M2") return Duality(FpMatrix::from_rows(3, {{0, 2}, {1, 0}}), f9, "M2");
    if (name == "D1") return Duality(FpMatrix::from_rows(2, {{1, 1}, {0, 1}}), f4, "D1");
    if (name == "D2") return Duality(FpMatrix::from_rows(2, {{1, 0}, {1, 1}}), f4, "D2");
    if (name == "A4") return Duality(FpMatrix::from_rows(2, {{0, 1}, {1, 0}}), f4, "A4");
    throw Error(ErrorKind::UnknownName, "no named duality '" + std::string(name) + "'");
}

std::vector<std::string> named_dualities() { return {"M1", "M2", "D1", "D2", "A4"}; }

BigInt gl_order(std::uint32_t p, std::uint32_t e) {
    BigInt result = 1;
    const BigInt pe = boost::multiprecision::pow(BigInt(p), e);
    for (std::uint32_t i = 0; i < e; ++i) result *= pe - boost::multiprecision::pow(BigInt(p), i);
    return result;
}

namespace {

bool matches(ClassFilter filter, DualityClass c) {
    switch (filter) {
        case ClassFilter::All: return true;
        case ClassFilter::Symmetric: return c == DualityClass::Symmetric;
        case ClassFilter::SkewSymmetric: return c == DualityClass::SkewSymmetric;
        case ClassFilter::OtherNonSymmetric: return c == DualityClass::OtherNonSymmetric;
    }
    return false;
}

}  // namespace

void for_each_duality(const FieldSpec &spec, ClassFilter filter, const std::function<void(const Duality &)> &visit,
                      std::uint64_t bound) {
    if (gl_order(spec.p, spec.e) > bound) {
        throw Error(ErrorKind::TooLarge, "GL(" + std::to_string(spec.e) + "," + std::to_string(spec.p) +
                                             ") exceeds the enumeration bound");
    }
    const std::size_t cells = static_cast<std::size_t>(spec.e) * spec.e;
    std::vector<Residue> digits(cells, 0);
    while (true) {
        FpMatrix k(spec.p, spec.e, spec.e, digits);
        if (rank(k) == spec.e) {
            const DualityClass c = classify(k);
            if (matches(filter, c)) visit(Duality(k, spec));
        }
        // Odometer with the last entry least significant keeps the visit
        // order lexicographic in the row-major entries.
        std::size_t pos = cells;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < spec.p) break;
            digits[pos] = 0;
            if (pos == 0) return;
        }
        if (cells == 0) return;
    }
}

std::vector<Duality> enumerate_dualities(const FieldSpec &spec, ClassFilter filter, std::uint64_t bound) {
    std::vector<Duality> out;
    for_each_duality(spec, filter, [&](const Duality &d) { out.push_back(d); }, bound);
    return out;
}

namespace {

// p^a (p-1)(p^3-1)...(p^(2k-1)-1)
BigInt odd_power_product(std::uint32_t p, std::uint32_t k, std::uint32_t leading_exponent) {
    BigInt result = boost::multiprecision::pow(BigInt(p), leading_exponent);
    for (std::uint32_t i = 1; i <= k; ++i) result *= boost::multiprecision::pow(BigInt(p), 2 * i - 1) - 1;
    return result;
}

}  // namespace

BigInt count_symmetric(std::uint32_t p, std::uint32_t e) {
    if (e == 0) throw Error(ErrorKind::BadLength, "e must be at least 1");
    if (e % 2 == 1) {
        const std::uint32_t k = (e + 1) / 2;
        return odd_power_product(p, k, k * (k - 1));
    }
    const std::uint32_t k = e / 2;
    return odd_power_product(p, k, k * (k + 1));
}

BigInt count_skew(std::uint32_t p, std::uint32_t two_e) {
    if (two_e == 0 || two_e % 2 == 1) {
        throw Error(ErrorKind::OddDimension, "no duality of odd degree makes every element self-orthogonal");
    }
    const std::uint32_t e = two_e / 2;
    return odd_power_product(p, e, e * (e - 1));
}

CharacterTable character_table(const Duality &d, std::uint64_t bound) {
    const std::uint64_t q = d.spec().order();
    if (q > bound) throw Error(ErrorKind::TooLarge, "field too large for a full character table");
    CharacterTable t{d.spec(), static_cast<std::size_t>(q), std::vector<Residue>(q * q)};
    std::vector<GFElement> elems;
    elems.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) elems.push_back(GFElement::from_index(d.spec(), i));
    for (std::size_t x = 0; x < q; ++x) {
        for (std::size_t y = 0; y < q; ++y) t.exponents[x * q + y] = d.exponent(elems[x].coords(), elems[y].coords());
    }
    return t;
}

TableValidation validate_table(const CharacterTable &t) {
    const auto &spec = t.spec;
    const std::uint32_t p = spec.p;
    TableValidation result;
    if (t.order != spec.order() || t.exponents.size() != t.order * t.order) {
        result.diagnostics.push_back({0, 0, 0, 0, "table shape does not match p^e"});
        return result;
    }
    // Basis element e_i sits at index p^i.
    FpMatrix k(p, spec.e, spec.e);
    std::vector<std::size_t> basis(spec.e);
    for (std::size_t i = 0, idx = 1; i < spec.e; ++i, idx *= p) basis[i] = idx;
    for (std::size_t i = 0; i < spec.e; ++i) {
        for (std::size_t j = 0; j < spec.e; ++j) k.set(i, j, t.at(basis[i], basis[j]) % p);
    }
    std::vector<GFElement> elems;
    for (std::size_t i = 0; i < t.order; ++i) elems.push_back(GFElement::from_index(spec, i));
    for (std::size_t x = 0; x < t.order; ++x) {
        for (std::size_t y = 0; y < t.order; ++y) {
            std::uint64_t want = 0;
            for (std::size_t i = 0; i < spec.e; ++i) {
                for (std::size_t j = 0; j < spec.e; ++j) {
                    want += static_cast<std::uint64_t>(elems[x].coord(i)) * k(i, j) % p * elems[y].coord(j);
                }
            }
            const auto expected = static_cast<Residue>(want % p);
            const Residue found = t.at(x, y);
            if (found != expected) {
                std::ostringstream msg;
                msg << "cell (" << format_element(elems[x]) << "," << format_element(elems[y]) << ") is "
                    << render_cell(found % p, p) << " but additivity forces " << render_cell(expected, p);
                result.diagnostics.push_back({x, y, expected, found, msg.str()});
            }
        }
    }
    if (rank(k) != spec.e) {
        result.diagnostics.push_back({0, 0, 0, 0, "induced matrix is not invertible"});
        return result;
    }
    if (result.diagnostics.empty()) result.duality.emplace(k, spec);
    return result;
}

std::string render_cell(Residue exponent, std::uint32_t p) {
    if (exponent == 0) return "1";
    if (p == 2) return "-1";
    if (exponent == 1) return "a";
    return "a" + std::to_string(exponent);
}

std::string render_table(const CharacterTable &t) {
    std::ostringstream out;
    std::vector<std::string> labels;
    std::size_t width = 2;
    for (std::size_t i = 0; i < t.order; ++i) {
        labels.push_back(format_element(GFElement::from_index(t.spec, i)));
        width = std::max(width, labels.back().size());
    }
    auto pad = [&](const std::string &s) { return std::string(width + 1 - std::min(width, s.size()), ' ') + s; };
    out << pad("*");
    for (const auto &l : labels) out << pad(l);
    out << '\n';
    for (std::size_t x = 0; x < t.order; ++x) {
        out << pad(labels[x]);
        for (std::size_t y = 0; y < t.order; ++y) out << pad(render_cell(t.at(x, y), t.spec.p));
        out << '\n';
    }
    return out.str();
}

namespace {

Residue parse_cell(const std::string &cell, std::uint32_t p) {
    if (cell == "1") return 0;
    if (cell == "-1" && p == 2) return 1;
    if (cell == "a") return 1;
    if (cell.size() > 1 && cell[0] == 'a') {
        try {
            const unsigned long v = std::stoul(cell.substr(1));
            if (v < p) return static_cast<Residue>(v);
        } catch (const std::exception &) {
        }
    }
    throw Error(ErrorKind::Parse, "bad table cell '" + cell + "'");
}

}  // namespace

CharacterTable parse_table(std::istream &in) {
    std::string line;
    auto next = [&](std::string &out) {
        while (std::getline(in, out)) {
            const auto first = out.find_first_not_of(" \t\r");
            if (first != std::string::npos && out[first] != '#') return true;
        }
        return false;
    };
    if (!next(line)) throw Error(ErrorKind::Parse, "table needs a 'p e' header");
    std::istringstream header(line);
    long p = 0, e = 0;
    if (!(header >> p >> e) || p <= 0 || e <= 0) throw Error(ErrorKind::Parse, "table header must be 'p e'");
    CharacterTable t{FieldSpec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)), 0, {}};
    t.order = static_cast<std::size_t>(t.spec.order());
    if (t.order > kDefaultTableBound) throw Error(ErrorKind::TooLarge, "table too large");
    if (!next(line)) throw Error(ErrorKind::Parse, "missing column labels");
    t.exponents.assign(t.order * t.order, 0);
    for (std::size_t x = 0; x < t.order; ++x) {
        if (!next(line)) throw Error(ErrorKind::Parse, "table has too few rows");
        std::istringstream row(line);
        std::string label, cell;
        row >> label;
        for (std::size_t y = 0; y < t.order; ++y) {
            if (!(row >> cell)) throw Error(ErrorKind::Parse, "row " + label + " is too short");
            t.exponents[x * t.order + y] = parse_cell(cell, t.spec.p);
        }
    }
    return t;
}

Duality read_duality(std::istream &in) {
    long p = 0, e = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream header(line);
        if (!(header >> p >> e)) throw Error(ErrorKind::Parse, "duality file header must be 'p e'");
        break;
    }
    if (p <= 0 || e <= 0) throw Error(ErrorKind::Parse, "duality file header must be 'p e'");
    FieldSpec spec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
    FpMatrix k(spec.p, spec.e, spec.e);
    for (std::size_t i = 0; i < spec.e; ++i) {
        for (std::size_t j = 0; j < spec.e; ++j) {
            long v;
            if (!(in >> v)) throw Error(ErrorKind::Parse, "duality matrix is incomplete");
            if (v < 0 || v >= p) throw Error(ErrorKind::BadDigit, "duality entry not reduced mod p");
            k.set(i, j, v);
        }
    }
    return Duality(k, spec);
}

Duality resolve_duality(std::string_view reference) {
    if (reference.starts_with("name:")) return named(reference.substr(5));
    if (reference.starts_with("file:")) {
        std::ifstream in{std::string(reference.substr(5))};
        if (!in) throw Error(ErrorKind::Parse, "cannot open duality file " + std::string(reference.substr(5)));
        return read_duality(in);
    }
    throw Error(ErrorKind::Parse, "duality reference must be name:NAME or file:PATH");
}

}  // namespace addcodes
