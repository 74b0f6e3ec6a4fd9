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

#include "addcodes/gf.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "addcodes/error.hpp"

namespace addcodes {

FieldSpec::FieldSpec(std::uint32_t prime, std::uint32_t degree, std::string symbol)
    : p(prime), e(degree), basis_symbol(std::move(symbol)) {
    if (prime > kMaxPrime || !is_prime(prime)) {
        throw Error(ErrorKind::NotPrime, "characteristic " + std::to_string(prime) + " is not a supported prime");
    }
    if (degree == 0) throw Error(ErrorKind::BadLength, "extension degree must be at least 1");
}

std::uint64_t FieldSpec::order() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > std::numeric_limits<std::uint64_t>::max() / p) throw Error(ErrorKind::TooLarge, "field order overflows");
        q *= p;
    }
    return q;
}

GFElement::GFElement(const FieldSpec &spec, std::vector<Residue> coords) : spec_(spec), coords_(std::move(coords)) {
    if (coords_.size() != spec_.e) throw Error(ErrorKind::BadLength, "element needs exactly e coordinates");
    for (Residue c : coords_) {
        if (c >= spec_.p) throw Error(ErrorKind::BadDigit, "coordinate not below p");
    }
}

GFElement GFElement::zero(const FieldSpec &spec) { return GFElement(spec, std::vector<Residue>(spec.e, 0)); }

GFElement GFElement::from_index(const FieldSpec &spec, std::uint64_t index) {
    if (index >= spec.order()) throw Error(ErrorKind::BadDigit, "element index out of range");
    std::vector<Residue> coords(spec.e);
    for (auto &c : coords) {
        c = static_cast<Residue>(index % spec.p);
        index /= spec.p;
    }
    return GFElement(spec, std::move(coords));
}

std::uint64_t GFElement::index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = coords_.size(); i-- > 0;) idx = idx * spec_.p + coords_[i];
    return idx;
}

bool GFElement::is_zero() const {
    for (Residue c : coords_) {
        if (c) return false;
    }
    return true;
}

GFElement GFElement::operator+(const GFElement &other) const {
    if (!(spec_ == other.spec_)) throw Error(ErrorKind::SpecMismatch, "adding elements of different fields");
    std::vector<Residue> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Residue>((coords_[i] + other.coords_[i]) % spec_.p);
    return GFElement(spec_, std::move(out));
}

GFElement GFElement::scaled(Residue c) const {
    std::vector<Residue> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<Residue>(static_cast<std::uint64_t>(coords_[i]) * c % spec_.p);
    }
    return GFElement(spec_, std::move(out));
}

GFVector::GFVector(const FieldSpec &spec, std::vector<GFElement> entries) : spec_(spec), entries_(std::move(entries)) {
    for (const auto &x : entries_) {
        if (!(x.spec() == spec_)) throw Error(ErrorKind::MixedSpecs, "vector entries from different fields");
    }
}

GFVector GFVector::zero(const FieldSpec &spec, std::size_t n) {
    return GFVector(spec, std::vector<GFElement>(n, GFElement::zero(spec)));
}

std::size_t GFVector::weight() const {
    std::size_t w = 0;
    for (const auto &x : entries_) w += !x.is_zero();
    return w;
}

GFElement parse_element(std::string_view text, const FieldSpec &spec) {
    if (spec.p > 10) throw Error(ErrorKind::BadDigit, "digit strings need p <= 10");
    if (text.size() != spec.e) {
        throw Error(ErrorKind::BadLength, "expected " + std::to_string(spec.e) + " digits in '" + std::string(text) + "'");
    }
    std::vector<Residue> coords(spec.e);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '9' || static_cast<std::uint32_t>(ch - '0') >= spec.p) {
            throw Error(ErrorKind::BadDigit, "digit '" + std::string(1, ch) + "' is not below " + std::to_string(spec.p));
        }
        coords[i] = static_cast<Residue>(ch - '0');
    }
    return GFElement(spec, std::move(coords));
}

std::string format_element(const GFElement &x) {
    std::string out;
    out.reserve(x.coords().size());
    for (Residue c : x.coords()) out.push_back(static_cast<char>('0' + c));
    return out;
}

std::string display_element(const GFElement &x) {
    std::string out;
    const auto &sym = x.spec().basis_symbol;
    for (std::size_t i = x.coords().size(); i-- > 0;) {
        const Residue c = x.coords()[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += sym;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

GFVector parse_vector(std::span<const std::string> tokens, const FieldSpec &spec) {
    std::vector<GFElement> entries;
    entries.reserve(tokens.size());
    for (const auto &t : tokens) entries.push_back(parse_element(t, spec));
    return GFVector(spec, std::move(entries));
}

std::string format_vector(const GFVector &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += format_element(v[i]);
    }
    return out;
}

FpMatrix expand(std::span<const GFVector> rows, const FieldSpec &spec, std::size_t n) {
    FpMatrix m(spec.p, rows.size(), spec.e * n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto &row = rows[r];
        if (!(row.spec() == spec)) throw Error(ErrorKind::MixedSpecs, "rows from different fields");
        if (row.size() != n) throw Error(ErrorKind::RaggedRows, "rows differ in length");
        auto out = m.row(r);
        for (std::size_t j = 0; j < n; ++j) {
            auto coords = row[j].coords();
            std::copy(coords.begin(), coords.end(), out.begin() + j * spec.e);
        }
    }
    return m;
}

FpMatrix expand(std::span<const GFVector> rows) {
    if (rows.empty()) throw Error(ErrorKind::RaggedRows, "cannot infer shape of an empty row list");
    return expand(rows, rows.front().spec(), rows.front().size());
}

GFVector contract_row(std::span<const Residue> row, const FieldSpec &spec) {
    if (row.size() % spec.e != 0) throw Error(ErrorKind::BadWidth, "width not divisible by e");
    std::vector<GFElement> entries;
    entries.reserve(row.size() / spec.e);
    for (std::size_t j = 0; j < row.size(); j += spec.e) {
        entries.emplace_back(spec, std::vector<Residue>(row.begin() + j, row.begin() + j + spec.e));
    }
    return GFVector(spec, std::move(entries));
}

std::vector<GFVector> contract(const FpMatrix &m, const FieldSpec &spec) {
    if (m.modulus() != spec.p) throw Error(ErrorKind::BadWidth, "matrix modulus differs from the field characteristic");
    if (m.cols() % spec.e != 0) throw Error(ErrorKind::BadWidth, "width not divisible by e");
    std::vector<GFVector> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(contract_row(m.row(r), spec));
    return out;
}

namespace {

bool next_content_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

GeneratorFile read_generator(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "generator file has no header");
    std::istringstream header(line);
    long p = 0, e = 0, n = 0, m = 0;
    if (!(header >> p >> e >> n >> m) || p <= 0 || e <= 0 || n < 0 || m < 0) {
        throw Error(ErrorKind::Parse, "header must be 'p e n m'");
    }
    GeneratorFile file{FieldSpec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)),
                       static_cast<std::size_t>(n), {}};
    if (n == 0) throw Error(ErrorKind::EmptyLength, "code length must be positive");
    for (long r = 0; r < m; ++r) {
        if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " rows");
        std::istringstream row(line);
        std::vector<std::string> tokens;
        for (std::string t; row >> t;) tokens.push_back(t);
        if (tokens.size() != file.n) throw Error(ErrorKind::RaggedRows, "row " + std::to_string(r + 1) + " has wrong length");
        file.rows.push_back(parse_vector(tokens, file.spec));
    }
    return file;
}

GeneratorFile read_generator_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    return read_generator(in);
}

void write_generator(std::ostream &out, const FieldSpec &spec, std::size_t n, std::span<const GFVector> rows) {
    out << spec.p << ' ' << spec.e << ' ' << n << ' ' << rows.size() << '\n';
    for (const auto &row : rows) out << format_vector(row) << '\n';
}

}  // namespace addcodes
