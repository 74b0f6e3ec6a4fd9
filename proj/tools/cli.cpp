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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "addcodes/code.hpp"
#include "addcodes/construct.hpp"
#include "addcodes/duality.hpp"
#include "addcodes/error.hpp"
#include "addcodes/identities.hpp"
#include "addcodes/ortho.hpp"
#include "addcodes/search.hpp"
#include "addcodes/tables.hpp"

namespace addcodes::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    std::string duality;
    std::string gen;
    std::string table_file;
    std::optional<std::uint32_t> p, e;
    std::size_t n = 0, k = 0, s = 0;
    std::uint64_t trials = 100'000;
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = kDefaultBudget;
    int jobs = 0;
    std::string out_dir;
    std::string cls = "all";
    std::size_t limit = 0;
    std::string name = "table2";
    std::size_t n_max = 3;
    std::string mode = "mixed";
    bool verify_transpose = false;
    std::size_t instances = 1000;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

bool json_output(const Options &o) { return o.format == "json"; }

bool ci_mode() {
    const char *v = std::getenv("ADDCODES_CI");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::uint64_t require_seed(const Options &o) {
    if (o.seed) return *o.seed;
    if (ci_mode()) throw UsageError("ADDCODES_CI is set: randomized commands need an explicit --seed");
    return 1;
}

Duality load_duality(const Options &o) {
    Duality d = resolve_duality(o.duality);
    if ((o.p && *o.p != d.spec().p) || (o.e && *o.e != d.spec().e)) {
        throw Error(ErrorKind::SpecMismatch, "--p/--e disagree with the duality's field");
    }
    return d;
}

std::string duality_name(const Duality &d) { return d.label().empty() ? "custom" : d.label(); }

json matrix_json(const FpMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (auto v : m.row(r)) row.push_back(v);
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_text(const FpMatrix &m, const std::string &indent) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent;
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
    return out.str();
}

std::string matrix_inline(const FpMatrix &m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    }
    return out.str();
}

json rows_json(const std::vector<GFVector> &rows) {
    json out = json::array();
    for (const auto &r : rows) {
        json row = json::array();
        for (const auto &x : r.entries()) row.push_back(format_element(x));
        out.push_back(row);
    }
    return out;
}

std::string generator_text(const FieldSpec &spec, std::size_t n, const std::vector<GFVector> &rows) {
    std::ostringstream out;
    write_generator(out, spec, n, rows);
    return out.str();
}

json field_json(const FieldSpec &spec) { return json{{"p", spec.p}, {"e", spec.e}}; }

void write_witness(const Options &o, const std::string &stem, const FieldSpec &spec, std::size_t n,
                   const std::vector<GFVector> &rows) {
    if (o.out_dir.empty() || rows.empty()) return;
    std::filesystem::create_directories(o.out_dir);
    std::ofstream file(std::filesystem::path(o.out_dir) / (stem + ".gen"));
    if (!file) throw Error(ErrorKind::Parse, "cannot write into " + o.out_dir);
    write_generator(file, spec, n, rows);
}

// duality ---------------------------------------------------------------

int duality_list(const Options &o, std::ostream &out) {
    if (!o.p || !o.e) throw UsageError("duality list needs --p and --e");
    const FieldSpec spec(*o.p, *o.e);
    json items = json::array();
    std::size_t shown = 0;
    for_each_duality(spec, parse_class_filter(o.cls), [&](const Duality &d) {
        if (o.limit && shown >= o.limit) return;
        ++shown;
        if (json_output(o)) {
            items.push_back({{"matrix", matrix_json(d.matrix())}, {"class", std::string(to_string(d.cls()))}});
        } else {
            out << matrix_inline(d.matrix()) << "  " << to_string(d.cls()) << '\n';
        }
    });
    if (json_output(o)) out << json{{"field", field_json(spec)}, {"dualities", items}}.dump(2) << '\n';
    return 0;
}

int duality_count(const Options &o, std::ostream &out) {
    if (!o.p || !o.e) throw UsageError("duality count needs --p and --e");
    const FieldSpec spec(*o.p, *o.e);
    std::uint64_t sym = 0, skew = 0, other = 0, raw_symmetric = 0;
    for_each_duality(spec, ClassFilter::All, [&](const Duality &d) {
        switch (d.cls()) {
            case DualityClass::Symmetric: ++sym; break;
            case DualityClass::SkewSymmetric: ++skew; break;
            case DualityClass::OtherNonSymmetric: ++other; break;
        }
        if (d.matrix() == d.matrix().transpose()) ++raw_symmetric;
    });
    const BigInt total = sym + skew + other;
    const BigInt sym_formula = count_symmetric(spec.p, spec.e);
    const BigInt skew_formula = spec.e % 2 == 0 ? count_skew(spec.p, spec.e) : BigInt(0);
    if (json_output(o)) {
        json j{{"field", field_json(spec)},
               {"total", sym + skew + other},
               {"symmetric", sym},
               {"skew", skew},
               {"other", other},
               {"formula", {{"total", gl_order(spec.p, spec.e).str()},
                            {"symmetric_matrices", sym_formula.str()},
                            {"skew", skew_formula.str()}}},
               {"enumerated_symmetric_matrices", raw_symmetric}};
        out << j.dump(2) << '\n';
    } else {
        out << "total " << total << "\nsymmetric " << sym << "\nskew " << skew << "\nother " << other << '\n';
        out << "formula: |GL| " << gl_order(spec.p, spec.e) << ", symmetric matrices " << sym_formula << ", skew "
            << skew_formula << '\n';
    }
    return 0;
}

int duality_classify(const Options &o, std::ostream &out) {
    const Duality d = load_duality(o);
    const bool self_orth = all_self_orthogonal_elements(d);
    if (json_output(o)) {
        out << json{{"duality", duality_name(d)},
                    {"field", field_json(d.spec())},
                    {"matrix", matrix_json(d.matrix())},
                    {"class", std::string(to_string(d.cls()))},
                    {"all_self_orthogonal", self_orth}}
                   .dump(2)
            << '\n';
    } else {
        out << duality_name(d) << ": " << to_string(d.cls()) << '\n';
        out << "all elements self-orthogonal: " << (self_orth ? "yes" : "no") << '\n';
    }
    return 0;
}

int duality_table(const Options &o, std::ostream &out) {
    const Duality d = load_duality(o);
    const CharacterTable t = character_table(d);
    if (json_output(o)) {
        json rows = json::array();
        for (std::size_t x = 0; x < t.order; ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < t.order; ++y) row.push_back(t.at(x, y));
            rows.push_back(row);
        }
        json labels = json::array();
        for (std::size_t i = 0; i < t.order; ++i) labels.push_back(format_element(GFElement::from_index(t.spec, i)));
        out << json{{"duality", duality_name(d)}, {"field", field_json(d.spec())}, {"elements", labels}, {"exponents", rows}}
                   .dump(2)
            << '\n';
    } else {
        out << d.spec().p << ' ' << d.spec().e << '\n' << render_table(t);
    }
    return 0;
}

int duality_validate(const Options &o, std::ostream &out) {
    std::ifstream in(o.table_file);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + o.table_file);
    const TableValidation v = validate_table(parse_table(in));
    if (json_output(o)) {
        json diags = json::array();
        for (const auto &d : v.diagnostics) {
            diags.push_back({{"row", d.row}, {"col", d.col}, {"expected", d.expected}, {"found", d.found}, {"message", d.message}});
        }
        json j{{"valid", v.valid()}, {"diagnostics", diags}};
        if (v.duality) j["matrix"] = matrix_json(v.duality->matrix());
        out << j.dump(2) << '\n';
    } else if (v.valid()) {
        out << "valid duality table, K = " << matrix_inline(v.duality->matrix()) << '\n';
    } else {
        out << "not a duality table (" << v.diagnostics.size() << " problems)\n";
        for (const auto &d : v.diagnostics) {
            out << "  ";
            if (!d.message.empty()) out << d.message;
            else out << "cell (" << d.row << ", " << d.col << "): expected exponent " << d.expected << ", found " << d.found;
            out << '\n';
        }
    }
    return v.valid() ? 0 : 1;
}

// code ------------------------------------------------------------------

AdditiveCode load_code(const GeneratorFile &g) { return AdditiveCode::from_rows(g.rows, g.spec, g.n); }

GeneratorFile load_generator(const Options &o, const std::optional<FieldSpec> &expect) {
    GeneratorFile g = read_generator_file(o.gen);
    if (expect && !(g.spec == *expect)) throw Error(ErrorKind::SpecMismatch, "generator file and duality disagree on the field");
    return g;
}

int code_check(const Options &o, std::ostream &out) {
    const Duality d = load_duality(o);
    const GeneratorFile g = load_generator(o, d.spec());
    const AdditiveCode c = load_code(g);
    const AcdVerdict v = is_acd(c, d, true);
    const AdditiveCode dc = dual(c, d);
    const bool so = is_self_orthogonal(c, d), sd = is_self_dual(c, d);
    const FpMatrix gr = gram(c, d);
    const FpMatrix gr_input = gram_of_rows(g.rows, d);
    if (json_output(o)) {
        out << json{{"duality", duality_name(d)},
                    {"class", std::string(to_string(d.cls()))},
                    {"n", c.length()},
                    {"k", c.dimension()},
                    {"dual_dimension", dc.dimension()},
                    {"gram", matrix_json(gr)},
                    {"gram_input_rows", matrix_json(gr_input)},
                    {"gram_rank", v.gram_rank},
                    {"acd", v.acd},
                    {"self_orthogonal", so},
                    {"self_dual", sd},
                    {"intersection_dimension", *v.intersection_dim}}
                   .dump(2)
            << '\n';
    } else {
        out << "duality: " << duality_name(d) << " (" << to_string(d.cls()) << ")\n";
        out << "n: " << c.length() << "\nk: " << c.dimension() << "\ndual dimension: " << dc.dimension() << '\n';
        out << "Gram (canonical generator):\n" << matrix_text(gr, "  ");
        out << "Gram (input rows):\n" << matrix_text(gr_input, "  ");
        out << "ACD: " << (v.acd ? "yes" : "no") << '\n';
        out << "self-orthogonal: " << (so ? "yes" : "no") << '\n';
        out << "self-dual: " << (sd ? "yes" : "no") << '\n';
        out << "intersection dimension: " << *v.intersection_dim << '\n';
    }
    return 0;
}

int code_dual(const Options &o, std::ostream &out) {
    const Duality d = load_duality(o);
    const GeneratorFile g = load_generator(o, d.spec());
    const AdditiveCode dc = dual(load_code(g), d);
    const auto rows = dc.generator_rows();
    if (json_output(o)) {
        out << json{{"duality", duality_name(d)}, {"field", field_json(d.spec())}, {"n", dc.length()}, {"k", dc.dimension()},
                    {"rows", rows_json(rows)}}
                   .dump(2)
            << '\n';
    } else {
        out << generator_text(dc.spec(), dc.length(), rows);
    }
    return 0;
}

int code_mindist(const Options &o, std::ostream &out) {
    const GeneratorFile g = load_generator(o, std::nullopt);
    const AdditiveCode c = load_code(g);
    const int dist = c.min_distance(o.jobs);
    if (json_output(o)) {
        out << json{{"field", field_json(c.spec())}, {"n", c.length()}, {"k", c.dimension()}, {"d", dist}}.dump(2) << '\n';
    } else {
        out << "n=" << c.length() << " k=" << c.dimension() << " d=" << dist << '\n';
    }
    return 0;
}

// construct -------------------------------------------------------------

int print_construction(const Options &o, const Duality &d, const ConstructionReport &r, std::ostream &out) {
    const AcdVerdict v = is_acd(r.code, d, true);
    const std::optional<int> measured =
        r.code.dimension() ? std::optional<int>(r.code.min_distance(o.jobs)) : std::nullopt;
    const bool claims_hold = v.acd == r.claimed_acd && (!r.claimed_distance || measured == r.claimed_distance);
    if (json_output(o)) {
        json j{{"duality", duality_name(d)},
               {"field", field_json(d.spec())},
               {"n", r.code.length()},
               {"k", r.code.dimension()},
               {"source", r.source},
               {"rows", rows_json(r.rows)},
               {"claimed_acd", r.claimed_acd},
               {"claimed_distance", r.claimed_distance ? json(*r.claimed_distance) : json(nullptr)},
               {"acd", v.acd},
               {"distance", measured ? json(*measured) : json(nullptr)},
               {"nontrivial", r.nontrivial},
               {"claims_hold", claims_hold}};
        out << j.dump(2) << '\n';
    } else {
        out << generator_text(d.spec(), r.code.length(), r.rows);
        out << "# source: " << r.source << '\n';
        out << "# k: " << r.code.dimension() << '\n';
        out << "# claimed: ACD " << (r.claimed_acd ? "yes" : "no");
        if (r.claimed_distance) out << ", d = " << *r.claimed_distance;
        out << "\n# measured: ACD " << (v.acd ? "yes" : "no");
        if (measured) out << ", d = " << *measured;
        out << '\n';
        if (!r.nontrivial) out << "# note: the code is trivial\n";
    }
    return claims_hold ? 0 : 1;
}

// search ----------------------------------------------------------------

json search_json(const SearchResult &r) {
    json j{{"field", field_json(r.spec)},
           {"duality", r.duality},
           {"n", r.n},
           {"k", r.k},
           {"d", r.best_distance ? json(*r.best_distance) : json(nullptr)},
           {"optimality", std::string(to_string(r.optimality))},
           {"candidates_examined", r.candidates_examined.str()},
           {"acd_candidates", r.acd_count},
           {"witness", rows_json(r.witness)}};
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

std::string search_line(const SearchResult &r) {
    std::ostringstream out;
    out << "n=" << r.n << " k=" << r.k << " d=";
    if (r.best_distance) out << *r.best_distance;
    else out << "none";
    out << " [" << to_string(r.optimality) << "]";
    return out.str();
}

int print_search(const Options &o, const SearchResult &r, std::ostream &out) {
    write_witness(o, r.duality + "_n" + std::to_string(r.n) + "_k" + std::to_string(r.k), r.spec, r.n, r.witness);
    if (json_output(o)) {
        out << search_json(r).dump(2) << '\n';
    } else {
        out << search_line(r) << '\n';
        out << "candidates examined: " << r.candidates_examined << ", ACD: " << r.acd_count << '\n';
        if (!r.witness.empty()) out << generator_text(r.spec, r.n, r.witness);
    }
    return 0;
}

int search_table(const Options &o, std::ostream &out) {
    TableOptions t;
    t.mode = o.mode == "exhaustive" ? TableMode::Exhaustive : TableMode::Mixed;
    t.n_max = o.n_max;
    t.budget = o.budget;
    t.trials = o.trials;
    t.seed = t.mode == TableMode::Mixed ? require_seed(o) : o.seed.value_or(1);
    t.jobs = o.jobs;
    t.verify_transpose = o.verify_transpose;
    const TableName name = parse_table_name(o.name);
    const TableReport report = reproduce_table(name, t);
    const FieldSpec spec = table_field(name);
    for (const auto &c : report.cells) {
        write_witness(o, c.duality + "_n" + std::to_string(c.n) + "_k" + std::to_string(c.k), spec, c.n, c.witness);
    }
    if (json_output(o)) {
        json cells = json::array();
        for (const auto &c : report.cells) {
            json j{{"duality", c.duality},
                   {"n", c.n},
                   {"k", c.k},
                   {"expected", c.expected.distance},
                   {"expected_optimal", c.expected.optimal},
                   {"found", c.found ? json(*c.found) : json(nullptr)},
                   {"method", std::string(to_string(c.method))},
                   {"optimality", std::string(to_string(c.optimality))},
                   {"status", std::string(to_string(c.status))},
                   {"candidates_examined", c.examined.str()},
                   {"note", c.note}};
            if (c.transpose_agrees) j["transpose_agrees"] = *c.transpose_agrees;
            cells.push_back(j);
        }
        out << json{{"table", to_string(name)},
                    {"mode", o.mode},
                    {"n_max", o.n_max},
                    {"cells", cells},
                    {"summary",
                     {{"pass", report.count(CellStatus::Pass)},
                      {"warn", report.count(CellStatus::Warn)},
                      {"fail", report.count(CellStatus::Fail)},
                      {"skipped", report.count(CellStatus::Skipped)}}}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto &c : report.cells) {
            out << to_string(c.status) << ' ' << c.duality << " n=" << c.n << " k=" << c.k << " expected=" << c.expected.distance
                << " found=";
            if (c.found) out << *c.found;
            else out << "none";
            out << " [" << to_string(c.method) << ", " << to_string(c.optimality) << "]";
            if (!c.note.empty()) out << "  " << c.note;
            out << '\n';
        }
        out << "pass " << report.count(CellStatus::Pass) << ", warn " << report.count(CellStatus::Warn) << ", fail "
            << report.count(CellStatus::Fail) << ", skipped " << report.count(CellStatus::Skipped) << '\n';
    }
    return report.exit_code();
}

int verify_identities_cmd(const Options &o, std::ostream &out) {
    const std::uint64_t seed = require_seed(o);
    const auto checks = verify_identities(o.instances, seed);
    const OracleAgreement agreement = check_gram_oracle(o.instances, seed);
    std::size_t failures = agreement.disagreements;
    for (const auto &c : checks) failures += c.failures;
    if (json_output(o)) {
        json items = json::array();
        for (const auto &c : checks) items.push_back({{"identity", c.name}, {"instances", c.instances}, {"failures", c.failures}});
        items.push_back({{"identity", "Gram criterion agrees with intersection oracle"},
                         {"instances", agreement.codes},
                         {"failures", agreement.disagreements}});
        out << json{{"seed", seed}, {"checks", items}, {"failures", failures}}.dump(2) << '\n';
    } else {
        for (const auto &c : checks) {
            out << (c.failures ? "FAIL " : "ok   ") << c.name << "  (" << c.instances << " instances, " << c.failures
                << " failures)\n";
        }
        out << (agreement.disagreements ? "FAIL " : "ok   ") << "Gram criterion agrees with intersection oracle  ("
            << agreement.codes << " codes, " << agreement.acd << " ACD, " << agreement.disagreements << " disagreements)\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Additive codes under arbitrary character-table dualities", "addcodes"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_duality = [&](CLI::App *sub) {
        sub->add_option("--duality", o.duality, "name:M1|M2|D1|D2|A4 or file:PATH")->required();
        sub->add_option("--p", o.p, "Characteristic (checked against the duality)");
        sub->add_option("--e", o.e, "Extension degree (checked against the duality)");
    };
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help, std::function<int()> fn) {
        CLI::App *sub = parent->add_subcommand(name, help);
        sub->callback([&action, fn] { action = fn; });
        add_format(sub);
        return sub;
    };

    CLI::App *duality = app.add_subcommand("duality", "Enumerate, classify and tabulate dualities");
    duality->require_subcommand(1);
    {
        auto *s = leaf(duality, "list", "List invertible e x e matrices of a field", [&] { return duality_list(o, out); });
        s->add_option("--p", o.p)->required();
        s->add_option("--e", o.e)->required();
        s->add_option("--class", o.cls)->check(CLI::IsMember({"all", "symmetric", "skew", "other"}));
        s->add_option("--limit", o.limit, "Print at most this many (0 = all)");
        s = leaf(duality, "count", "Count dualities by class", [&] { return duality_count(o, out); });
        s->add_option("--p", o.p)->required();
        s->add_option("--e", o.e)->required();
        s = leaf(duality, "classify", "Classify one duality", [&] { return duality_classify(o, out); });
        add_duality(s);
        s = leaf(duality, "table", "Print the character exponent table", [&] { return duality_table(o, out); });
        add_duality(s);
        s = leaf(duality, "validate-table", "Check whether a table comes from a duality",
                 [&] { return duality_validate(o, out); });
        s->add_option("--table", o.table_file)->required();
    }

    CLI::App *code = app.add_subcommand("code", "Inspect a code given by a generator file");
    code->require_subcommand(1);
    {
        auto *s = leaf(code, "check", "Dual, Gram matrix and ACD verdict", [&] { return code_check(o, out); });
        add_duality(s);
        s->add_option("--gen", o.gen)->required();
        s = leaf(code, "dual", "Print the dual code's generator", [&] { return code_dual(o, out); });
        add_duality(s);
        s->add_option("--gen", o.gen)->required();
        s = leaf(code, "mindist", "Minimum distance", [&] { return code_mindist(o, out); });
        s->add_option("--gen", o.gen)->required();
        s->add_option("--jobs", o.jobs)->check(CLI::NonNegativeNumber);
    }

    CLI::App *construct = app.add_subcommand("construct", "Explicit ACD constructions");
    construct->require_subcommand(1);
    {
        auto with = [&](std::function<ConstructionReport(const Duality &)> make) {
            return [&o, &out, make] {
                const Duality d = load_duality(o);
                return print_construction(o, d, make(d), out);
            };
        };
        auto rows_of = [&o](const Duality &d) { return load_generator(o, d.spec()).rows; };
        auto *s = leaf(construct, "length1", "Length-one ACD code", with([](const Duality &d) { return construct_length1(d); }));
        add_duality(s);
        s = leaf(construct, "acd1", "Validate a uniform-exponent template",
                 with([rows_of](const Duality &d) { return construct_acd1(d, rows_of(d)); }));
        add_duality(s);
        s->add_option("--gen", o.gen)->required();
        s = leaf(construct, "acd2", "Validate a paired-block template",
                 with([rows_of](const Duality &d) { return construct_acd2(d, rows_of(d)); }));
        add_duality(s);
        s->add_option("--gen", o.gen)->required();
        s = leaf(construct, "bound", "Block construction [n, p^(2s), floor(n/s)]",
                 with([&o](const Duality &d) { return construct_bound(d, o.n, o.s); }));
        add_duality(s);
        s->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        s->add_option("--s", o.s)->required()->check(CLI::PositiveNumber);
        s = leaf(construct, "n2n2", "[n, p^(2n-2), 2] construction",
                 with([&o](const Duality &d) { return construct_n_2n2(d, o.n); }));
        add_duality(s);
        s->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        s = leaf(construct, "f4", "Quaternary constructions", with([&o](const Duality &d) { return construct_f4(d, o.n, o.k); }));
        add_duality(s);
        s->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        s->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
        for (auto *sub : construct->get_subcommands({})) sub->add_option("--jobs", o.jobs)->check(CLI::NonNegativeNumber);
    }

    CLI::App *search = app.add_subcommand("search", "Best-distance ACD code search");
    search->require_subcommand(1);
    {
        auto *s = leaf(search, "exhaustive", "Enumerate every subspace", [&] {
            return print_search(o, exhaustive_best(load_duality(o), o.n, o.k, o.budget, o.jobs), out);
        });
        add_duality(s);
        s->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        s->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
        s->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
        s = leaf(search, "random", "Seeded random sampling", [&] {
            const std::uint64_t seed = require_seed(o);
            return print_search(o, random_best(load_duality(o), o.n, o.k, o.trials, seed, o.jobs), out);
        });
        add_duality(s);
        s->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        s->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
        s->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
        s->add_option("--seed", o.seed);
        s = leaf(search, "table", "Reproduce a published table", [&] { return search_table(o, out); });
        s->add_option("--name", o.name)->check(CLI::IsMember({"table1", "table2"}));
        s->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
        s->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "mixed"}));
        s->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
        s->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
        s->add_option("--seed", o.seed);
        s->add_flag("--verify-transpose", o.verify_transpose, "Recompute exhaustive cells under the transpose duality");
        for (auto *sub : search->get_subcommands({})) {
            sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
            sub->add_option("--out", o.out_dir, "Directory for witness generator files");
        }
    }

    {
        auto *s = leaf(&app, "verify-identities", "Run the duality identity suite on random codes",
                       [&] { return verify_identities_cmd(o, out); });
        s->add_option("--instances", o.instances)->check(CLI::PositiveNumber);
        s->add_option("--seed", o.seed);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return action ? action() : 2;
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return 2;
    }
}

}  // namespace addcodes::cli
