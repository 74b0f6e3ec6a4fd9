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

#include "addcodes/identities.hpp"

#include <functional>

#include "addcodes/ortho.hpp"

namespace addcodes {

AdditiveCode random_code(const FieldSpec &spec, std::size_t n, std::size_t rows, std::mt19937_64 &rng) {
    std::uniform_int_distribution<unsigned> digit(0, spec.p - 1);
    FpMatrix m(spec.p, rows, spec.e * n);
    for (std::size_t r = 0; r < rows; ++r) {
        for (auto &v : m.row(r)) v = static_cast<Residue>(digit(rng));
    }
    return AdditiveCode::from_matrix(m, spec);
}

namespace {

struct Pool {
    FieldSpec spec;
    std::vector<Duality> all;
    std::vector<Duality> skew;
};

std::vector<Pool> pools() {
    std::vector<Pool> out;
    for (const FieldSpec &spec : {FieldSpec(2, 2, "v"), FieldSpec(3, 2, "w")}) {
        out.push_back({spec, enumerate_dualities(spec, ClassFilter::All),
                       enumerate_dualities(spec, ClassFilter::SkewSymmetric)});
    }
    return out;
}

struct Instance {
    AdditiveCode c;
    Duality d;
};

Instance draw(const std::vector<Pool> &all, bool skew_only, std::mt19937_64 &rng) {
    const Pool &pool = all[rng() % all.size()];
    const auto &ds = skew_only ? pool.skew : pool.all;
    const Duality &d = ds[rng() % ds.size()];
    const std::size_t n = 1 + rng() % 4;
    const std::size_t rows = rng() % (pool.spec.e * n + 1);
    return {random_code(pool.spec, n, rows, rng), d};
}

}  // namespace

std::vector<IdentityCheck> verify_identities(std::size_t instances, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto all = pools();

    struct Rule {
        std::string name;
        bool skew_only;
        // Returns false when the hypothesis fails (instance not counted),
        // otherwise writes the verdict to `ok`.
        std::function<bool(const Instance &, std::mt19937_64 &, bool &ok)> check;
    };
    const std::vector<Rule> rules = {
        {"cardinality |C||C^M| = p^(en)", false,
         [](const Instance &x, std::mt19937_64 &, bool &ok) {
             ok = x.c.dimension() + dual(x.c, x.d).dimension() == x.c.spec().e * x.c.length();
             return true;
         }},
        {"(C^M)^(M^T) = C", false,
         [](const Instance &x, std::mt19937_64 &, bool &ok) {
             ok = dual(dual(x.c, x.d), transpose(x.d)) == x.c && dual(dual(x.c, transpose(x.d)), x.d) == x.c;
             return true;
         }},
        {"(C+D)^M = C^M n D^M", false,
         [](const Instance &x, std::mt19937_64 &r, bool &ok) {
             const AdditiveCode b = random_code(x.c.spec(), x.c.length(), r() % (x.c.spec().e * x.c.length() + 1), r);
             ok = dual(sum(x.c, b), x.d) == intersection(dual(x.c, x.d), dual(b, x.d));
             return true;
         }},
        {"(C n D)^M = C^M + D^M", false,
         [](const Instance &x, std::mt19937_64 &r, bool &ok) {
             const AdditiveCode b = random_code(x.c.spec(), x.c.length(), r() % (x.c.spec().e * x.c.length() + 1), r);
             ok = dual(intersection(x.c, b), x.d) == sum(dual(x.c, x.d), dual(b, x.d));
             return true;
         }},
        {"ACD under M iff ACD under M^T", false,
         [](const Instance &x, std::mt19937_64 &, bool &ok) {
             ok = is_acd(x.c, x.d, true).acd == is_acd(x.c, transpose(x.d), true).acd;
             return true;
         }},
        {"ACD C gives ACD C^M under M^T", false,
         [](const Instance &x, std::mt19937_64 &, bool &ok) {
             if (!is_acd(x.c, x.d, true).acd) return false;
             ok = is_acd(dual(x.c, x.d), transpose(x.d), true).acd && is_acd(dual(x.c, transpose(x.d)), x.d, true).acd;
             return true;
         }},
        {"skew duality: (C^M)^M = C", true,
         [](const Instance &x, std::mt19937_64 &, bool &ok) {
             ok = dual(dual(x.c, x.d), x.d) == x.c;
             return true;
         }},
    };

    std::vector<IdentityCheck> out;
    for (const auto &rule : rules) {
        IdentityCheck check{rule.name, 0, 0};
        // Conditional rules may need several draws per counted instance.
        for (std::size_t attempts = 0; check.instances < instances && attempts < 100 * instances; ++attempts) {
            const Instance x = draw(all, rule.skew_only, rng);
            bool ok = true;
            if (!rule.check(x, rng, ok)) continue;
            ++check.instances;
            if (!ok) ++check.failures;
        }
        out.push_back(check);
    }
    return out;
}

OracleAgreement check_gram_oracle(std::size_t codes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto all = pools();
    OracleAgreement agreement;
    for (std::size_t i = 0; i < codes; ++i) {
        // Cycle through every duality so each one is exercised.
        const Pool &pool = all[i % all.size()];
        const Duality &d = pool.all[(i / all.size()) % pool.all.size()];
        const std::size_t n = 1 + rng() % 4;
        const AdditiveCode c = random_code(pool.spec, n, rng() % (pool.spec.e * n + 1), rng);
        const AcdVerdict v = is_acd(c, d, false);
        const bool oracle = intersection_dimension(c, d) == 0;
        ++agreement.codes;
        if (v.acd) ++agreement.acd;
        if (v.acd != oracle) ++agreement.disagreements;
    }
    return agreement;
}

}  // namespace addcodes
