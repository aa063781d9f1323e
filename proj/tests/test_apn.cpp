// Copyright 2026 The apnphi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "apnphi/apn.hpp"

using namespace apnphi;

namespace {

// Reference differential analysis: a full count array per (a, b), no pairing.
struct RefResult {
    std::uint64_t delta = 0;
    std::map<std::uint64_t, std::uint64_t> spectrum;
};

RefResult brute_force(const std::vector<Bits>& t) {
    const Bits q = t.size();
    RefResult r;
    for (Bits a = 1; a < q; ++a) {
        std::vector<std::uint64_t> cnt(q, 0);
        for (Bits x = 0; x < q; ++x) ++cnt[t[x ^ a] ^ t[x]];
        for (Bits b = 0; b < q; ++b) {
            r.delta = std::max(r.delta, cnt[b]);
            ++r.spectrum[cnt[b]];
        }
    }
    return r;
}

// Reference evaluation: Horner with the field's multiplication only.
std::vector<Bits> horner_table(const UniPoly& f, const BinaryField& F) {
    std::vector<Bits> t(F.order());
    for (Bits x = 0; x < F.order(); ++x) {
        Bits acc = 0;
        for (long e = f.degree(); e >= 0; --e) acc = F.mul(acc, x) ^ f.coeff(static_cast<std::uint64_t>(e));
        t[x] = acc;
    }
    return t;
}

UniPoly random_poly(const BinaryFieldPtr& F, unsigned deg, std::mt19937_64& rng) {
    UniPoly f(F);
    for (unsigned e = 0; e <= deg; ++e) f.add_term(e, rng() & (F->order() - 1));
    return f;
}

ApnOptions single_thread() {
    ApnOptions o;
    o.threads = 1;
    return o;
}

}  // namespace

TEST_CASE("value tables") {
    const auto F8 = BinaryField::make(3);
    const auto id = build_table(UniPoly::monomial(F8, 1), F8);
    for (Bits x = 0; x < 8; ++x) CHECK(id[x] == x);

    const auto cube = build_table(UniPoly::monomial(F8, 3), F8);
    for (Bits x = 0; x < 8; ++x) CHECK(cube[x] == F8->mul(F8->mul(x, x), x));

    const auto c = build_table(UniPoly::constant(F8, 5), F8);
    for (Bits x = 0; x < 8; ++x) CHECK(c[x] == 5);

    // GF(2) coefficients lift into any field
    const auto F16 = BinaryField::make(4);
    CHECK(build_table(parse_unipoly("x^3 + x", gf2()), F16) == horner_table(parse_unipoly("x^3 + x", F16), *F16));
}

TEST_CASE("known differential uniformities") {
    const auto F16 = BinaryField::make(4), F32 = BinaryField::make(5);
    const auto x3 = differential_uniformity(UniPoly::monomial(F16, 3));
    CHECK(x3.delta == 2);
    CHECK(x3.is_apn);
    CHECK(x3.m == 4);
    const auto x5 = differential_uniformity(UniPoly::monomial(F16, 5));
    CHECK(x5.delta == 4);
    CHECK_FALSE(x5.is_apn);
    CHECK(differential_uniformity(UniPoly::monomial(F32, 13)).delta == 2);

    // the brute-force oracle agrees
    CHECK(brute_force(horner_table(UniPoly::monomial(F16, 5), *F16)).delta == 4);
    CHECK(brute_force(horner_table(UniPoly::monomial(F32, 13), *F32)).delta == 2);
}

TEST_CASE("kernel agrees with the brute-force oracle") {
    std::mt19937_64 rng(7);
    for (unsigned m : {2u, 3u, 4u, 5u, 6u}) {
        const auto F = BinaryField::make(m);
        for (int trial = 0; trial < 6; ++trial) {
            const UniPoly f = random_poly(F, 2 + static_cast<unsigned>(rng() % 12), rng);
            const auto table = horner_table(f, *F);
            CHECK(build_table(f, F) == table);
            const auto ref = brute_force(table);
            const auto rep = differential_uniformity(table, m, single_thread());
            CAPTURE(m);
            CAPTURE(to_string(f));
            CHECK(rep.delta == ref.delta);
            CHECK(rep.spectrum == ref.spectrum);
            CHECK(rep.is_apn == (ref.delta == 2));
        }
    }
}

TEST_CASE("report invariants") {
    std::mt19937_64 rng(11);
    const auto F = BinaryField::make(5);
    for (int trial = 0; trial < 8; ++trial) {
        const UniPoly f = random_poly(F, 9, rng);
        const auto rep = differential_uniformity(f, single_thread());
        const std::uint64_t q = 32;
        std::uint64_t pairs = 0, solutions = 0;
        for (const auto& [c, n] : rep.spectrum) {
            CHECK(c % 2 == 0);
            pairs += n;
            solutions += c * n;
        }
        CHECK(pairs == q * (q - 1));
        CHECK(solutions == q * (q - 1));
        CHECK(rep.delta % 2 == 0);

        // adding an affine function permutes the counts for each a
        const UniPoly g = f + UniPoly::monomial(F, 1, rng() % q) + UniPoly::constant(F, rng() % q);
        const auto rg = differential_uniformity(g, single_thread());
        CHECK(rg.delta == rep.delta);
        CHECK(rg.spectrum == rep.spectrum);
    }
    // affine functions have a single output difference per a
    CHECK(differential_uniformity(parse_unipoly("0x3*x + 0x1", F)).delta == 32);
}

TEST_CASE("threads do not change the report") {
    const auto F = BinaryField::make(8);
    const UniPoly f = parse_unipoly("x^7 + 0x1d*x^5 + x^3", F);
    const auto one = differential_uniformity(f, single_thread());
    for (unsigned t : {2u, 3u, 7u}) {
        ApnOptions o;
        o.threads = t;
        const auto many = differential_uniformity(f, o);
        CHECK(many.delta == one.delta);
        CHECK(many.spectrum == one.spectrum);
    }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(differential_uniformity(UniPoly::monomial(gf2(), 3), BinaryField::make(15)), BudgetExceeded);
    ApnOptions o;
    o.max_m = 3;
    CHECK_THROWS_AS(differential_uniformity(UniPoly::monomial(gf2(), 3), BinaryField::make(4), o), BudgetExceeded);
    o.allow_large = true;
    CHECK(differential_uniformity(UniPoly::monomial(gf2(), 3), BinaryField::make(4), o).delta == 2);
    CHECK_THROWS_AS(differential_uniformity(std::vector<Bits>(5), 2), DomainError);
}

TEST_CASE("scans over extensions") {
    const auto x3 = scan_extensions(UniPoly::monomial(gf2(), 3), 2, 10);
    REQUIRE(x3.size() == 9);
    for (const auto& r : x3) {
        REQUIRE(r.report);
        CHECK(r.report->is_apn);
    }
    const auto x13 = scan_extensions(UniPoly::monomial(gf2(), 13), 2, 10);
    for (const auto& r : x13) {
        CAPTURE(r.m);
        CHECK(r.report->is_apn == (r.m % 2 == 1));
    }
    const auto x5 = scan_extensions(UniPoly::monomial(gf2(), 5), 2, 10);
    for (const auto& r : x5) {
        CAPTURE(r.m);
        CHECK(r.report->is_apn == (std::gcd(2u, r.m) == 1));
        CHECK(r.m == x5[r.m - 2].m);
    }

    ApnOptions o;
    o.max_m = 4;
    const auto partial = scan_extensions(UniPoly::monomial(gf2(), 3), 3, 5, o);
    REQUIRE(partial.size() == 3);
    CHECK(partial[0].report);
    CHECK(partial[1].report);
    CHECK_FALSE(partial[2].report);
    CHECK_FALSE(partial[2].error.empty());

    CHECK_THROWS_AS(scan_extensions(parse_unipoly("0x2*x^3", BinaryField::make(2)), 2, 3), DomainError);
}
