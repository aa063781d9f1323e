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

#include <random>

#include "apnphi/poly.hpp"

using namespace apnphi;

namespace {

TriPoly X(FieldPtr F = gf2()) { return TriPoly::variable(std::move(F), Var::x); }
TriPoly Y(FieldPtr F = gf2()) { return TriPoly::variable(std::move(F), Var::y); }
TriPoly Z(FieldPtr F = gf2()) { return TriPoly::variable(std::move(F), Var::z); }

TriPoly from_terms(std::initializer_list<std::array<unsigned, 3>> exps, FieldPtr F = gf2()) {
    TriPoly p(F);
    for (const auto& e : exps) p.add_term(Monomial(e[0], e[1], e[2]), 1);
    return p;
}

TriPoly random_poly(std::mt19937_64& rng, const FieldPtr& F, unsigned max_deg, unsigned terms) {
    TriPoly p(F);
    for (unsigned t = 0; t < terms; ++t) {
        const unsigned d = rng() % (max_deg + 1);
        const unsigned i = rng() % (d + 1);
        const unsigned j = rng() % (d - i + 1);
        p.add_term(Monomial(i, j, d - i - j), rng() % F->order());
    }
    return p;
}

}  // namespace

TEST_CASE("ring basics") {
    const auto x = X(), y = Y(), z = Z();
    CHECK((x + y) * (x + y) == x * x + y * y);
    const TriPoly A = (x + y) * (y + z) * (z + x);
    CHECK(A == from_terms({{2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}}));
    CHECK(A.size() == 6);
    const TriPoly zero(gf2());
    CHECK((A * zero).is_zero());
    CHECK(zero.degree() == -1);
    CHECK_THROWS_AS(x + X(BinaryField::make(2)), DomainError);
}

TEST_CASE("product degree is additive") {
    std::mt19937_64 rng(3);
    auto F = BinaryField::make(4);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_poly(rng, F, 6, 8), b = random_poly(rng, F, 6, 8);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("exact division examples") {
    const auto x = X(), y = Y(), z = Z();
    const TriPoly A = (x + y) * (y + z) * (z + x);
    const TriPoly s = x + y + z;

    auto r3 = divexact(pow(x, 3) + pow(y, 3) + pow(z, 3) + pow(s, 3), A);
    REQUIRE(r3.exact());
    CHECK(*r3.quotient == TriPoly::constant(gf2(), 1));

    // frozen from an independent dictionary-based GF(2) division
    auto r5 = divexact(pow(x, 5) + pow(y, 5) + pow(z, 5) + pow(s, 5), A);
    REQUIRE(r5.exact());
    CHECK(*r5.quotient == from_terms({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));

    auto bad = divexact(x * x + y * y, x + z);
    CHECK_FALSE(bad.exact());
    REQUIRE(bad.remainder_lead.has_value());
    CHECK(*bad.remainder_lead == Monomial(0, 2, 0));

    CHECK_THROWS_AS(divexact(x, TriPoly(gf2())), DomainError);
}

TEST_CASE("divexact(a*b, b) == a") {
    std::mt19937_64 rng(17);
    auto F = BinaryField::make(3);
    int checked = 0;
    while (checked < 50) {
        const auto a = random_poly(rng, F, 8, 6), b = random_poly(rng, F, 8, 5);
        if (b.is_zero()) continue;
        auto r = divexact(a * b, b);
        REQUIRE(r.exact());
        CHECK(*r.quotient == a);
        ++checked;
    }
}

TEST_CASE("substitution") {
    const auto x = X(), y = Y(), z = Z();
    const TriPoly A = (x + y) * (y + z) * (z + x);
    CHECK(substitute(A, {x, z, z}).is_zero());

    const TriPoly phi5 = x * x + y * y + z * z + x * y + x * z + y * z;
    const TriPoly sub = substitute(phi5, {x, z, z});
    CHECK(sub == x * x + z * z);
    CHECK(sub == pow(x + z, 2));

    std::mt19937_64 rng(23);
    auto F = BinaryField::make(4);
    const auto p = random_poly(rng, F, 7, 12);
    CHECK(substitute(p, {X(F), Y(F), Z(F)}) == p);

    // specialization is a homomorphism: substitute then evaluate = evaluate
    const auto img = std::array<TriPoly, 3>{X(F) + Z(F), TriPoly::constant(F, 5), X(F) * Y(F)};
    const auto q = substitute(p, img);
    for (Bits a = 0; a < 16; a += 3) {
        for (Bits b = 0; b < 16; b += 5) {
            const Bits c = 7;
            CHECK(evaluate(q, a, b, c) == evaluate(p, a ^ c, 5, F->mul(a, b)));
        }
    }
}

TEST_CASE("homogeneous components") {
    const auto x = X(), y = Y(), z = Z();
    const TriPoly A = (x + y) * (y + z) * (z + x);
    CHECK(homogeneous_component(A, 3) == A);
    CHECK(homogeneous_component(A, 2).is_zero());

    const TriPoly R2 = x * x + y * z, R1 = x + y, R0 = TriPoly::constant(gf2(), 1);
    const TriPoly P = A + R2 + R1 + R0;
    CHECK(homogeneous_component(P, 3) == A);
    CHECK(homogeneous_component(P, 2) == R2);
    CHECK(homogeneous_component(P, 1) == R1);
    CHECK(homogeneous_component(P, 0) == R0);

    std::mt19937_64 rng(29);
    auto F = BinaryField::make(5);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_poly(rng, F, 9, 10);
        TriPoly sum(F);
        for (const auto& [d, comp] : homogeneous_components(p)) {
            CHECK(comp.is_homogeneous());
            CHECK(comp.degree() == static_cast<long>(d));
            sum += comp;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("symmetric basis") {
    const auto x = X(), y = Y(), z = Z();
    const auto F = gf2();
    const TriPoly A = (x + y) * (y + z) * (z + x);
    CHECK(to_symmetric(A) == SymPoly::s1(F) * SymPoly::s2(F) + SymPoly::s3(F));
    CHECK(to_symmetric(x * x + y * y + z * z) == SymPoly::s1(F) * SymPoly::s1(F));
    CHECK_THROWS_AS(to_symmetric(x), DomainError);
    CHECK_FALSE(is_symmetric(x * y + z));
    CHECK(to_symmetric(A).to_string() == "s1*s2 + s3");
}

TEST_CASE("symmetric roundtrip on random inputs") {
    std::mt19937_64 rng(31);
    auto F = BinaryField::make(3);
    for (int i = 0; i < 25; ++i) {
        const SymPoly s(random_poly(rng, F, 5, 6));
        const TriPoly expanded = from_symmetric(s);
        CHECK(is_symmetric(expanded));
        CHECK(to_symmetric(expanded) == s);
        CHECK(from_symmetric(to_symmetric(expanded)) == expanded);
        // components of a symmetric polynomial are symmetric
        for (const auto& [d, comp] : homogeneous_components(expanded)) CHECK(is_symmetric(comp));
    }
}

TEST_CASE("power sums via Newton recursion") {
    const auto F = gf2();
    const auto s1 = SymPoly::s1(F), s2 = SymPoly::s2(F), s3 = SymPoly::s3(F);
    CHECK(power_sum(4) == s1 * s1 * s1 * s1);
    CHECK(power_sum(3) == s1 * s1 * s1 + s1 * s2 + s3);
    CHECK_THROWS_AS(power_sum(0), DomainError);
    const auto x = X(), y = Y(), z = Z();
    for (unsigned i = 1; i <= 64; ++i) {
        CAPTURE(i);
        CHECK(from_symmetric(power_sum(i)) == pow(x, i) + pow(y, i) + pow(z, i));
    }
}

TEST_CASE("univariate evaluation and composition") {
    auto F = BinaryField::make(3);
    const auto cube = UniPoly::monomial(F, 3);
    for (Bits a = 0; a < 8; ++a) CHECK(uni_eval(cube, a) == F->mul(a, F->mul(a, a)));

    const UniPoly L = UniPoly::monomial(F, 4) + UniPoly::monomial(F, 2, 3) + UniPoly::monomial(F, 1, 6);
    CHECK(uni_compose(UniPoly::monomial(F, 5), L) == pow(L, 5));
    CHECK(uni_compose(UniPoly::monomial(F, 5), L).degree() == 20);

    const UniPoly f = parse_unipoly("0x3*x^6 + x^2 + 0x5", F);
    const UniPoly g = parse_unipoly("x^5 + 0x7*x", F);
    for (Bits a = 0; a < 8; ++a) {
        CHECK(uni_eval(f + g, a) == (uni_eval(f, a) ^ uni_eval(g, a)));
        CHECK(uni_eval(uni_compose(f, g), a) == uni_eval(f, uni_eval(g, a)));
    }
}

TEST_CASE("text grammar") {
    auto F = BinaryField::make(4);
    const TriPoly p = parse_tripoly("0x3*x^2 + y + 0xf + x*y^2*z", F);
    CHECK(p.size() == 4);
    CHECK(p.coeff(Monomial(2, 0, 0)) == 3);
    CHECK(p.coeff(Monomial(0, 0, 0)) == 15);
    CHECK(parse_tripoly(to_string(p), F) == p);
    CHECK(to_string(TriPoly::constant(gf2(), 1)) == "0x1");
    CHECK(to_string(TriPoly(gf2())) == "0x0");
    CHECK(parse_tripoly("x + x", F).is_zero());
    CHECK(parse_tripoly(" x ^ 3 + 0x1 ", gf2()) == parse_tripoly("x^3+1", gf2()));

    CHECK_THROWS_AS(parse_tripoly("", F), ParseError);
    CHECK_THROWS_AS(parse_tripoly("x +", F), ParseError);
    CHECK_THROWS_AS(parse_tripoly("w^2", F), ParseError);
    CHECK_THROWS_AS(parse_tripoly("0x10*x", F), ParseError);
    CHECK_THROWS_AS(parse_tripoly("0x2*0x3*x", F), ParseError);
    CHECK_THROWS_AS(parse_unipoly("x*y", F), ParseError);

    const UniPoly u = parse_unipoly("x^12 + x^3 + 0x2*x", F);
    CHECK(to_string(u) == "x^12 + x^3 + 0x2*x");
    CHECK(u.degree() == 12);
}
