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
#include <set>
#include <vector>

#include "apnphi/field.hpp"

using namespace apnphi;

namespace {

// Independent reference arithmetic: schoolbook carry-less product followed
// by long division.
Bits ref_clmul(Bits a, Bits b) {
    Bits r = 0;
    for (int i = 0; i < 32; ++i) {
        if ((b >> i) & 1) r ^= a << i;
    }
    return r;
}

int ref_deg(Bits p) {
    int d = -1;
    for (int i = 0; i < 64; ++i) {
        if ((p >> i) & 1) d = i;
    }
    return d;
}

Bits ref_mod(Bits a, Bits m) {
    while (ref_deg(a) >= ref_deg(m)) a ^= m << (ref_deg(a) - ref_deg(m));
    return a;
}

// Smallest degree-m polynomial that is not a product of two lower-degree ones.
Bits sieve_smallest_irreducible(unsigned m) {
    std::vector<bool> reducible(std::size_t{1} << m, false);
    for (unsigned d = 1; d <= m / 2; ++d) {
        for (Bits a = Bits{1} << d; a < (Bits{2} << d); ++a) {
            for (Bits b = Bits{1} << (m - d); b < (Bits{2} << (m - d)); ++b) {
                reducible[ref_clmul(a, b) - (Bits{1} << m)] = true;
            }
        }
    }
    for (Bits low = 1; low < (Bits{1} << m); low += 2) {
        if (!reducible[low]) return (Bits{1} << m) | low;
    }
    return 0;
}

}  // namespace

TEST_CASE("GF(16) multiplication matches long division") {
    auto F = BinaryField::make(4);
    CHECK(F->modulus() == 0x13);
    CHECK(F->mul(0x2, 0x9) == 0x1);
    for (Bits a = 0; a < 16; ++a) {
        for (Bits b = 0; b < 16; ++b) CHECK(F->mul(a, b) == ref_mod(ref_clmul(a, b), 0x13));
    }
}

TEST_CASE("GF(256) with a non-primitive modulus") {
    auto F = BinaryField::make(8);
    CHECK(F->modulus() == 0x11b);
    CHECK(F->generator() != 2);  // t has order 51 modulo 0x11b
    for (Bits a = 0; a < 256; a += 7) {
        for (Bits b = 0; b < 256; ++b) REQUIRE(F->mul(a, b) == ref_mod(ref_clmul(a, b), 0x11b));
    }
}

TEST_CASE("characteristic two and Fermat") {
    auto F = BinaryField::make(3);
    for (Bits a = 0; a < 8; ++a) CHECK((FieldElem(F, a) + FieldElem(F, a)).is_zero());
    for (Bits a = 1; a < 8; ++a) CHECK(F->pow(a, 7) == 1);
    CHECK(F->pow(0, 0) == 1);
    CHECK(F->pow(0, 5) == 0);
}

TEST_CASE("inverse") {
    auto F = BinaryField::make(5);
    for (Bits a = 1; a < 32; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK_THROWS_AS(F->inv(0), DomainError);
    CHECK_THROWS_AS(inv(FieldElem(F, 0)), DomainError);
}

TEST_CASE("default modulus table agrees with an exhaustive sieve") {
    for (unsigned m = 1; m <= 16; ++m) {
        CAPTURE(m);
        CHECK(default_modulus(m) == sieve_smallest_irreducible(m));
        CHECK(is_irreducible_gf2(default_modulus(m)));
    }
}

TEST_CASE("invalid field parameters") {
    CHECK_THROWS_AS(BinaryField::make(0), DomainError);
    CHECK_THROWS_AS(BinaryField::make(17), DomainError);
    CHECK_THROWS_AS(BinaryField::make(4, 0x15), DomainError);  // (t^2+t+1)^2
    CHECK_THROWS_AS(BinaryField::make(4, 0x25), DomainError);  // wrong degree
    CHECK_NOTHROW(BinaryField::make(4, 0x19));
}

TEST_CASE("context mismatch is an error") {
    auto F = BinaryField::make(4);
    auto G = BinaryField::make(4, 0x19);
    CHECK_THROWS_AS(FieldElem(F, 1) + FieldElem(G, 1), DomainError);
    CHECK_THROWS_AS(FieldElem(F, 3) * FieldElem(BinaryField::make(5), 3), DomainError);
    CHECK_THROWS_AS(FieldElem(F, 16), DomainError);
    CHECK_NOTHROW(FieldElem(F, 3) * FieldElem(BinaryField::make(4), 3));  // structurally equal
    CHECK_THROWS_AS(frobenius_q(FieldElem(F, 3)), DomainError);
}

TEST_CASE("cubic extension construction") {
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u}) {
        CAPTURE(m);
        auto base = BinaryField::make(m);
        auto ext = CubicExtension::make(base);
        const Bits q = base->order();
        // g has no root, and every smaller candidate does (or has g0 = 0)
        auto has_root = [&](Bits packed) {
            const Bits g0 = packed & (q - 1), g1 = (packed >> m) & (q - 1), g2 = packed >> (2 * m);
            for (Bits r = 0; r < q; ++r) {
                Bits v = base->mul(base->mul(base->mul(r, r), r), 1) ^ base->mul(g2, base->mul(r, r)) ^
                         base->mul(g1, r) ^ g0;
                if (v == 0) return true;
            }
            return false;
        };
        CHECK_FALSE(has_root(ext->packed_g()));
        for (Bits p = 0; p < ext->packed_g(); ++p) CHECK(has_root(p));
    }
}

TEST_CASE("Frobenius generates the Galois group") {
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        CAPTURE(m);
        auto ext = CubicExtension::make(BinaryField::make(m));
        const Bits q = Bits{1} << m;
        std::set<Bits> fixed;
        for (Bits a = 0; a < ext->order(); ++a) {
            const Bits r1 = ext->frobenius(a);
            REQUIRE(r1 == ext->pow(a, q));
            CHECK(ext->frobenius(ext->frobenius(r1)) == a);
            if (r1 == a) fixed.insert(a);
        }
        CHECK(fixed.size() == q);
        for (Bits a : fixed) CHECK(ext->in_base(a));
        CHECK(ext->frobenius(0) == 0);
    }
}

TEST_CASE("Frobenius is a ring homomorphism") {
    auto ext = CubicExtension::make(BinaryField::make(4));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Bits a = rng() % ext->order(), b = rng() % ext->order();
        CHECK(ext->frobenius(a ^ b) == (ext->frobenius(a) ^ ext->frobenius(b)));
        CHECK(ext->frobenius(ext->mul(a, b)) == ext->mul(ext->frobenius(a), ext->frobenius(b)));
    }
}

TEST_CASE("extension arithmetic with and without tables agree on field axioms") {
    for (unsigned m : {4u, 6u}) {  // q^3 = 2^12 uses tables, 2^18 does not
        auto ext = CubicExtension::make(BinaryField::make(m));
        std::mt19937_64 rng(m);
        for (int i = 0; i < 300; ++i) {
            const Bits a = rng() % ext->order(), b = rng() % ext->order(), c = rng() % ext->order();
            CHECK(ext->mul(a, ext->mul(b, c)) == ext->mul(ext->mul(a, b), c));
            CHECK(ext->mul(a, b ^ c) == (ext->mul(a, b) ^ ext->mul(a, c)));
            if (a) CHECK(ext->mul(a, ext->inv(a)) == 1);
            CHECK(ext->pow(a, ext->order() - 1) == (a ? 1 : 0));
        }
        // the base field multiplies as itself inside the extension
        for (Bits a = 0; a < (Bits{1} << m); a += 3) {
            for (Bits b = 0; b < (Bits{1} << m); b += 5) CHECK(ext->mul(a, b) == ext->base()->mul(a, b));
        }
    }
}

TEST_CASE("relative trace") {
    auto base = BinaryField::make(3);
    FieldPtr ext = CubicExtension::make(base);
    const auto& E = as_extension(*ext);
    CHECK(rel_trace(FieldElem(ext, 1)).bits() == 1);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const FieldElem a(ext, rng() % ext->order()), b(ext, rng() % ext->order());
        const FieldElem t = rel_trace(a);
        CHECK(frobenius_q(t) == t);
        CHECK(E.in_base(t.bits()));
        CHECK(rel_trace(a + b) == t + rel_trace(b));
        CHECK(rel_trace(frobenius_q(a)) == t);
    }
}

TEST_CASE("norm and quadratic forms") {
    auto base = BinaryField::make(2);
    FieldPtr ext = CubicExtension::make(base);
    const FieldElem zero(ext, 0);
    CHECK(rel_norm(zero).is_zero());
    CHECK(form_q1(zero).is_zero());
    for (Bits b = 0; b < ext->order(); ++b) {
        CHECK(form_q4(zero, FieldElem(ext, b)).is_zero());
        CHECK(form_q5(FieldElem(ext, b), zero).is_zero());
    }
    for (Bits a = 0; a < 4; ++a) {
        const FieldElem e(ext, a);
        CHECK(rel_norm(e) == pow(e, 3));
        CHECK(form_q1(e) == pow(e, 2));
    }
    const auto& E = as_extension(*ext);
    for (Bits a = 0; a < ext->order(); ++a) {
        for (Bits b = 0; b < ext->order(); ++b) {
            CHECK(E.form_q5(a, b) == E.form_q5(b, a));
            CHECK(E.rel_norm(ext->mul(a, b)) == ext->mul(E.rel_norm(a), E.rel_norm(b)));
            CHECK(E.in_base(E.form_q4(a, b)));
            CHECK(E.in_base(E.form_q5(a, b)));
        }
        CHECK(E.in_base(E.rel_norm(a)));
        CHECK(E.in_base(E.form_q1(a)));
    }
}

TEST_CASE("conjugate set is additively closed iff the trace vanishes") {
    // For c in F_q the three conjugates coincide and {0, c} is trivially
    // closed while tr(c) = c, so only c outside the base field is checked.
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        auto ext = CubicExtension::make(BinaryField::make(m));
        for (Bits c = ext->base()->order(); c < ext->order(); ++c) {
            const Bits c1 = ext->frobenius(c), c2 = ext->frobenius(c1);
            const std::set<Bits> s = {0, c, c1, c2};
            bool closed = true;
            for (Bits a : s) {
                for (Bits b : s) closed = closed && s.count(a ^ b);
            }
            CHECK(closed == (ext->rel_trace(c) == 0));
        }
    }
}

TEST_CASE("field spec strings") {
    auto s = parse_field_spec("m=5");
    CHECK(s.m == 5);
    CHECK_FALSE(s.modulus.has_value());
    s = parse_field_spec("m=4,mod=0x19");
    CHECK(make_field(s)->modulus() == 0x19);
    CHECK_THROWS_AS(parse_field_spec("mod=0x13"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("m=4,mod=25"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("m=4,p=3"), ParseError);
    CHECK(parse_bits("0x1f") == 31);
    CHECK(parse_bits("31") == 31);
    CHECK_THROWS_AS(parse_bits("0xzz"), ParseError);
    CHECK(to_hex(255) == "0xff");
}

TEST_CASE("embedding between binary fields is a homomorphism") {
    auto small = BinaryField::make(2), big = BinaryField::make(6);
    FieldEmbedding emb(small, big);
    for (Bits a = 0; a < 4; ++a) {
        for (Bits b = 0; b < 4; ++b) {
            CHECK(emb(a ^ b) == (emb(a) ^ emb(b)));
            CHECK(emb(small->mul(a, b)) == big->mul(emb(a), emb(b)));
        }
    }
    CHECK_THROWS_AS(FieldEmbedding(BinaryField::make(4), big), DomainError);
}

TEST_CASE("embedding relation") {
    auto base = BinaryField::make(3);
    auto ext = CubicExtension::make(base);
    CHECK(embeds_into(*gf2(), *base));
    CHECK(embeds_into(*gf2(), *ext));
    CHECK(embeds_into(*base, *ext));
    CHECK_FALSE(embeds_into(*ext, *base));
    CHECK_FALSE(embeds_into(*BinaryField::make(4), *ext));
    CHECK(common_field(base, ext)->same_as(*ext));
    CHECK_THROWS_AS(common_field(BinaryField::make(4), ext), DomainError);
}
