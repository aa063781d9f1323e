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

#include "apnphi/field.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdio>
#include <mutex>

namespace apnphi {

namespace {

// Frozen table: numerically smallest irreducible polynomial of each degree.
// Regenerated and checked by exhaustive trial division in test_field.
constexpr std::array<Bits, 17> kDefaultModuli = {
    0x0,    0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

// Largest group order for which exp/log tables are built.
constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 16;

int degree_of(Bits p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Bits gf2_mod(Bits a, Bits b) {
    const int db = degree_of(b);
    for (int da = degree_of(a); da >= db; da = degree_of(a)) a ^= b << (da - db);
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Bits slow_pow(Bits a, std::uint64_t n, const std::function<Bits(Bits, Bits)>& mul) {
    Bits r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

}  // namespace

Bits clmul_mod(Bits a, Bits b, Bits modulus) {
    const int dm = degree_of(modulus);
    Bits r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (degree_of(a) == dm) a ^= modulus;
    }
    return r;
}

bool is_irreducible_gf2(Bits poly) {
    const int d = degree_of(poly);
    if (d < 1 || d > 32) return false;
    for (Bits q = 2; degree_of(q) <= d / 2; ++q) {
        if (gf2_mod(poly, q) == 0) return false;
    }
    return true;
}

Bits default_modulus(unsigned m) {
    if (m < 1 || m > BinaryField::kMaxDegree) {
        throw DomainError("bad_degree", "field degree must be in 1..16, got " + std::to_string(m));
    }
    return kDefaultModuli[m];
}

// --- Field -----------------------------------------------------------------

Bits Field::pow(Bits a, std::uint64_t n) const {
    return slow_pow(a, n, [this](Bits x, Bits y) { return mul(x, y); });
}

Bits Field::inv(Bits a) const {
    if (a == 0) throw DomainError("inverse_of_zero", "inversion of zero in " + describe());
    return pow(a, order() - 2);
}

void Field::build_log_tables(const std::function<Bits(Bits, Bits)>& slow_mul) {
    const std::uint64_t group = order() - 1;
    const auto primes = prime_factors(group);
    Bits g = 1;
    if (group > 1) {
        for (g = 2; g < order(); ++g) {
            bool primitive = true;
            for (auto p : primes) {
                if (slow_pow(g, group / p, slow_mul) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
    }
    generator_ = g;
    exp_.assign(2 * group, 0);
    log_.assign(order(), 0);
    Bits v = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        exp_[i] = static_cast<std::uint32_t>(v);
        exp_[i + group] = static_cast<std::uint32_t>(v);
        log_[v] = static_cast<std::uint32_t>(i);
        v = slow_mul(v, g);
    }
}

bool embeds_into(const Field& sub, const Field& big) {
    if (sub.same_as(big)) return true;
    if (auto* b = dynamic_cast<const BinaryField*>(&sub); b && b->m() == 1) return true;
    if (auto* ext = dynamic_cast<const CubicExtension*>(&big)) return ext->base()->same_as(sub);
    return false;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (embeds_into(*a, *b)) return b;
    if (embeds_into(*b, *a)) return a;
    throw DomainError("context_mismatch", "no common field for " + a->describe() + " and " + b->describe());
}

// --- BinaryField -----------------------------------------------------------

BinaryField::BinaryField(unsigned m, Bits modulus) : Field(m), modulus_(modulus) {
    build_log_tables([modulus](Bits a, Bits b) { return clmul_mod(a, b, modulus); });
}

BinaryFieldPtr BinaryField::make(unsigned m) { return make(m, default_modulus(m)); }

BinaryFieldPtr BinaryField::make(unsigned m, Bits modulus) {
    if (m < 1 || m > kMaxDegree) {
        throw DomainError("bad_degree", "field degree must be in 1..16, got " + std::to_string(m));
    }
    if (degree_of(modulus) != static_cast<int>(m) || (modulus & 1) == 0 || !is_irreducible_gf2(modulus)) {
        throw DomainError("bad_modulus", "modulus " + to_hex(modulus) + " is not an irreducible polynomial of degree " +
                                             std::to_string(m));
    }
    return std::make_shared<const BinaryField>(m, modulus);
}

Bits BinaryField::pow(Bits a, std::uint64_t n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    const std::uint64_t group = order() - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % group)) % group];
}

Bits BinaryField::inv(Bits a) const {
    if (a == 0) throw DomainError("inverse_of_zero", "inversion of zero in " + describe());
    const std::uint64_t group = order() - 1;
    return exp_[(group - log_[a]) % group];
}

Bits BinaryField::abs_trace(Bits a) const {
    Bits t = 0;
    for (unsigned i = 0; i < m(); ++i) {
        t ^= a;
        a = sqr(a);
    }
    return t;
}

bool BinaryField::same_as(const Field& other) const {
    auto* o = dynamic_cast<const BinaryField*>(&other);
    return o && o->m() == m() && o->modulus_ == modulus_;
}

std::string BinaryField::describe() const { return "GF(2^" + std::to_string(m()) + ") mod " + to_hex(modulus_); }

BinaryFieldPtr gf2() {
    static const BinaryFieldPtr instance = BinaryField::make(1);
    return instance;
}

// --- CubicExtension --------------------------------------------------------

CubicExtension::CubicExtension(BinaryFieldPtr base, Bits packed_g)
    : Field(3 * base->m()), base_(std::move(base)), g_packed_(packed_g) {
    for (unsigned i = 0; i < 3; ++i) g_[i] = coord(packed_g, i);
    auto slow = [this](Bits a, Bits b) { return schoolbook_mul(a, b); };
    rho_images_[0] = 1;
    rho_images_[1] = slow_pow(pack(0, 1, 0), base_->order(), slow);
    rho_images_[2] = schoolbook_mul(rho_images_[1], rho_images_[1]);
    if (order() <= kMaxTableOrder) build_log_tables(slow);
}

CubicExtensionPtr CubicExtension::make(BinaryFieldPtr base) {
    const Bits q = base->order();
    // packed g = g0 | g1 << m | g2 << 2m, enumerated in increasing order
    for (Bits packed = 1; packed < q * q * q; ++packed) {
        const Bits g0 = packed & (q - 1);
        if (g0 == 0) continue;
        const Bits g1 = (packed >> base->m()) & (q - 1);
        const Bits g2 = packed >> (2 * base->m());
        bool has_root = false;
        for (Bits r = 0; r < q && !has_root; ++r) {
            // ((r + g2) r + g1) r + g0
            has_root = (base->mul(base->mul(r ^ g2, r) ^ g1, r) ^ g0) == 0;
        }
        if (!has_root) return std::make_shared<const CubicExtension>(std::move(base), packed);
    }
    throw DomainError("internal", "no irreducible cubic found");  // unreachable for a field
}

CubicExtensionPtr CubicExtension::make(BinaryFieldPtr base, Bits packed_g) {
    const Bits q = base->order();
    if (packed_g >= q * q * q) throw DomainError("bad_extension", "extension polynomial out of range");
    const Bits g0 = packed_g & (q - 1);
    const Bits g1 = (packed_g >> base->m()) & (q - 1);
    const Bits g2 = packed_g >> (2 * base->m());
    for (Bits r = 0; r < q; ++r) {
        if ((base->mul(base->mul(r ^ g2, r) ^ g1, r) ^ g0) == 0) {
            throw DomainError("bad_extension", "cubic " + to_hex(packed_g) + " has a root in the base field");
        }
    }
    return std::make_shared<const CubicExtension>(std::move(base), packed_g);
}

Bits CubicExtension::schoolbook_mul(Bits a, Bits b) const {
    const BinaryField& F = *base_;
    Bits x[3], y[3], c[5] = {0, 0, 0, 0, 0};
    for (unsigned i = 0; i < 3; ++i) {
        x[i] = coord(a, i);
        y[i] = coord(b, i);
    }
    for (unsigned i = 0; i < 3; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < 3; ++j) c[i + j] ^= F.mul(x[i], y[j]);
    }
    // u^3 = g2 u^2 + g1 u + g0 in characteristic 2
    for (int k = 4; k >= 3; --k) {
        if (!c[k]) continue;
        for (unsigned i = 0; i < 3; ++i) c[k - 3 + i] ^= F.mul(c[k], g_[i]);
        c[k] = 0;
    }
    return pack(c[0], c[1], c[2]);
}

Bits CubicExtension::mul(Bits a, Bits b) const { return has_tables() ? table_mul(a, b) : schoolbook_mul(a, b); }

Bits CubicExtension::inv(Bits a) const {
    if (a == 0) throw DomainError("inverse_of_zero", "inversion of zero in " + describe());
    if (has_tables()) {
        const std::uint64_t group = order() - 1;
        return exp_[(group - log_[a]) % group];
    }
    return Field::inv(a);
}

Bits CubicExtension::apply_linear(Bits a, const Bits (&images)[3]) const noexcept {
    Bits r = 0;
    for (unsigned i = 0; i < 3; ++i) {
        const Bits s = coord(a, i);
        if (!s) continue;
        const Bits img = images[i];
        r ^= pack(base_->mul(s, coord(img, 0)), base_->mul(s, coord(img, 1)), base_->mul(s, coord(img, 2)));
    }
    return r;
}

Bits CubicExtension::frobenius(Bits a) const noexcept { return apply_linear(a, rho_images_); }

Bits CubicExtension::rel_trace(Bits a) const noexcept {
    const Bits r1 = frobenius(a);
    return a ^ r1 ^ frobenius(r1);
}

Bits CubicExtension::rel_norm(Bits a) const {
    const Bits r1 = frobenius(a);
    return mul(mul(a, r1), frobenius(r1));
}

Bits CubicExtension::form_q1(Bits a) const {
    const Bits r1 = frobenius(a);
    const Bits r2 = frobenius(r1);
    return mul(a, r1) ^ mul(a, r2) ^ mul(r1, r2);
}

Bits CubicExtension::form_q4(Bits a, Bits b) const {
    const Bits a1 = frobenius(a), a2 = frobenius(a1);
    const Bits b1 = frobenius(b), b2 = frobenius(b1);
    return mul(mul(a, a1), b2) ^ mul(mul(a, b1), a2) ^ mul(mul(b, a1), a2);
}

Bits CubicExtension::form_q5(Bits a, Bits b) const {
    const Bits a1 = frobenius(a), a2 = frobenius(a1);
    const Bits b1 = frobenius(b), b2 = frobenius(b1);
    return mul(a, b1 ^ b2) ^ mul(b, a1 ^ a2) ^ mul(a1, b2) ^ mul(b1, a2);
}

bool CubicExtension::same_as(const Field& other) const {
    auto* o = dynamic_cast<const CubicExtension*>(&other);
    return o && o->base_->same_as(*base_) && o->g_packed_ == g_packed_;
}

std::string CubicExtension::describe() const {
    return "GF(q^3) over " + base_->describe() + ", g = " + to_hex(g_packed_);
}

// --- FieldElem -------------------------------------------------------------

namespace {

void require_same(const FieldElem& a, const FieldElem& b) {
    if (!a.field()->same_as(*b.field())) {
        throw DomainError("context_mismatch",
                          "operands live in different fields: " + a.field()->describe() + " vs " + b.field()->describe());
    }
}

}  // namespace

FieldElem::FieldElem(FieldPtr field, Bits bits) : field_(std::move(field)), bits_(bits) {
    if (!field_->contains(bits_)) {
        throw DomainError("out_of_range", to_hex(bits_) + " is not an element of " + field_->describe());
    }
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.field_, a.bits_ ^ b.bits_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.field_, a.field_->mul(a.bits_, b.bits_));
}

bool operator==(const FieldElem& a, const FieldElem& b) { return a.bits_ == b.bits_ && a.field_->same_as(*b.field_); }

FieldElem add(const FieldElem& a, const FieldElem& b) { return a + b; }
FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem inv(const FieldElem& a) { return FieldElem(a.field(), a.field()->inv(a.bits())); }
FieldElem pow(const FieldElem& a, std::uint64_t n) { return FieldElem(a.field(), a.field()->pow(a.bits(), n)); }

const CubicExtension& as_extension(const Field& f) {
    auto* ext = dynamic_cast<const CubicExtension*>(&f);
    if (!ext) throw DomainError("not_extension", f.describe() + " is not a cubic extension");
    return *ext;
}

const BinaryField& as_binary(const Field& f) {
    auto* b = dynamic_cast<const BinaryField*>(&f);
    if (!b) throw DomainError("not_binary_field", f.describe() + " is not GF(2^m)");
    return *b;
}

FieldElem frobenius_q(const FieldElem& a) { return FieldElem(a.field(), as_extension(*a.field()).frobenius(a.bits())); }
FieldElem rel_trace(const FieldElem& a) { return FieldElem(a.field(), as_extension(*a.field()).rel_trace(a.bits())); }
FieldElem rel_norm(const FieldElem& a) { return FieldElem(a.field(), as_extension(*a.field()).rel_norm(a.bits())); }
FieldElem form_q1(const FieldElem& a) { return FieldElem(a.field(), as_extension(*a.field()).form_q1(a.bits())); }

FieldElem form_q4(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.field(), as_extension(*a.field()).form_q4(a.bits(), b.bits()));
}

FieldElem form_q5(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.field(), as_extension(*a.field()).form_q5(a.bits(), b.bits()));
}

// --- FieldEmbedding --------------------------------------------------------

FieldEmbedding::FieldEmbedding(BinaryFieldPtr from, BinaryFieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    if (to_->m() % from_->m() != 0) {
        throw DomainError("no_embedding", from_->describe() + " is not a subfield of " + to_->describe());
    }
    const Bits modulus = from_->modulus();
    Bits root = 0;
    bool found = false;
    for (Bits r = 0; r < to_->order() && !found; ++r) {
        Bits v = 0;
        for (int i = degree_of(modulus); i >= 0; --i) v = to_->mul(v, r) ^ ((modulus >> i) & 1);
        if (v == 0) {
            root = r;
            found = true;
        }
    }
    if (!found) throw DomainError("internal", "modulus has no root in the target field");
    basis_images_.resize(from_->m());
    Bits p = 1;
    for (unsigned i = 0; i < from_->m(); ++i) {
        basis_images_[i] = p;
        p = to_->mul(p, root);
    }
}

Bits FieldEmbedding::operator()(Bits a) const noexcept {
    Bits r = 0;
    for (unsigned i = 0; a; ++i, a >>= 1) {
        if (a & 1) r ^= basis_images_[i];
    }
    return r;
}

// --- text helpers ----------------------------------------------------------

std::string to_hex(Bits v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

Bits parse_bits(std::string_view text) {
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
        base = 16;
    }
    Bits v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("invalid integer literal '" + std::string(text) + "'");
    }
    return v;
}

FieldSpec parse_field_spec(std::string_view text) {
    FieldSpec spec;
    bool have_m = false;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("field spec item without '=': " + std::string(item));
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        if (key == "m") {
            spec.m = static_cast<unsigned>(parse_bits(value));
            have_m = true;
        } else if (key == "mod") {
            if (value.substr(0, 2) != "0x") throw ParseError("modulus must be written as 0x<hex>");
            spec.modulus = parse_bits(value);
        } else {
            throw ParseError("unknown field spec key '" + std::string(key) + "'");
        }
    }
    if (!have_m) throw ParseError("field spec requires m=<int>");
    return spec;
}

BinaryFieldPtr make_field(const FieldSpec& spec) {
    return spec.modulus ? BinaryField::make(spec.m, *spec.modulus) : BinaryField::make(spec.m);
}

}  // namespace apnphi
