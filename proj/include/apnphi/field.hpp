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

/**
 * @file field.hpp
 * @brief Binary fields GF(2^m) and their cubic extensions GF(q^3).
 *
 * Elements are plain bit-vectors (`Bits`). In GF(2^m) bit i is the
 * coefficient of t^i in the polynomial basis. In the cubic extension
 * F_q[u]/(g) an element a0 + a1 u + a2 u^2 is packed as
 * a0 | a1 << m | a2 << 2m, so the embedding F_2 -> F_q -> F_{q^3} is the
 * identity on bits.
 *
 * Fields are immutable after construction and are shared through
 * `FieldPtr`; all arithmetic members are const and thread-safe.
 */

#ifndef APNPHI_FIELD_HPP
#define APNPHI_FIELD_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apnphi/error.hpp"

namespace apnphi {

using Bits = std::uint64_t;

class Field;
class BinaryField;
class CubicExtension;
using FieldPtr = std::shared_ptr<const Field>;
using BinaryFieldPtr = std::shared_ptr<const BinaryField>;
using CubicExtensionPtr = std::shared_ptr<const CubicExtension>;

/// Common interface of every coefficient field used in the library.
class Field {
   public:
    virtual ~Field() = default;

    /// Degree over GF(2); elements are bit-vectors of this width.
    unsigned bit_width() const noexcept { return width_; }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << width_; }
    bool contains(Bits a) const noexcept { return (a >> width_) == 0; }

    virtual Bits mul(Bits a, Bits b) const = 0;
    Bits sqr(Bits a) const { return mul(a, a); }
    virtual Bits pow(Bits a, std::uint64_t n) const;
    /// Throws DomainError("inverse_of_zero") for a == 0.
    virtual Bits inv(Bits a) const;

    /// Structural equality (same construction parameters).
    virtual bool same_as(const Field& other) const = 0;
    virtual std::string describe() const = 0;

   protected:
    explicit Field(unsigned width) : width_(width) {}

    // exp/log tables, built when the multiplicative group is small enough
    void build_log_tables(const std::function<Bits(Bits, Bits)>& slow_mul);
    bool has_tables() const noexcept { return !exp_.empty(); }
    Bits table_mul(Bits a, Bits b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    Bits generator_ = 1;

   private:
    unsigned width_;
};

/// True iff elements of `sub` are elements of `big` under the bit-identity
/// embedding (F_2 in anything, F_q in F_q, F_q in its cubic extension).
bool embeds_into(const Field& sub, const Field& big);

/// The larger of two fields related by bit-identity embedding. Throws
/// DomainError("context_mismatch") otherwise.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// GF(2^m) = GF(2)[t]/(modulus), 1 <= m <= 16.
class BinaryField : public Field {
   public:
    static constexpr unsigned kMaxDegree = 16;

    /// Field with the default (numerically smallest irreducible) modulus.
    static BinaryFieldPtr make(unsigned m);
    /// Field with an explicit modulus; verified irreducible.
    static BinaryFieldPtr make(unsigned m, Bits modulus);

    unsigned m() const noexcept { return bit_width(); }
    Bits modulus() const noexcept { return modulus_; }
    /// Generator of the multiplicative group used for the log tables.
    Bits generator() const noexcept { return generator_; }

    Bits mul(Bits a, Bits b) const override { return table_mul(a, b); }
    Bits pow(Bits a, std::uint64_t n) const override;
    Bits inv(Bits a) const override;
    /// Absolute trace GF(2^m) -> GF(2).
    Bits abs_trace(Bits a) const;

    bool same_as(const Field& other) const override;
    std::string describe() const override;

    BinaryField(unsigned m, Bits modulus);  // use make()

   private:
    Bits modulus_;
};

/// The shared GF(2) instance.
BinaryFieldPtr gf2();

/// Numerically smallest irreducible polynomial of degree m over GF(2), m <= 16.
Bits default_modulus(unsigned m);

/// Exhaustive irreducibility test over GF(2) (trial division), degree <= 32.
bool is_irreducible_gf2(Bits poly);

/// Carry-less product of two GF(2)[t] polynomials reduced modulo `modulus`.
Bits clmul_mod(Bits a, Bits b, Bits modulus);

/// F_{q^3} = F_q[u]/(g) with g = u^3 + g2 u^2 + g1 u + g0.
class CubicExtension : public Field {
   public:
    /// Default g: numerically smallest monic cubic without a root in F_q,
    /// ordered by the packed value g0 | g1 << m | g2 << 2m.
    static CubicExtensionPtr make(BinaryFieldPtr base);
    /// Explicit g given as packed (g0, g1, g2); must have no root in F_q.
    static CubicExtensionPtr make(BinaryFieldPtr base, Bits packed_g);

    const BinaryFieldPtr& base() const noexcept { return base_; }
    unsigned m() const noexcept { return base_->m(); }
    /// Packed low coefficients (g0, g1, g2) of the defining cubic.
    Bits packed_g() const noexcept { return g_packed_; }

    Bits mul(Bits a, Bits b) const override;
    Bits inv(Bits a) const override;

    /// rho(a) = a^q, the generator of Gal(F_{q^3}/F_q).
    Bits frobenius(Bits a) const noexcept;
    /// Coordinate i (0..2) of a in the basis 1, u, u^2.
    Bits coord(Bits a, unsigned i) const noexcept { return (a >> (i * m())) & (base_->order() - 1); }
    Bits pack(Bits a0, Bits a1, Bits a2) const noexcept { return a0 | (a1 << m()) | (a2 << (2 * m())); }
    /// a lies in the embedded F_q.
    bool in_base(Bits a) const noexcept { return base_->contains(a); }

    Bits rel_trace(Bits a) const noexcept;
    Bits rel_norm(Bits a) const;
    Bits form_q1(Bits a) const;
    Bits form_q4(Bits a, Bits b) const;
    Bits form_q5(Bits a, Bits b) const;

    bool same_as(const Field& other) const override;
    std::string describe() const override;

    CubicExtension(BinaryFieldPtr base, Bits packed_g);  // use make()

   private:
    Bits schoolbook_mul(Bits a, Bits b) const;
    Bits apply_linear(Bits a, const Bits (&images)[3]) const noexcept;

    BinaryFieldPtr base_;
    Bits g_packed_;
    Bits g_[3];
    Bits rho_images_[3];  // rho(1), rho(u), rho(u^2)
};

/// Field element carrying its context. Mixed-context arithmetic throws.
class FieldElem {
   public:
    FieldElem(FieldPtr field, Bits bits);

    Bits bits() const noexcept { return bits_; }
    const FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return bits_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);

   private:
    FieldPtr field_;
    Bits bits_;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem inv(const FieldElem& a);
FieldElem pow(const FieldElem& a, std::uint64_t n);

// Galois-side operations; each requires an element of a CubicExtension and
// throws DomainError("not_extension") otherwise.
FieldElem frobenius_q(const FieldElem& a);
FieldElem rel_trace(const FieldElem& a);
FieldElem rel_norm(const FieldElem& a);
FieldElem form_q1(const FieldElem& a);
FieldElem form_q4(const FieldElem& a, const FieldElem& b);
FieldElem form_q5(const FieldElem& a, const FieldElem& b);

const CubicExtension& as_extension(const Field& f);
const BinaryField& as_binary(const Field& f);

/// Embedding GF(2^m) -> GF(2^k) for m | k, sending t to a root of the
/// source modulus (the smallest such root by bit pattern).
class FieldEmbedding {
   public:
    FieldEmbedding(BinaryFieldPtr from, BinaryFieldPtr to);
    Bits operator()(Bits a) const noexcept;
    const BinaryFieldPtr& from() const noexcept { return from_; }
    const BinaryFieldPtr& to() const noexcept { return to_; }

   private:
    BinaryFieldPtr from_;
    BinaryFieldPtr to_;
    std::vector<Bits> basis_images_;
};

/// Parsed form of `m=<int>[,mod=0x<hex>]`.
struct FieldSpec {
    unsigned m = 0;
    std::optional<Bits> modulus;
};

FieldSpec parse_field_spec(std::string_view text);
BinaryFieldPtr make_field(const FieldSpec& spec);

std::string to_hex(Bits v);
/// Accepts 0x-prefixed hex or plain decimal.
Bits parse_bits(std::string_view text);

}  // namespace apnphi

#endif  // APNPHI_FIELD_HPP
