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
 * @file poly.hpp
 * @brief Sparse polynomials over binary fields.
 *
 * TriPoly is a polynomial in x, y, z; UniPoly a univariate polynomial in x;
 * SymPoly a polynomial in the elementary symmetric functions s1, s2, s3.
 * Terms are kept in graded-lexicographic order with x > y > z. Zero
 * coefficients are never stored.
 */

#ifndef APNPHI_POLY_HPP
#define APNPHI_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "apnphi/field.hpp"

namespace apnphi {

enum class Var : unsigned { x = 0, y = 1, z = 2 };

/// Exponent triple x^i y^j z^k. The packed key orders monomials by
/// graded-lexicographic order, and monomial products add keys.
class Monomial {
   public:
    static constexpr unsigned kExpBits = 21;
    static constexpr std::uint64_t kMaxExp = (std::uint64_t{1} << kExpBits) - 1;

    constexpr Monomial() = default;
    Monomial(std::uint64_t i, std::uint64_t j, std::uint64_t k);

    std::uint64_t x() const noexcept { return (key_ >> kExpBits) & kMaxExp; }
    std::uint64_t y() const noexcept { return key_ & kMaxExp; }
    std::uint64_t z() const noexcept { return degree() - x() - y(); }
    std::uint64_t exp(Var v) const noexcept;
    std::uint64_t degree() const noexcept { return key_ >> (2 * kExpBits); }
    std::uint64_t key() const noexcept { return key_; }

    bool divides(const Monomial& other) const noexcept;
    /// Requires divides(other).
    Monomial cofactor_in(const Monomial& other) const noexcept { return from_key(other.key_ - key_); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

   private:
    static Monomial from_key(std::uint64_t key) noexcept {
        Monomial m;
        m.key_ = key;
        return m;
    }

    std::uint64_t key_ = 0;
};

class TriPoly {
   public:
    using TermMap = std::map<Monomial, Bits, std::greater<>>;

    explicit TriPoly(FieldPtr field);

    static TriPoly constant(FieldPtr field, Bits c);
    static TriPoly variable(FieldPtr field, Var v);
    static TriPoly monomial(FieldPtr field, const Monomial& m, Bits c = 1);

    const FieldPtr& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    long degree() const noexcept { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree()); }
    /// Largest exponent of v over all terms.
    std::uint64_t degree_in(Var v) const noexcept;
    bool is_homogeneous() const noexcept;

    Bits coeff(const Monomial& m) const noexcept;
    /// Adds c * m in place.
    void add_term(const Monomial& m, Bits c);
    /// Throws on the zero polynomial.
    const Monomial& leading_monomial() const;
    Bits leading_coeff() const;

    TriPoly& operator+=(const TriPoly& other);
    TriPoly scaled(Bits c) const;
    TriPoly embed(const FieldPtr& target) const;
    /// Coefficientwise image under a field map (e.g. the Frobenius).
    TriPoly map_coefficients(const std::function<Bits(Bits)>& fn) const;
    /// Swap variables according to a permutation: variable v becomes perm[v].
    TriPoly permuted(const std::array<Var, 3>& perm) const;

    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend bool operator==(const TriPoly& a, const TriPoly& b);

   private:
    FieldPtr field_;
    TermMap terms_;
};

TriPoly pow(const TriPoly& p, unsigned n);

/// Result of exact division: either a quotient or the leading monomial of the
/// nonzero remainder.
struct DivisionResult {
    std::optional<TriPoly> quotient;
    std::optional<Monomial> remainder_lead;

    bool exact() const noexcept { return quotient.has_value(); }
};

/// Single-divisor reduction in grlex order; exact iff the remainder is 0.
/// Operands must share a field. Throws DomainError on a zero divisor.
DivisionResult divexact(const TriPoly& n, const TriPoly& d);

/// Replace each variable by the corresponding image polynomial.
TriPoly substitute(const TriPoly& p, const std::array<TriPoly, 3>& images);
/// Evaluate at a point of the coefficient field.
Bits evaluate(const TriPoly& p, Bits x, Bits y, Bits z);
FieldElem evaluate(const TriPoly& p, const FieldElem& x, const FieldElem& y, const FieldElem& z);

TriPoly homogeneous_component(const TriPoly& p, std::uint64_t degree);
std::map<std::uint64_t, TriPoly> homogeneous_components(const TriPoly& p);

bool is_symmetric(const TriPoly& p);

/// Polynomial in s1, s2, s3; the monomial (a, b, c) stands for s1^a s2^b s3^c.
class SymPoly {
   public:
    explicit SymPoly(TriPoly rep) : rep_(std::move(rep)) {}

    static SymPoly s1(FieldPtr field) { return SymPoly(TriPoly::variable(std::move(field), Var::x)); }
    static SymPoly s2(FieldPtr field) { return SymPoly(TriPoly::variable(std::move(field), Var::y)); }
    static SymPoly s3(FieldPtr field) { return SymPoly(TriPoly::variable(std::move(field), Var::z)); }

    /// Underlying polynomial with (x, y, z) read as (s1, s2, s3).
    const TriPoly& rep() const noexcept { return rep_; }
    const FieldPtr& field() const noexcept { return rep_.field(); }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) { return SymPoly(a.rep_ + b.rep_); }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) { return SymPoly(a.rep_ * b.rep_); }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.rep_ == b.rep_; }

    std::string to_string() const;

   private:
    TriPoly rep_;
};

/// Expansion with s1 = x+y+z, s2 = xy+xz+yz, s3 = xyz.
TriPoly from_symmetric(const SymPoly& s);
/// Leading-term reduction; throws DomainError("not_symmetric").
SymPoly to_symmetric(const TriPoly& p);
/// x^i + y^i + z^i in the s-basis over GF(2), via
/// p_i = s1 p_{i-1} + s2 p_{i-2} + s3 p_{i-3}. Memoised; thread-safe.
SymPoly power_sum(unsigned i);

/// Sparse univariate polynomial (exponent -> coefficient).
class UniPoly {
   public:
    using TermMap = std::map<std::uint64_t, Bits>;

    explicit UniPoly(FieldPtr field);
    static UniPoly monomial(FieldPtr field, std::uint64_t e, Bits c = 1);
    static UniPoly constant(FieldPtr field, Bits c) { return monomial(std::move(field), 0, c); }

    const FieldPtr& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    long degree() const noexcept { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first); }
    Bits coeff(std::uint64_t e) const noexcept;
    Bits leading_coeff() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->second; }
    void add_term(std::uint64_t e, Bits c);

    UniPoly& operator+=(const UniPoly& other);
    UniPoly scaled(Bits c) const;
    UniPoly embed(const FieldPtr& target) const;

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

   private:
    FieldPtr field_;
    TermMap terms_;
};

UniPoly pow(const UniPoly& p, std::uint64_t n);
/// Square-and-multiply per sparse term.
Bits uni_eval(const UniPoly& f, Bits x);
FieldElem uni_eval(const UniPoly& f, const FieldElem& x);
/// f(g(x)) as a polynomial; no reduction modulo x^q - x.
UniPoly uni_compose(const UniPoly& f, const UniPoly& g);

// Text grammar:
//   poly   := term ('+' term)*
//   term   := [coeff '*'] factor ('*' factor)* | coeff
//   factor := var ['^' int]
//   coeff  := '0x' hex | decimal
// Whitespace is ignored. A single-factor term is the documented core form;
// products of factors are accepted so that trivariate output round-trips.
TriPoly parse_tripoly(std::string_view text, FieldPtr field);
/// Same grammar restricted to the variable x.
UniPoly parse_unipoly(std::string_view text, FieldPtr field);

std::string to_string(const TriPoly& p);
std::string to_string(const UniPoly& p);

}  // namespace apnphi

#endif  // APNPHI_POLY_HPP
