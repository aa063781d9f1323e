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
 * @file ccz.hpp
 * @brief Linearized permutations and the decomposition f = g o L.
 *
 * For tr(c1) = 0, L(x) = x(x+c1)(x+rho c1)(x+rho^2 c1) = x^4 + q1(c1) x^2 + N(c1) x
 * is a linearized permutation of F_q. If phi_{L^3} divides phi_f for f of
 * degree 4e then g = f o L^{-1} is x^e + S(x) plus power-of-2 terms, so f is
 * EA-equivalent (hence CCZ-equivalent) to x^e + S.
 */

#ifndef APNPHI_CCZ_HPP
#define APNPHI_CCZ_HPP

#include <map>
#include <optional>
#include <string>

#include "apnphi/criteria.hpp"

namespace apnphi {

/// sum_k c_k x^(2^k) + constant over GF(2^m), k < m.
class LinearizedPoly {
   public:
    explicit LinearizedPoly(BinaryFieldPtr field) : field_(std::move(field)) {}
    /// Throws DomainError("not_linearized") if some exponent is not a power of 2
    /// (a constant term is allowed). Exponents are reduced mod x^q - x first.
    static LinearizedPoly from_unipoly(const UniPoly& p);

    const BinaryFieldPtr& field() const noexcept { return field_; }
    const std::map<unsigned, Bits>& coeffs() const noexcept { return coeffs_; }
    Bits coeff(unsigned k) const noexcept;
    Bits constant() const noexcept { return constant_; }
    void set_coeff(unsigned k, Bits c);
    void set_constant(Bits c);

    Bits operator()(Bits a) const;
    UniPoly to_unipoly() const;
    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;

   private:
    BinaryFieldPtr field_;
    std::map<unsigned, Bits> coeffs_;
    Bits constant_ = 0;
};

/// x^4 + q1(c1) x^2 + N(c1) x over the base of c1's extension. Throws
/// DomainError("nonzero_trace") unless tr(c1) = 0.
LinearizedPoly build_L(const FieldElem& c1);

/// The linear part has trivial kernel (GF(2) rank m).
bool is_permutation(const LinearizedPoly& L);
/// Compositional inverse as a linearized polynomial with exponents below q.
/// Throws DomainError("not_permutation").
LinearizedPoly invert(const LinearizedPoly& L);

/// Exponents e > 0 folded into 1..q-1, so p and the result agree on F_q.
UniPoly reduce_mod_xq(const UniPoly& p);

/// Full-domain interpolation: the reduced polynomial with the given values.
UniPoly interpolate(const std::vector<Bits>& values, const BinaryFieldPtr& field);

struct CczDecomposition {
    unsigned e = 0;
    /// Coefficient of x^e in g; 1 when f is monic.
    Bits leading = 1;
    /// Terms of g of degree below e whose exponent is not a power of 2.
    UniPoly S;
    /// Power-of-2 and constant terms of g.
    UniPoly residual;
    /// residual o L reduced mod x^q - x; the same terms seen from f.
    UniPoly residual_in_f;
    /// g = f o L^{-1}, reduced.
    UniPoly g;
    LinearizedPoly L;
    LinearizedPoly L_inverse;
};

struct CczResult {
    std::optional<CczDecomposition> decomposition;
    /// Why the decomposition failed when it did.
    std::string reason;

    bool decomposable() const noexcept { return decomposition.has_value(); }
};

/// Largest field accepted by ccz_decompose (interpolation is O(q^2)).
inline constexpr unsigned kCczMaxDegree = 12;

/// Requires f over GF(2^m) with deg f = 4e, e >= 3, 4e < q, and c1 in the
/// default cubic extension (or any cubic extension of f's field) with
/// tr(c1) = 0. Failure of phi_{L^3} | phi_f or an unexpected monomial in g
/// is reported in the result, not thrown.
CczResult ccz_decompose(const UniPoly& f, const FieldElem& c1);

struct PowerDivisibilityReport {
    bool holds = true;
    /// First n with phi_{L^3} not dividing phi_{L^n}.
    std::optional<unsigned> failing_n;
};

/// phi_{L^3} | phi_{L^n} for n = 3..n_max.
PowerDivisibilityReport verify_power_divisibility(const FieldElem& c1, unsigned n_max);

}  // namespace apnphi

#endif  // APNPHI_CCZ_HPP
