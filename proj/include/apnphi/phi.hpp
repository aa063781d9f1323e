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
 * @file phi.hpp
 * @brief The surface polynomials phi_i and phi_f.
 *
 * phi_i = (x^i + y^i + z^i + (x+y+z)^i) / ((x+y)(y+z)(z+x)) and, for
 * f = sum a_i x^i, phi_f = sum a_i phi_i. Everything here is exact.
 */

#ifndef APNPHI_PHI_HPP
#define APNPHI_PHI_HPP

#include <optional>

#include "apnphi/poly.hpp"

namespace apnphi {

/// A = (x+y)(y+z)(z+x) = s1 s2 + s3.
TriPoly denominator_poly(FieldPtr field);

/// phi_i over GF(2), lifted to `field`. Computed in the s-basis as
/// (p_i + s1^i) / (s1 s2 + s3) and expanded. Requires i >= 3. Cached.
TriPoly phi_power(unsigned i, FieldPtr field = gf2());

/// Cross-check route: expand the numerator in x, y, z and divide by A.
TriPoly phi_power_direct(unsigned i);

/// phi_f = sum a_i phi_i lifted to `target` (f's field must embed in it).
/// Terms of degree below 3 contribute nothing.
TriPoly phi_of(const UniPoly& f, const FieldPtr& target);
inline TriPoly phi_of(const UniPoly& f) { return phi_of(f, f.field()); }

/// f(x) + f(y) + f(z) + f(x+y+z) over f's field.
TriPoly phi_numerator(const UniPoly& f);

struct DivisibilityReport {
    bool divisible = false;
    /// phi = p * quotient when divisible.
    std::optional<TriPoly> quotient;
    /// Leading monomial of the remainder otherwise.
    std::optional<Monomial> witness;
};

/// Does p divide phi? Both sides are lifted to their common field first.
DivisibilityReport divides(const TriPoly& p, const TriPoly& phi);

/// (x^(e-1) + z^(e-1)) / (x+z)^2 in the variables x, z. Requires odd e >= 3.
TriPoly yz_specialisation_rhs(unsigned e);
/// phi_e(x, z, z) == yz_specialisation_rhs(e).
bool verify_yz_specialisation(unsigned e);

/// The three-term expansion of (x+z)^2 phi_e modulo s^3, where y = s + z.
/// Returned with s stored in the y slot. Requires odd e >= 5; the
/// e = 3 mod 4 and e = 1 mod 4 forms differ in the s and s^2 terms.
TriPoly mod_s3_expansion(unsigned e);
/// (x+z)^2 phi_e(x, s+z, z) truncated mod s^3 equals mod_s3_expansion(e).
bool verify_mod_s3_expansion(unsigned e);

}  // namespace apnphi

#endif  // APNPHI_PHI_HPP
