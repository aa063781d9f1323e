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
 * @file criteria.hpp
 * @brief Exponent classification and the divisor test for phi_f.
 *
 * A function f of degree 4e whose phi_f has no factor A + R, with
 * R = c1 (x^2+y^2+z^2) + c4 (xy+xz+yz) + b1 (x+y+z) + d1 over F_{q^3}, is
 * not exceptional APN. When such a factor exists R must be
 * c1 phi_5 + c1^3 with tr(c1) = 0, and then
 * (A+R)(A+rho R)(A+rho^2 R) = phi_{L^3} for L = x(x+c1)(x+rho c1)(x+rho^2 c1).
 */

#ifndef APNPHI_CRITERIA_HPP
#define APNPHI_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apnphi/phi.hpp"

namespace apnphi {

enum class ExponentKind {
    gold,
    kasami,
    even_reducible,
    cong_3_mod_4_irreducible,
    cong_5_mod_8_conditional,
    unknown,
};

/// "gold", "kasami", "even-reducible", "cong-3-mod-4-irreducible",
/// "cong-5-mod-8-conditional" or "unknown".
std::string to_string(ExponentKind kind);

struct ExponentClass {
    std::uint64_t e = 0;
    ExponentKind kind = ExponentKind::unknown;
    /// i with e = 2^i + 1 (gold) or e = 4^i - 2^i + 1 (kasami).
    std::optional<unsigned> witness;
    std::string note;
};

/// Gold and Kasami take precedence over the congruence classes. For
/// e = 5 mod 8 the cyclic-code hypothesis that makes phi_e absolutely
/// irreducible is not evaluated, so the result is only conditional
/// (e = 205 is the smallest exponent where it fails). Throws for e < 3.
ExponentClass classify_exponent(std::uint64_t e);

struct DivisorCandidate {
    FieldElem c1, c4, b1, d1;
};

/// The candidate R = c1 phi_5 + c1^3, i.e. c4 = c1, b1 = 0, d1 = c1^3.
DivisorCandidate specialised_candidate(const FieldElem& c1);

TriPoly build_R(const DivisorCandidate& cand);
/// c1 phi_5 + c1^3; throws DomainError("nonzero_trace") unless tr(c1) = 0.
TriPoly build_R_specialised(const FieldElem& c1);

/// (A+R)(A+rho R)(A+rho^2 R), rho acting on coefficients.
TriPoly galois_product(const TriPoly& R);

struct DivisorReport {
    /// (A + R) | phi_f over F_{q^3}.
    DivisibilityReport single;
    /// (A+R)(A+rho R)(A+rho^2 R) | phi_f.
    DivisibilityReport product;
};

/// f is over F_q and must have degree 4e, e >= 3; the candidate lives in a
/// cubic extension of f's field.
DivisorReport divisor_test(const UniPoly& f, const DivisorCandidate& cand);

/// Fixed seed used by sampled scans unless overridden.
inline constexpr std::uint64_t kDefaultScanSeed = 20140513;

struct ScanOptions {
    /// Exhaustive enumeration is used for m <= this.
    unsigned exhaustive_max_m = 4;
    /// Permit random sampling above exhaustive_max_m.
    bool allow_sampling = false;
    std::uint64_t samples = 64;
    std::uint64_t seed = kDefaultScanSeed;
    /// 0 means the available hardware parallelism.
    unsigned threads = 0;
};

struct DivisorHit {
    /// Canonical representative: smallest bit pattern among c1, rho c1, rho^2 c1.
    FieldElem c1;
    DivisorReport report;
};

struct DivisorScanResult {
    bool exhaustive = false;
    std::uint64_t seed = 0;
    /// Number of distinct canonical candidates tested.
    std::uint64_t candidates = 0;
    /// Hits in increasing order of c1.
    std::vector<DivisorHit> hits;
};

/// Tests A + c1 phi_5 + c1^3 | phi_f for trace-zero c1 in the default cubic
/// extension of f's field. Conjugate c1 give the same product and are tested
/// once. Above exhaustive_max_m, c1 = 0 plus `samples` random candidates are
/// tested when sampling is allowed; otherwise BudgetExceeded is thrown.
DivisorScanResult divisor_scan(const UniPoly& f, const ScanOptions& opts = {});

/// Smallest bit pattern among the conjugates of a.
Bits canonical_conjugate(const CubicExtension& ext, Bits a);

/// All elements of trace zero, increasing.
std::vector<Bits> trace_zero_elements(const CubicExtension& ext);

/// galois_product(build_R_specialised(c1)) == phi_{L^3}, with L expanded from its
/// four linear factors over F_{q^3}. Throws unless tr(c1) = 0.
bool verify_conjugate_product(const FieldElem& c1);

/// x (x + c)(x + rho c)(x + rho^2 c) over the extension containing c.
UniPoly conjugate_product_L(const FieldElem& c);

}  // namespace apnphi

#endif  // APNPHI_CRITERIA_HPP
