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
 * @file geometry.hpp
 * @brief Point counts on phi_f = 0 and plane curves, with a Weil-band
 *        comparison used as numerical evidence for an absolutely irreducible
 *        component over the ground field.
 *
 * Verdicts are heuristic evidence only. The band for a curve of degree d over
 * F_Q is Q +- ((d-1)(d-2) sqrt(Q) + d^2); the d^2 term is a generous allowance
 * for singular points and points at infinity, not a proven constant.
 */

#ifndef APNPHI_GEOMETRY_HPP
#define APNPHI_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "apnphi/poly.hpp"

namespace apnphi {

struct PointCountReport {
    /// Points are counted over GF(2^k).
    unsigned k = 0;
    std::uint64_t count = 0;
    unsigned degree = 0;
    double band_low = 0.0;
    double band_high = 0.0;

    bool in_band() const noexcept {
        return static_cast<double>(count) >= band_low && static_cast<double>(count) <= band_high;
    }
};

struct CountOptions {
    /// count_curve_points accepts k up to this.
    unsigned max_curve_k = 12;
    /// count_surface_points accepts Q^2 up to 2^max_surface_log2.
    unsigned max_surface_log2 = 20;
    /// 0 means the available hardware parallelism.
    unsigned threads = 0;
};

/// p(x, y, 1): the affine chart z = 1.
TriPoly dehomogenize(const TriPoly& p);

/// Affine points of p(x, y) = 0 over GF(2^k). p must not involve z and its
/// field GF(2^m) must satisfy m | k. Throws DomainError for p = 0 and
/// BudgetExceeded for k above the budget.
PointCountReport count_curve_points(const TriPoly& p, unsigned k, const CountOptions& opts = {});

/// Affine points of p(x, y, z) = 0 over GF(2^(m * multiplier)) where p is over
/// GF(2^m). The band is Q^2 +- ((d-1)(d-2) Q^1.5 + d^2 Q).
PointCountReport count_surface_points(const TriPoly& p, unsigned multiplier = 1, const CountOptions& opts = {});

enum class Evidence { for_component, against_component, inconclusive };

/// "evidence-for", "evidence-against", "inconclusive".
std::string to_string(Evidence v);

struct EvidenceReport {
    Evidence verdict = Evidence::inconclusive;
    std::vector<PointCountReport> counts;
    /// For evidence-against: the t whose multiples carry all the points.
    unsigned period = 0;
    std::string explanation;
};

/// Curve counts for each k, then:
///  - against: for some t in 2..d, every k not divisible by t has at most
///    d^2 points while some multiple of t has more (the signature of t
///    conjugate components over GF(2^t));
///  - for: every count lies in the single-component Weil band;
///  - otherwise inconclusive.
/// Needs at least three values of k (DomainError("insufficient_data")).
EvidenceReport component_evidence(const TriPoly& p, const std::vector<unsigned>& ks, const CountOptions& opts = {});

}  // namespace apnphi

#endif  // APNPHI_GEOMETRY_HPP
