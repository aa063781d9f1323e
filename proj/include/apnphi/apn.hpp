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
 * @file apn.hpp
 * @brief Differential uniformity of functions GF(2^m) -> GF(2^m).
 */

#ifndef APNPHI_APN_HPP
#define APNPHI_APN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apnphi/field.hpp"
#include "apnphi/poly.hpp"

namespace apnphi {

struct ApnOptions {
    /// Worker threads; 0 means the available hardware parallelism.
    unsigned threads = 0;
    /// Largest m accepted without allow_large.
    unsigned max_m = 14;
    bool allow_large = false;
};

struct ApnReport {
    unsigned m = 0;
    /// max over a != 0 and b of #{x : f(x+a) + f(x) = b}.
    std::uint64_t delta = 0;
    bool is_apn = false;
    /// Solution count -> number of pairs (a, b), a != 0, with that count.
    /// Zero counts are included, so the values sum to q(q-1).
    std::map<std::uint64_t, std::uint64_t> spectrum;
    double elapsed_seconds = 0.0;
};

/// table[x] = f(x) for every x of `field`, indexed by bit pattern. The
/// coefficients of f must lie in `field`.
std::vector<Bits> build_table(const UniPoly& f, const BinaryFieldPtr& field);

/// Throws BudgetExceeded when m > opts.max_m unless opts.allow_large.
ApnReport differential_uniformity(const UniPoly& f, const BinaryFieldPtr& field, const ApnOptions& opts = {});
ApnReport differential_uniformity(const UniPoly& f, const ApnOptions& opts = {});
/// Same, from a value table of length 2^m.
ApnReport differential_uniformity(const std::vector<Bits>& table, unsigned m, const ApnOptions& opts = {});

struct ScanEntry {
    unsigned m = 0;
    std::optional<ApnReport> report;
    /// Set instead of report when this m could not be analysed.
    std::string error;
};

/// One entry per m in [m_lo, m_hi], in increasing m. f must have
/// coefficients in GF(2); per-m failures are recorded, not thrown.
std::vector<ScanEntry> scan_extensions(const UniPoly& f, unsigned m_lo, unsigned m_hi, const ApnOptions& opts = {});

}  // namespace apnphi

#endif  // APNPHI_APN_HPP
