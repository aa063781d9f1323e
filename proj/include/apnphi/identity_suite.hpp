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

#ifndef APNPHI_IDENTITY_SUITE_HPP
#define APNPHI_IDENTITY_SUITE_HPP

#include <string>
#include <vector>

namespace apnphi {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs every exact identity the library relies on: the phi_i basics, the
/// symmetric-basis relations, the y = z specialisation, the mod s^3
/// expansions, the conjugate product identity for L^3 and the divisibility
/// chain phi_{L^3} | phi_{L^n}. Deterministic.
std::vector<IdentityCheck> run_identity_suite();

}  // namespace apnphi

#endif  // APNPHI_IDENTITY_SUITE_HPP
