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

#ifndef APNPHI_ERROR_HPP
#define APNPHI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace apnphi {

/// Violated precondition or mathematically invalid request (inverting zero,
/// mixing fields, a non-symmetric input where one is required, ...).
class DomainError : public std::runtime_error {
   public:
    DomainError(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}

    /// Short machine-readable tag, e.g. "context_mismatch".
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

class ParseError : public DomainError {
   public:
    explicit ParseError(const std::string& what) : DomainError("parse_error", what) {}
};

/// A computation would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace apnphi

#endif  // APNPHI_ERROR_HPP
