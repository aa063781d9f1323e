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

#include "apnphi/phi.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace apnphi {

namespace {

TriPoly var(Var v) { return TriPoly::variable(gf2(), v); }

void require_odd(unsigned e, unsigned min) {
    if (e % 2 == 0 || e < min) {
        throw DomainError("bad_exponent", "exponent must be odd and >= " + std::to_string(min) + ", got " +
                                              std::to_string(e));
    }
}

TriPoly exact(const TriPoly& n, const TriPoly& d) {
    auto r = divexact(n, d);
    if (!r.exact()) throw DomainError("internal", "expected exact division failed");
    return std::move(*r.quotient);
}

}  // namespace

TriPoly denominator_poly(FieldPtr field) {
    const auto x = TriPoly::variable(field, Var::x);
    const auto y = TriPoly::variable(field, Var::y);
    const auto z = TriPoly::variable(field, Var::z);
    return (x + y) * (y + z) * (z + x);
}

TriPoly phi_power(unsigned i, FieldPtr field) {
    if (i < 3) throw DomainError("bad_exponent", "phi_i is defined for i >= 3, got " + std::to_string(i));
    static std::shared_mutex mutex;
    static std::map<unsigned, TriPoly> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(i); it != cache.end()) return it->second.embed(field);
    }
    const auto F = gf2();
    const SymPoly s1 = SymPoly::s1(F);
    SymPoly s1_pow(TriPoly::constant(F, 1));
    for (unsigned k = 0; k < i; ++k) s1_pow = s1_pow * s1;
    const SymPoly a = s1 * SymPoly::s2(F) + SymPoly::s3(F);
    const TriPoly quotient = exact((power_sum(i) + s1_pow).rep(), a.rep());
    TriPoly phi = from_symmetric(SymPoly(quotient));
    {
        std::unique_lock lock(mutex);
        cache.emplace(i, phi);
    }
    return phi.embed(field);
}

TriPoly phi_power_direct(unsigned i) {
    if (i < 3) throw DomainError("bad_exponent", "phi_i is defined for i >= 3, got " + std::to_string(i));
    const auto x = var(Var::x), y = var(Var::y), z = var(Var::z);
    const TriPoly numerator = pow(x, i) + pow(y, i) + pow(z, i) + pow(x + y + z, i);
    return exact(numerator, denominator_poly(gf2()));
}

TriPoly phi_of(const UniPoly& f, const FieldPtr& target) {
    if (!embeds_into(*f.field(), *target)) {
        throw DomainError("context_mismatch", f.field()->describe() + " does not embed into " + target->describe());
    }
    TriPoly acc(target);
    for (const auto& [e, c] : f.terms()) {
        if (e < 3) continue;
        acc += phi_power(static_cast<unsigned>(e), target).scaled(c);
    }
    return acc;
}

TriPoly phi_numerator(const UniPoly& f) {
    const FieldPtr& F = f.field();
    const auto x = TriPoly::variable(F, Var::x), y = TriPoly::variable(F, Var::y), z = TriPoly::variable(F, Var::z);
    const TriPoly s = x + y + z;
    TriPoly acc(F);
    for (const auto& [e, c] : f.terms()) {
        const auto n = static_cast<unsigned>(e);
        acc += (pow(x, n) + pow(y, n) + pow(z, n) + pow(s, n)).scaled(c);
    }
    return acc;
}

DivisibilityReport divides(const TriPoly& p, const TriPoly& phi) {
    const FieldPtr F = common_field(p.field(), phi.field());
    auto r = divexact(phi.embed(F), p.embed(F));
    DivisibilityReport report;
    report.divisible = r.exact();
    report.quotient = std::move(r.quotient);
    report.witness = r.remainder_lead;
    return report;
}

TriPoly yz_specialisation_rhs(unsigned e) {
    require_odd(e, 3);
    const auto x = var(Var::x), z = var(Var::z);
    return exact(pow(x, e - 1) + pow(z, e - 1), pow(x + z, 2));
}

bool verify_yz_specialisation(unsigned e) {
    require_odd(e, 3);
    const auto x = var(Var::x), z = var(Var::z);
    return substitute(phi_power(e), {x, z, z}) == yz_specialisation_rhs(e);
}

TriPoly mod_s3_expansion(unsigned e) {
    require_odd(e, 5);
    const auto x = var(Var::x), s = var(Var::y), z = var(Var::z);
    const TriPoly xz = x + z;
    const TriPoly head = pow(x, e - 1) + pow(z, e - 1);
    TriPoly first(gf2()), second(gf2());
    if (e % 4 == 3) {
        first = exact(pow(x, e - 2) * z + pow(z, e - 2) * x, xz);
        second = exact((pow(x, e - 3) + pow(z, e - 3)) * (x * x + z * z + x * z), pow(xz, 2));
    } else {
        first = exact(head, xz);
        second = exact(head, pow(xz, 2));
    }
    return head + s * first + s * s * second;
}

bool verify_mod_s3_expansion(unsigned e) {
    require_odd(e, 5);
    const auto x = var(Var::x), s = var(Var::y), z = var(Var::z);
    const TriPoly lhs = substitute(pow(x + z, 2) * phi_power(e), {x, s + z, z});
    TriPoly truncated(gf2());
    for (const auto& [m, c] : lhs.terms()) {
        if (m.y() < 3) truncated.add_term(m, c);
    }
    return truncated == mod_s3_expansion(e);
}

}  // namespace apnphi
