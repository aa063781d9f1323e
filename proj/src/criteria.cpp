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

#include "apnphi/criteria.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <thread>

namespace apnphi {

namespace {

void require_trace_zero(const FieldElem& c1) {
    if (!rel_trace(c1).is_zero())
        throw DomainError("nonzero_trace", "c1 must have relative trace 0, got tr(c1) = " + to_hex(rel_trace(c1).bits()));
}

const FieldPtr& same_field(const DivisorCandidate& c) {
    for (const FieldElem* e : {&c.c4, &c.b1, &c.d1})
        if (!e->field()->same_as(*c.c1.field()))
            throw DomainError("context_mismatch", "candidate coefficients lie in different fields");
    as_extension(*c.c1.field());
    return c.c1.field();
}

}  // namespace

std::string to_string(ExponentKind kind) {
    switch (kind) {
        case ExponentKind::gold: return "gold";
        case ExponentKind::kasami: return "kasami";
        case ExponentKind::even_reducible: return "even-reducible";
        case ExponentKind::cong_3_mod_4_irreducible: return "cong-3-mod-4-irreducible";
        case ExponentKind::cong_5_mod_8_conditional: return "cong-5-mod-8-conditional";
        case ExponentKind::unknown: return "unknown";
    }
    return "unknown";
}

ExponentClass classify_exponent(std::uint64_t e) {
    if (e < 3) throw DomainError("exponent_too_small", "exponent must be at least 3, got " + std::to_string(e));
    ExponentClass out;
    out.e = e;
    const std::uint64_t g = e - 1;
    if ((g & (g - 1)) == 0) {
        out.kind = ExponentKind::gold;
        out.witness = static_cast<unsigned>(std::countr_zero(g));
        out.note = "e = 2^i + 1";
        return out;
    }
    for (unsigned i = 2; i < 32; ++i) {
        const std::uint64_t k = (std::uint64_t{1} << (2 * i)) - (std::uint64_t{1} << i) + 1;
        if (k > e) break;
        if (k == e) {
            out.kind = ExponentKind::kasami;
            out.witness = i;
            out.note = "e = 4^i - 2^i + 1";
            return out;
        }
    }
    if (e % 2 == 0) {
        out.kind = ExponentKind::even_reducible;
        out.note = "phi_e is not irreducible for even e";
    } else if (e % 4 == 3) {
        out.kind = ExponentKind::cong_3_mod_4_irreducible;
        out.note = "phi_e is absolutely irreducible for e = 3 mod 4";
    } else if (e % 8 == 5) {
        out.kind = ExponentKind::cong_5_mod_8_conditional;
        out.note =
            "conditional: phi_e is absolutely irreducible if the maximum cyclic code of length (e-1)/4 has no "
            "codewords of weight 4; this hypothesis is not evaluated here";
        if (e == 205) out.note += "; 205 is the smallest odd exponent, neither Gold nor Kasami, where irreducibility fails";
    } else {
        out.kind = ExponentKind::unknown;
        out.note = "no criterion applies";
    }
    return out;
}

DivisorCandidate specialised_candidate(const FieldElem& c1) {
    const FieldElem zero(c1.field(), 0);
    return {c1, c1, zero, pow(c1, 3)};
}

TriPoly build_R(const DivisorCandidate& cand) {
    const FieldPtr& F = same_field(cand);
    const TriPoly x = TriPoly::variable(F, Var::x), y = TriPoly::variable(F, Var::y), z = TriPoly::variable(F, Var::z);
    TriPoly R = (x * x + y * y + z * z).scaled(cand.c1.bits());
    R += (x * y + x * z + z * y).scaled(cand.c4.bits());
    R += (x + y + z).scaled(cand.b1.bits());
    R += TriPoly::constant(F, cand.d1.bits());
    return R;
}

TriPoly build_R_specialised(const FieldElem& c1) {
    require_trace_zero(c1);
    return phi_power(5, c1.field()).scaled(c1.bits()) + TriPoly::constant(c1.field(), pow(c1, 3).bits());
}

TriPoly galois_product(const TriPoly& R) {
    const auto& ext = as_extension(*R.field());
    const auto rho = [&ext](Bits a) { return ext.frobenius(a); };
    const TriPoly A = denominator_poly(R.field());
    const TriPoly R1 = R.map_coefficients(rho);
    const TriPoly R2 = R1.map_coefficients(rho);
    return (A + R) * (A + R1) * (A + R2);
}

DivisorReport divisor_test(const UniPoly& f, const DivisorCandidate& cand) {
    const FieldPtr& F = same_field(cand);
    if (f.degree() < 12 || f.degree() % 4 != 0)
        throw DomainError("bad_degree", "f must have degree 4e with e >= 3, got " + std::to_string(f.degree()));
    const TriPoly phi = phi_of(f, F);
    const TriPoly R = build_R(cand);
    DivisorReport rep;
    rep.single = divides(denominator_poly(F) + R, phi);
    rep.product = divides(galois_product(R), phi);
    return rep;
}

Bits canonical_conjugate(const CubicExtension& ext, Bits a) {
    const Bits b = ext.frobenius(a);
    return std::min({a, b, ext.frobenius(b)});
}

std::vector<Bits> trace_zero_elements(const CubicExtension& ext) {
    std::vector<Bits> out;
    for (Bits a = 0; a < ext.order(); ++a)
        if (ext.rel_trace(a) == 0) out.push_back(a);
    return out;
}

DivisorScanResult divisor_scan(const UniPoly& f, const ScanOptions& opts) {
    auto base = std::dynamic_pointer_cast<const BinaryField>(f.field());
    if (!base) throw DomainError("not_binary_field", "divisor scan needs f over GF(2^m)");
    if (f.degree() < 12 || f.degree() % 4 != 0)
        throw DomainError("bad_degree", "f must have degree 4e with e >= 3, got " + std::to_string(f.degree()));
    const auto ext = CubicExtension::make(base);

    DivisorScanResult result;
    std::vector<Bits> candidates;
    if (base->m() <= opts.exhaustive_max_m) {
        result.exhaustive = true;
        std::set<Bits> reps;
        for (Bits a : trace_zero_elements(*ext)) reps.insert(canonical_conjugate(*ext, a));
        candidates.assign(reps.begin(), reps.end());
    } else {
        if (!opts.allow_sampling)
            throw BudgetExceeded("exhaustive scan limited to m <= " + std::to_string(opts.exhaustive_max_m) +
                                 "; enable sampling for m = " + std::to_string(base->m()));
        result.seed = opts.seed;
        std::mt19937_64 rng(opts.seed);
        std::set<Bits> reps{0};
        const Bits mask = ext->order() - 1;
        for (std::uint64_t tries = 0; reps.size() < opts.samples + 1 && tries < 16 * (opts.samples + 1); ++tries) {
            const Bits a = rng() & mask;
            // tr(1) = 1, so subtracting tr(a) lands in the trace-zero kernel
            reps.insert(canonical_conjugate(*ext, a ^ ext->rel_trace(a)));
        }
        candidates.assign(reps.begin(), reps.end());
    }
    result.candidates = candidates.size();

    const TriPoly phi = phi_of(f, ext);
    const TriPoly A = denominator_poly(ext);
    std::vector<std::optional<DivisorReport>> found(candidates.size());
    const auto work = [&](std::size_t first, std::size_t step) {
        for (std::size_t i = first; i < candidates.size(); i += step) {
            const FieldElem c1(ext, candidates[i]);
            const TriPoly R = build_R_specialised(c1);
            DivisorReport rep;
            rep.single = divides(A + R, phi);
            if (!rep.single.divisible) continue;
            rep.product = divides(galois_product(R), phi);
            found[i] = std::move(rep);
        }
    };
    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, candidates.size())));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (found[i]) result.hits.push_back({FieldElem(ext, candidates[i]), std::move(*found[i])});
    return result;
}

UniPoly conjugate_product_L(const FieldElem& c) {
    const FieldPtr& F = c.field();
    const FieldElem c1 = frobenius_q(c), c2 = frobenius_q(c1);
    UniPoly L = UniPoly::monomial(F, 1);
    for (const FieldElem* r : {&c, &c1, &c2}) L = L * (UniPoly::monomial(F, 1) + UniPoly::constant(F, r->bits()));
    return L;
}

bool verify_conjugate_product(const FieldElem& c1) {
    const TriPoly lhs = galois_product(build_R_specialised(c1));
    return lhs == phi_of(pow(conjugate_product_L(c1), 3));
}

}  // namespace apnphi
