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

#include "apnphi/ccz.hpp"

#include <bit>
#include <vector>

namespace apnphi {

namespace {

bool is_pow2(std::uint64_t e) { return e != 0 && (e & (e - 1)) == 0; }

// Inverse of the GF(2) matrix whose column j is cols[j], or nullopt if singular.
std::optional<std::vector<Bits>> invert_gf2(const std::vector<Bits>& cols) {
    const unsigned n = static_cast<unsigned>(cols.size());
    // row i: bits 0..n-1 hold the matrix row, bits n..2n-1 the identity
    std::vector<Bits> rows(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            if ((cols[j] >> i) & 1) rows[i] |= Bits{1} << j;
        rows[i] |= Bits{1} << (n + i);
    }
    for (unsigned c = 0; c < n; ++c) {
        unsigned p = c;
        while (p < n && !((rows[p] >> c) & 1)) ++p;
        if (p == n) return std::nullopt;
        std::swap(rows[p], rows[c]);
        for (unsigned r = 0; r < n; ++r)
            if (r != c && ((rows[r] >> c) & 1)) rows[r] ^= rows[c];
    }
    std::vector<Bits> inv_cols(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if ((rows[i] >> (n + j)) & 1) inv_cols[j] |= Bits{1} << i;
    return inv_cols;
}

std::vector<Bits> linear_columns(const LinearizedPoly& L) {
    const unsigned m = L.field()->m();
    std::vector<Bits> cols(m);
    for (unsigned j = 0; j < m; ++j) cols[j] = L(Bits{1} << j) ^ L.constant();
    return cols;
}

// Solve M b = rhs over a field by Gauss-Jordan elimination; M is invertible.
std::vector<Bits> solve(const Field& F, std::vector<std::vector<Bits>> M, std::vector<Bits> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) throw DomainError("internal_error", "singular Moore matrix");
        std::swap(M[p], M[c]);
        std::swap(rhs[p], rhs[c]);
        const Bits s = F.inv(M[c][c]);
        for (auto& v : M[c]) v = F.mul(v, s);
        rhs[c] = F.mul(rhs[c], s);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            const Bits t = M[r][c];
            for (std::size_t k = 0; k < n; ++k) M[r][k] ^= F.mul(t, M[c][k]);
            rhs[r] ^= F.mul(t, rhs[c]);
        }
    }
    return rhs;
}

}  // namespace

Bits LinearizedPoly::coeff(unsigned k) const noexcept {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
}

void LinearizedPoly::set_coeff(unsigned k, Bits c) {
    if (!field_->contains(c)) throw DomainError("context_mismatch", "coefficient " + to_hex(c) + " outside the field");
    if (k >= 64) throw DomainError("bad_exponent", "exponent 2^k needs k < 64");
    if (c == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

void LinearizedPoly::set_constant(Bits c) {
    if (!field_->contains(c)) throw DomainError("context_mismatch", "constant " + to_hex(c) + " outside the field");
    constant_ = c;
}

LinearizedPoly LinearizedPoly::from_unipoly(const UniPoly& p) {
    auto field = std::dynamic_pointer_cast<const BinaryField>(p.field());
    if (!field) throw DomainError("not_binary_field", "linearized polynomials live over GF(2^m)");
    LinearizedPoly out(field);
    const UniPoly reduced = reduce_mod_xq(p);
    for (const auto& [e, c] : reduced.terms()) {
        if (e == 0)
            out.set_constant(c);
        else if (is_pow2(e))
            out.set_coeff(static_cast<unsigned>(std::countr_zero(e)), c);
        else
            throw DomainError("not_linearized", "exponent " + std::to_string(e) + " is not a power of 2");
    }
    return out;
}

Bits LinearizedPoly::operator()(Bits a) const {
    Bits acc = constant_, power = a;
    unsigned k = 0;
    for (const auto& [kk, c] : coeffs_) {
        for (; k < kk; ++k) power = field_->sqr(power);
        acc ^= field_->mul(c, power);
    }
    return acc;
}

UniPoly LinearizedPoly::to_unipoly() const {
    UniPoly p = UniPoly::constant(field_, constant_);
    for (const auto& [k, c] : coeffs_) p.add_term(std::uint64_t{1} << k, c);
    return p;
}

LinearizedPoly build_L(const FieldElem& c1) {
    const auto& ext = as_extension(*c1.field());
    if (ext.rel_trace(c1.bits()) != 0)
        throw DomainError("nonzero_trace", "L is linearized only for tr(c1) = 0, got tr(c1) = " +
                                               to_hex(ext.rel_trace(c1.bits())));
    const Bits a = ext.form_q1(c1.bits()), b = ext.rel_norm(c1.bits());
    if (!ext.in_base(a) || !ext.in_base(b))
        throw DomainError("internal_error", "q1(c1) or N(c1) is not in F_q");
    LinearizedPoly L(ext.base());
    L.set_coeff(2, 1);
    L.set_coeff(1, a);
    L.set_coeff(0, b);
    if (!(L.to_unipoly().embed(c1.field()) == conjugate_product_L(c1)))
        throw DomainError("internal_error", "L disagrees with its product form");
    return L;
}

bool is_permutation(const LinearizedPoly& L) { return invert_gf2(linear_columns(L)).has_value(); }

LinearizedPoly invert(const LinearizedPoly& L) {
    const auto inv = invert_gf2(linear_columns(L));
    if (!inv) throw DomainError("not_permutation", "L has a nontrivial kernel on F_q");
    const auto& F = *L.field();
    const unsigned m = F.m();
    // M = sum_k b_k x^(2^k) with M(t^j) = inv[j]: a Moore system in b_k.
    std::vector<std::vector<Bits>> moore(m, std::vector<Bits>(m));
    for (unsigned j = 0; j < m; ++j) {
        Bits v = Bits{1} << j;
        for (unsigned k = 0; k < m; ++k, v = F.sqr(v)) moore[j][k] = v;
    }
    const std::vector<Bits> b = solve(F, moore, *inv);
    LinearizedPoly out(L.field());
    for (unsigned k = 0; k < m; ++k) out.set_coeff(k, b[k]);
    // L(x) = L0(x) + c, so L^{-1}(y) = M(y) + M(c)
    out.set_constant(out(L.constant()));
    return out;
}

UniPoly reduce_mod_xq(const UniPoly& p) {
    const std::uint64_t q1 = p.field()->order() - 1;
    UniPoly out(p.field());
    for (const auto& [e, c] : p.terms()) out.add_term(e == 0 ? 0 : (e - 1) % q1 + 1, c);
    return out;
}

UniPoly interpolate(const std::vector<Bits>& values, const BinaryFieldPtr& field) {
    const Bits q = field->order();
    if (values.size() != q) throw DomainError("bad_table", "need one value per field element");
    // c_0 = g(0); c_k = sum_a g(a) a^(q-1-k) for 1 <= k <= q-1, with 0^0 = 1
    std::vector<Bits> c(q, 0);
    c[0] = values[0];
    c[q - 1] = values[0];
    for (Bits a = 1; a < q; ++a) {
        if (values[a] == 0) continue;
        Bits t = values[a];
        for (Bits k = q - 1; k >= 1; --k) {
            c[k] ^= t;
            t = field->mul(t, a);
        }
    }
    UniPoly out(field);
    for (Bits k = 0; k < q; ++k) out.add_term(k, c[k]);
    return out;
}

CczResult ccz_decompose(const UniPoly& f, const FieldElem& c1) {
    auto base = std::dynamic_pointer_cast<const BinaryField>(f.field());
    if (!base) throw DomainError("not_binary_field", "f must be over GF(2^m)");
    const auto& ext = as_extension(*c1.field());
    if (!ext.base()->same_as(*base)) throw DomainError("context_mismatch", "c1 is not in a cubic extension of f's field");
    const long deg = f.degree();
    if (deg < 12 || deg % 4 != 0)
        throw DomainError("bad_degree", "f must have degree 4e with e >= 3, got " + std::to_string(deg));
    if (static_cast<std::uint64_t>(deg) >= base->order())
        throw DomainError("degree_too_large", "need 4e < q so that g o L is not reduced mod x^q - x");
    if (base->m() > kCczMaxDegree)
        throw BudgetExceeded("ccz decomposition limited to m <= " + std::to_string(kCczMaxDegree));
    const unsigned e = static_cast<unsigned>(deg / 4);

    const LinearizedPoly L = build_L(c1);
    CczResult result;
    if (!divisor_test(f, specialised_candidate(c1)).product.divisible) {
        result.reason = "phi_{L^3} does not divide phi_f";
        return result;
    }
    const LinearizedPoly Linv = invert(L);
    std::vector<Bits> values(base->order());
    for (Bits a = 0; a < values.size(); ++a) values[a] = uni_eval(f, Linv(a));
    const UniPoly g = interpolate(values, base);

    if (g.degree() != static_cast<long>(e)) {
        result.reason = "f o L^{-1} has degree " + std::to_string(g.degree()) + ", expected " + std::to_string(e);
        return result;
    }
    CczDecomposition d{e, g.leading_coeff(), UniPoly(base), UniPoly(base), UniPoly(base), g, L, Linv};
    for (const auto& [k, c] : g.terms()) {
        if (k == e) continue;
        if (k == 0 || is_pow2(k))
            d.residual.add_term(k, c);
        else
            d.S.add_term(k, c);
    }
    d.residual_in_f = reduce_mod_xq(uni_compose(d.residual, L.to_unipoly()));

    const UniPoly Lp = L.to_unipoly();
    for (Bits a = 0; a < values.size(); ++a)
        if (uni_eval(g, L(a)) != uni_eval(f, a)) throw DomainError("internal_error", "g o L differs from f");
    if (!(reduce_mod_xq(uni_compose(g, Lp)) == f)) throw DomainError("internal_error", "g o L differs from f");
    result.decomposition = std::move(d);
    return result;
}

PowerDivisibilityReport verify_power_divisibility(const FieldElem& c1, unsigned n_max) {
    const UniPoly L = build_L(c1).to_unipoly();
    const TriPoly phi3 = phi_of(pow(L, 3));
    PowerDivisibilityReport rep;
    for (unsigned n = 3; n <= n_max; ++n) {
        if (!divides(phi3, phi_of(pow(L, n))).divisible) {
            rep.holds = false;
            rep.failing_n = n;
            break;
        }
    }
    return rep;
}

}  // namespace apnphi
