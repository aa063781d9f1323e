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

#include "apnphi/identity_suite.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "apnphi/ccz.hpp"
#include "apnphi/criteria.hpp"
#include "apnphi/phi.hpp"

namespace apnphi {

namespace {

// Returns an empty string on success, else a description of the failure.
using Check = std::function<std::string()>;

IdentityCheck run(const std::string& name, const Check& check) {
    IdentityCheck out;
    out.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        out.detail = check();
        out.passed = out.detail.empty();
    } catch (const std::exception& ex) {
        out.detail = std::string("exception: ") + ex.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

TriPoly var(Var v) { return TriPoly::variable(gf2(), v); }

std::vector<Bits> sample_trace_zero(const CubicExtension& ext, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Bits> out;
    while (out.size() < n) {
        const Bits a = rng() & (ext.order() - 1);
        out.push_back(a ^ ext.rel_trace(a));
    }
    return out;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite() {
    const TriPoly x = var(Var::x), y = var(Var::y), z = var(Var::z);
    const TriPoly A = denominator_poly(gf2());
    std::vector<IdentityCheck> out;

    out.push_back(run("phi_3 = 1", [&] {
        return phi_power(3) == TriPoly::constant(gf2(), 1) ? "" : "phi_3 = " + to_string(phi_power(3));
    }));
    out.push_back(run("phi_4 = 0", [&] { return phi_power(4).is_zero() ? "" : "phi_4 = " + to_string(phi_power(4)); }));
    out.push_back(run("A = (x+y)(y+z)(z+x) = s1 s2 + s3", [&] {
        const auto F = gf2();
        const SymPoly s = SymPoly::s1(F) * SymPoly::s2(F) + SymPoly::s3(F);
        if (!(A == (x + y) * (y + z) * (z + x))) return std::string("product form differs");
        return from_symmetric(s) == A ? std::string() : "symmetric form differs";
    }));
    out.push_back(run("power sums p_i from the recursion, i <= 64", [&] {
        for (unsigned i = 1; i <= 64; ++i)
            if (!(from_symmetric(power_sum(i)) == pow(x, i) + pow(y, i) + pow(z, i))) return "i = " + std::to_string(i);
        return std::string();
    }));
    out.push_back(run("A phi_i = p_i + s1^i, 3 <= i <= 64", [&] {
        for (unsigned i = 3; i <= 64; ++i)
            if (!(A * phi_power(i) == from_symmetric(power_sum(i)) + pow(x + y + z, i))) return "i = " + std::to_string(i);
        return std::string();
    }));
    out.push_back(run("phi_2n = A phi_n^2, odd n <= 31", [&] {
        for (unsigned n = 3; n <= 31; n += 2)
            if (!(phi_power(2 * n) == A * pow(phi_power(n), 2))) return "n = " + std::to_string(n);
        return std::string();
    }));
    out.push_back(run("phi of x^(4e) = A^3 phi_e^4, e in {3,5,7}", [&] {
        for (unsigned e : {3u, 5u, 7u})
            if (!(phi_of(UniPoly::monomial(gf2(), 4 * e)) == pow(A, 3) * pow(phi_power(e), 4)))
                return "e = " + std::to_string(e);
        return std::string();
    }));
    out.push_back(run("phi_e(x,z,z) (x+z)^2 = x^(e-1) + z^(e-1), odd e <= 31", [&] {
        for (unsigned e = 3; e <= 31; e += 2)
            if (!verify_yz_specialisation(e)) return "e = " + std::to_string(e);
        return std::string();
    }));
    out.push_back(run("(x+z)^2 phi_e(x, s+z, z) mod s^3, odd 5 <= e <= 15", [&] {
        for (unsigned e = 5; e <= 15; e += 2)
            if (!verify_mod_s3_expansion(e)) return "e = " + std::to_string(e);
        return std::string();
    }));
    out.push_back(run("(A+R)(A+rho R)(A+rho^2 R) = phi_{L^3}, all trace-zero c1, q = 4", [&] {
        const auto ext = CubicExtension::make(BinaryField::make(2));
        for (Bits c : trace_zero_elements(*ext))
            if (!verify_conjugate_product(FieldElem(ext, c))) return "c1 = " + to_hex(c);
        return std::string();
    }));
    out.push_back(run("(A+R)(A+rho R)(A+rho^2 R) = phi_{L^3}, 20 sampled c1, q = 8 and 16", [&] {
        for (unsigned m : {3u, 4u}) {
            const auto ext = CubicExtension::make(BinaryField::make(m));
            for (Bits c : sample_trace_zero(*ext, 20, kDefaultScanSeed + m))
                if (!verify_conjugate_product(FieldElem(ext, c))) return "m = " + std::to_string(m) + ", c1 = " + to_hex(c);
        }
        return std::string();
    }));
    out.push_back(run("A + R does not divide phi_{L^3} when tr(c1) != 0, q = 4", [&] {
        const auto ext = CubicExtension::make(BinaryField::make(2));
        const TriPoly Ae = denominator_poly(ext);
        for (Bits a = 0; a < ext->order(); ++a) {
            if (ext->rel_trace(a) == 0) continue;
            const FieldElem c(ext, a);
            const TriPoly R = phi_power(5, ext).scaled(a) + TriPoly::constant(ext, pow(c, 3).bits());
            if (divides(Ae + R, phi_of(pow(conjugate_product_L(c), 3))).divisible) return "c1 = " + to_hex(a);
        }
        return std::string();
    }));
    out.push_back(run("phi_{L^3} divides phi_{L^n}, 3 <= n <= 9, q = 4", [&] {
        const auto ext = CubicExtension::make(BinaryField::make(2));
        std::vector<Bits> cs{0};
        for (Bits c : trace_zero_elements(*ext))
            if (c != 0 && cs.size() < 3) cs.push_back(c);
        for (Bits c : cs) {
            const auto rep = verify_power_divisibility(FieldElem(ext, c), 9);
            if (!rep.holds) return "c1 = " + to_hex(c) + ", n = " + std::to_string(*rep.failing_n);
        }
        return std::string();
    }));
    return out;
}

}  // namespace apnphi
