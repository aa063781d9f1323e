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

#include <mutex>
#include <vector>

#include "apnphi/poly.hpp"

namespace apnphi {

namespace {

// Expanded powers of s1, s2, s3 over a fixed field, grown on demand.
class ElementaryPowers {
   public:
    explicit ElementaryPowers(FieldPtr field) : field_(std::move(field)) {
        const auto x = TriPoly::variable(field_, Var::x);
        const auto y = TriPoly::variable(field_, Var::y);
        const auto z = TriPoly::variable(field_, Var::z);
        base_[0] = x + y + z;
        base_[1] = x * y + x * z + y * z;
        base_[2] = x * y * z;
        for (auto& v : powers_) v.push_back(TriPoly::constant(field_, 1));
    }

    const TriPoly& get(unsigned which, std::uint64_t n) {
        auto& v = powers_[which];
        while (v.size() <= n) v.push_back(v.back() * *base_[which]);
        return v[n];
    }

   private:
    FieldPtr field_;
    std::optional<TriPoly> base_[3];
    std::vector<TriPoly> powers_[3];
};

}  // namespace

TriPoly from_symmetric(const SymPoly& s) {
    ElementaryPowers pw(s.field());
    TriPoly r(s.field());
    for (const auto& [m, c] : s.rep().terms()) {
        r += (pw.get(0, m.x()) * pw.get(1, m.y()) * pw.get(2, m.z())).scaled(c);
    }
    return r;
}

SymPoly to_symmetric(const TriPoly& p) {
    if (!is_symmetric(p)) throw DomainError("not_symmetric", "polynomial is not symmetric in x, y, z");
    ElementaryPowers pw(p.field());
    TriPoly work = p;
    TriPoly out(p.field());
    while (!work.is_zero()) {
        const Monomial lead = work.leading_monomial();
        const Bits c = work.leading_coeff();
        const auto a = lead.x(), b = lead.y(), d = lead.z();
        if (a < b || b < d) throw DomainError("not_symmetric", "leading monomial is not a partition");
        // s1^(a-b) s2^(b-d) s3^d has leading monomial x^a y^b z^d
        out.add_term(Monomial(a - b, b - d, d), c);
        work += (pw.get(0, a - b) * pw.get(1, b - d) * pw.get(2, d)).scaled(c);
    }
    return SymPoly(std::move(out));
}

SymPoly power_sum(unsigned i) {
    if (i == 0) throw DomainError("bad_index", "power sums are indexed from 1");
    static std::mutex mutex;
    static std::vector<SymPoly> cache;
    std::lock_guard lock(mutex);
    if (cache.empty()) {
        const auto F = gf2();
        const auto s1 = SymPoly::s1(F), s2 = SymPoly::s2(F), s3 = SymPoly::s3(F);
        cache.push_back(s1);                      // p1
        cache.push_back(s1 * s1);                 // p2
        cache.push_back(s1 * s1 * s1 + s1 * s2 + s3);  // p3
    }
    while (cache.size() < i) {
        const auto F = gf2();
        const std::size_t n = cache.size();  // computing p_{n+1}
        cache.push_back(SymPoly::s1(F) * cache[n - 1] + SymPoly::s2(F) * cache[n - 2] + SymPoly::s3(F) * cache[n - 3]);
    }
    return cache[i - 1];
}

std::string SymPoly::to_string() const {
    if (rep_.is_zero()) return "0x0";
    std::string out;
    for (const auto& [m, c] : rep_.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        const std::uint64_t e[3] = {m.x(), m.y(), m.z()};
        for (int v = 0; v < 3; ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += '*';
            mono += "s" + std::to_string(v + 1);
            if (e[v] > 1) mono += '^' + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += to_hex(c);
        } else {
            out += (c != 1 ? to_hex(c) + "*" : std::string()) + mono;
        }
    }
    return out;
}

}  // namespace apnphi
