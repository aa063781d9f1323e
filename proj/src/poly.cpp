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

#include "apnphi/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <vector>

namespace apnphi {

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same_as(*b)) {
        throw DomainError("context_mismatch",
                          "polynomials over different fields: " + a->describe() + " vs " + b->describe());
    }
}

}  // namespace

// --- Monomial --------------------------------------------------------------

Monomial::Monomial(std::uint64_t i, std::uint64_t j, std::uint64_t k) {
    const std::uint64_t d = i + j + k;
    if (i > kMaxExp || j > kMaxExp || k > kMaxExp || d > kMaxExp) {
        throw DomainError("exponent_overflow", "monomial exponent too large");
    }
    key_ = (d << (2 * kExpBits)) | (i << kExpBits) | j;
}

std::uint64_t Monomial::exp(Var v) const noexcept {
    switch (v) {
        case Var::x: return x();
        case Var::y: return y();
        default: return z();
    }
}

bool Monomial::divides(const Monomial& other) const noexcept {
    return x() <= other.x() && y() <= other.y() && z() <= other.z();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    // components are bounded by the degree, so a degree check rules out carries
    if (a.degree() + b.degree() > Monomial::kMaxExp) {
        throw DomainError("exponent_overflow", "monomial exponent too large");
    }
    return Monomial::from_key(a.key_ + b.key_);
}

std::string Monomial::to_string() const {
    std::string out;
    const char names[3] = {'x', 'y', 'z'};
    const std::uint64_t e[3] = {x(), y(), z()};
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[v];
        if (e[v] > 1) out += '^' + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

// --- TriPoly ---------------------------------------------------------------

TriPoly::TriPoly(FieldPtr field) : field_(std::move(field)) {}

TriPoly TriPoly::constant(FieldPtr field, Bits c) { return monomial(std::move(field), Monomial{}, c); }

TriPoly TriPoly::variable(FieldPtr field, Var v) {
    const unsigned i = static_cast<unsigned>(v);
    return monomial(std::move(field), Monomial(i == 0, i == 1, i == 2), 1);
}

TriPoly TriPoly::monomial(FieldPtr field, const Monomial& m, Bits c) {
    TriPoly p(std::move(field));
    p.add_term(m, c);
    return p;
}

std::uint64_t TriPoly::degree_in(Var v) const noexcept {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
}

bool TriPoly::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Bits TriPoly::coeff(const Monomial& m) const noexcept {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void TriPoly::add_term(const Monomial& m, Bits c) {
    if (c == 0) return;
    if (!field_->contains(c)) throw DomainError("out_of_range", to_hex(c) + " is not in " + field_->describe());
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second ^= c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Monomial& TriPoly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("zero_polynomial", "zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

Bits TriPoly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("zero_polynomial", "zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

TriPoly& TriPoly::operator+=(const TriPoly& other) {
    require_same_field(field_, other.field_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

TriPoly TriPoly::scaled(Bits c) const {
    TriPoly r(field_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_->mul(a, c));
    return r;
}

TriPoly TriPoly::embed(const FieldPtr& target) const {
    if (!embeds_into(*field_, *target)) {
        throw DomainError("context_mismatch", field_->describe() + " does not embed into " + target->describe());
    }
    TriPoly r(target);
    r.terms_ = terms_;
    return r;
}

TriPoly TriPoly::map_coefficients(const std::function<Bits(Bits)>& fn) const {
    TriPoly r(field_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
}

TriPoly TriPoly::permuted(const std::array<Var, 3>& perm) const {
    TriPoly r(field_);
    for (const auto& [m, c] : terms_) {
        std::uint64_t e[3] = {0, 0, 0};
        for (unsigned v = 0; v < 3; ++v) e[static_cast<unsigned>(perm[v])] += m.exp(static_cast<Var>(v));
        r.add_term(Monomial(e[0], e[1], e[2]), c);
    }
    return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    require_same_field(a.field_, b.field_);
    const Field& F = *a.field_;
    std::unordered_map<std::uint64_t, Bits> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) acc[(ma * mb).key()] ^= F.mul(ca, cb);
    }
    TriPoly r(a.field_);
    for (const auto& [key, c] : acc) {
        if (c == 0) continue;
        Monomial m;
        // rebuild from key: (deg, x, y)
        const std::uint64_t d = key >> (2 * Monomial::kExpBits);
        const std::uint64_t i = (key >> Monomial::kExpBits) & Monomial::kMaxExp;
        const std::uint64_t j = key & Monomial::kMaxExp;
        m = Monomial(i, j, d - i - j);
        r.terms_.emplace(m, c);
    }
    return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) { return a.field_->same_as(*b.field_) && a.terms_ == b.terms_; }

TriPoly pow(const TriPoly& p, unsigned n) {
    TriPoly result = TriPoly::constant(p.field(), 1);
    TriPoly base = p;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

DivisionResult divexact(const TriPoly& n, const TriPoly& d) {
    require_same_field(n.field(), d.field());
    if (d.is_zero()) throw DomainError("division_by_zero", "division by the zero polynomial");
    const Field& F = *n.field();
    const Monomial lead = d.leading_monomial();
    const Bits lead_inv = F.inv(d.leading_coeff());

    TriPoly::TermMap work = n.terms();
    TriPoly quotient(n.field());
    while (!work.empty()) {
        const auto [m, c] = *work.begin();
        // Every later term is smaller, so a non-divisible leading term stays
        // in the remainder for good.
        if (!lead.divides(m)) return DivisionResult{std::nullopt, m};
        const Monomial t = lead.cofactor_in(m);
        const Bits k = F.mul(c, lead_inv);
        quotient.add_term(t, k);
        for (const auto& [md, cd] : d.terms()) {
            const Monomial prod = t * md;
            const Bits delta = F.mul(k, cd);
            auto [it, inserted] = work.try_emplace(prod, delta);
            if (!inserted) {
                it->second ^= delta;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return DivisionResult{std::move(quotient), std::nullopt};
}

TriPoly substitute(const TriPoly& p, const std::array<TriPoly, 3>& images) {
    for (const auto& img : images) require_same_field(p.field(), img.field());
    std::array<std::vector<TriPoly>, 3> powers;
    for (unsigned v = 0; v < 3; ++v) {
        const std::uint64_t top = p.degree_in(static_cast<Var>(v));
        powers[v].reserve(top + 1);
        powers[v].push_back(TriPoly::constant(p.field(), 1));
        for (std::uint64_t e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * images[v]);
    }
    TriPoly r(p.field());
    for (const auto& [m, c] : p.terms()) {
        TriPoly t = powers[0][m.x()] * powers[1][m.y()];
        t = t * powers[2][m.z()];
        r += t.scaled(c);
    }
    return r;
}

Bits evaluate(const TriPoly& p, Bits x, Bits y, Bits z) {
    const Field& F = *p.field();
    Bits acc = 0;
    for (const auto& [m, c] : p.terms()) {
        acc ^= F.mul(c, F.mul(F.pow(x, m.x()), F.mul(F.pow(y, m.y()), F.pow(z, m.z()))));
    }
    return acc;
}

FieldElem evaluate(const TriPoly& p, const FieldElem& x, const FieldElem& y, const FieldElem& z) {
    for (const auto* e : {&x, &y, &z}) require_same_field(p.field(), e->field());
    return FieldElem(p.field(), evaluate(p, x.bits(), y.bits(), z.bits()));
}

TriPoly homogeneous_component(const TriPoly& p, std::uint64_t degree) {
    TriPoly r(p.field());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == degree) r.add_term(m, c);
    }
    return r;
}

std::map<std::uint64_t, TriPoly> homogeneous_components(const TriPoly& p) {
    std::map<std::uint64_t, TriPoly> out;
    for (const auto& [m, c] : p.terms()) out.try_emplace(m.degree(), p.field()).first->second.add_term(m, c);
    return out;
}

bool is_symmetric(const TriPoly& p) {
    return p.permuted({Var::y, Var::x, Var::z}) == p && p.permuted({Var::x, Var::z, Var::y}) == p;
}

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {}

UniPoly UniPoly::monomial(FieldPtr field, std::uint64_t e, Bits c) {
    UniPoly p(std::move(field));
    p.add_term(e, c);
    return p;
}

Bits UniPoly::coeff(std::uint64_t e) const noexcept {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void UniPoly::add_term(std::uint64_t e, Bits c) {
    if (c == 0) return;
    if (!field_->contains(c)) throw DomainError("out_of_range", to_hex(c) + " is not in " + field_->describe());
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second ^= c;
        if (it->second == 0) terms_.erase(it);
    }
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    require_same_field(field_, other.field_);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

UniPoly UniPoly::scaled(Bits c) const {
    UniPoly r(field_);
    for (const auto& [e, a] : terms_) r.add_term(e, field_->mul(a, c));
    return r;
}

UniPoly UniPoly::embed(const FieldPtr& target) const {
    if (!embeds_into(*field_, *target)) {
        throw DomainError("context_mismatch", field_->describe() + " does not embed into " + target->describe());
    }
    UniPoly r(target);
    r.terms_ = terms_;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same_field(a.field_, b.field_);
    UniPoly r(a.field_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, a.field_->mul(ca, cb));
    }
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_->same_as(*b.field_) && a.terms_ == b.terms_; }

UniPoly pow(const UniPoly& p, std::uint64_t n) {
    UniPoly result = UniPoly::constant(p.field(), 1);
    UniPoly base = p;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Bits uni_eval(const UniPoly& f, Bits x) {
    const Field& F = *f.field();
    Bits acc = 0;
    for (const auto& [e, c] : f.terms()) acc ^= F.mul(c, F.pow(x, e));
    return acc;
}

FieldElem uni_eval(const UniPoly& f, const FieldElem& x) {
    require_same_field(f.field(), x.field());
    return FieldElem(f.field(), uni_eval(f, x.bits()));
}

UniPoly uni_compose(const UniPoly& f, const UniPoly& g) {
    require_same_field(f.field(), g.field());
    UniPoly r(f.field());
    if (f.is_zero()) return r;
    // sparse Horner from the top exponent down
    auto it = f.terms().rbegin();
    std::uint64_t prev = it->first;
    r = UniPoly::constant(f.field(), it->second);
    for (++it; it != f.terms().rend(); ++it) {
        r = r * pow(g, prev - it->first);
        r += UniPoly::constant(f.field(), it->second);
        prev = it->first;
    }
    return r * pow(g, prev);
}

// --- text ------------------------------------------------------------------

namespace {

class TermParser {
   public:
    explicit TermParser(std::string_view text) {
        for (char ch : text) {
            if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s_ += ch;
        }
    }

    template <class Sink>
    void parse(Sink&& sink) {
        if (s_.empty()) throw ParseError("empty polynomial");
        for (;;) {
            parse_term(sink);
            if (pos_ == s_.size()) return;
            expect('+');
        }
    }

   private:
    template <class Sink>
    void parse_term(Sink& sink) {
        std::optional<Bits> coeff;
        std::uint64_t e[3] = {0, 0, 0};
        bool any = false;
        for (;;) {
            if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
            const char ch = s_[pos_];
            if (ch == 'x' || ch == 'y' || ch == 'z') {
                ++pos_;
                std::uint64_t power = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    power = parse_int();
                }
                e[ch - 'x'] += power;
            } else if (ch >= '0' && ch <= '9') {
                if (coeff) throw ParseError("term has two coefficients at offset " + std::to_string(pos_));
                coeff = parse_coeff();
            } else {
                throw ParseError(std::string("unexpected '") + ch + "' at offset " + std::to_string(pos_));
            }
            any = true;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term");
        sink(e[0], e[1], e[2], coeff.value_or(1));
    }

    std::uint64_t parse_int() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (start == pos_) throw ParseError("expected exponent at offset " + std::to_string(start));
        return parse_bits(std::string_view(s_).substr(start, pos_ - start));
    }

    Bits parse_coeff() {
        const std::size_t start = pos_;
        if (s_.compare(pos_, 2, "0x") == 0 || s_.compare(pos_, 2, "0X") == 0) {
            pos_ += 2;
            while (pos_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        } else {
            while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        }
        return parse_bits(std::string_view(s_).substr(start, pos_ - start));
    }

    void expect(char ch) {
        if (pos_ >= s_.size() || s_[pos_] != ch) {
            throw ParseError(std::string("expected '") + ch + "' at offset " + std::to_string(pos_));
        }
        ++pos_;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

void check_coeff(const Field& F, Bits c) {
    if (!F.contains(c)) throw ParseError("coefficient " + to_hex(c) + " is not an element of " + F.describe());
}

}  // namespace

TriPoly parse_tripoly(std::string_view text, FieldPtr field) {
    TriPoly p(field);
    TermParser(text).parse([&](std::uint64_t i, std::uint64_t j, std::uint64_t k, Bits c) {
        check_coeff(*field, c);
        p.add_term(Monomial(i, j, k), c);
    });
    return p;
}

UniPoly parse_unipoly(std::string_view text, FieldPtr field) {
    UniPoly p(field);
    TermParser(text).parse([&](std::uint64_t i, std::uint64_t j, std::uint64_t k, Bits c) {
        if (j || k) throw ParseError("univariate polynomial may only use the variable x");
        check_coeff(*field, c);
        p.add_term(i, c);
    });
    return p;
}

std::string to_string(const TriPoly& p) {
    if (p.is_zero()) return "0x0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (m.degree() == 0) {
            out += to_hex(c);
        } else {
            if (c != 1) out += to_hex(c) + "*";
            out += m.to_string();
        }
    }
    return out;
}

std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0x0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto [e, c] = *it;
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += to_hex(c);
            continue;
        }
        if (c != 1) out += to_hex(c) + "*";
        out += e == 1 ? std::string("x") : "x^" + std::to_string(e);
    }
    return out;
}

}  // namespace apnphi
