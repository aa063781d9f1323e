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

#include "apnphi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace apnphi {

namespace {

using Dense = std::vector<Bits>;  // coefficient of y^i at index i

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod h, h monic and nonempty.
void reduce(Dense& a, const Dense& h, const Field& F) {
    trim(a);
    const std::size_t dh = h.size() - 1;
    while (a.size() > dh) {
        const Bits lead = a.back();
        const std::size_t shift = a.size() - 1 - dh;
        for (std::size_t i = 0; i <= dh; ++i) a[shift + i] ^= F.mul(lead, h[i]);
        trim(a);
    }
}

Dense make_monic(Dense a, const Field& F) {
    const Bits s = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, s);
    return a;
}

std::size_t gcd_degree(Dense a, Dense b, const Field& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        b = make_monic(std::move(b), F);
        reduce(a, b, F);
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Number of distinct roots of h in GF(2^k), h given over that field:
// deg gcd(h, y^(2^k) - y).
std::uint64_t distinct_roots(Dense h, unsigned k, const Field& F) {
    trim(h);
    if (h.empty()) return F.order();
    if (h.size() == 1) return 0;
    h = make_monic(std::move(h), F);
    Dense r{0, 1};
    reduce(r, h, F);
    for (unsigned i = 0; i < k; ++i) {
        // squaring is additive in characteristic 2
        Dense sq(r.empty() ? 0 : 2 * r.size() - 1, 0);
        for (std::size_t j = 0; j < r.size(); ++j) sq[2 * j] = F.sqr(r[j]);
        reduce(sq, h, F);
        r = std::move(sq);
    }
    if (r.size() < 2) r.resize(2, 0);
    r[1] ^= 1;
    trim(r);
    if (r.empty()) return h.size() - 1;
    return gcd_degree(h, r, F);
}

// Coefficient map from p's field into GF(2^k).
std::function<Bits(Bits)> coefficient_map(const TriPoly& p, const BinaryFieldPtr& target) {
    auto src = std::dynamic_pointer_cast<const BinaryField>(p.field());
    if (!src) throw DomainError("not_binary_field", "point counting needs coefficients in GF(2^m)");
    if (src->m() == 1 || src->same_as(*target)) return [](Bits a) { return a; };
    if (target->m() % src->m() != 0)
        throw DomainError("context_mismatch", "GF(2^" + std::to_string(src->m()) + ") does not embed in GF(2^" +
                                                  std::to_string(target->m()) + ")");
    auto emb = std::make_shared<FieldEmbedding>(src, target);
    return [emb](Bits a) { return (*emb)(a); };
}

unsigned worker_count(unsigned requested, std::uint64_t jobs) {
    unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(1, jobs)));
}

// Sum of body(i) for i in [0, n), sharded across workers.
template <class Body>
std::uint64_t parallel_sum(std::uint64_t n, unsigned workers, const Body& body) {
    std::vector<std::uint64_t> parts(workers, 0);
    const auto run = [&](unsigned w) {
        for (std::uint64_t i = w; i < n; i += workers) parts[w] += body(i);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (auto v : parts) total += v;
    return total;
}

struct Term {
    std::uint64_t i, j, l;
    Bits c;
};

std::vector<Term> mapped_terms(const TriPoly& p, const std::function<Bits(Bits)>& map) {
    std::vector<Term> out;
    for (const auto& [mono, c] : p.terms()) out.push_back({mono.x(), mono.y(), mono.z(), map(c)});
    return out;
}

std::vector<Bits> powers(Bits a, std::uint64_t n, const Field& F) {
    std::vector<Bits> out(n + 1, 1);
    for (std::uint64_t i = 1; i <= n; ++i) out[i] = F.mul(out[i - 1], a);
    return out;
}

}  // namespace

TriPoly dehomogenize(const TriPoly& p) {
    TriPoly out(p.field());
    for (const auto& [mono, c] : p.terms()) out.add_term(Monomial(mono.x(), mono.y(), 0), c);
    return out;
}

PointCountReport count_curve_points(const TriPoly& p, unsigned k, const CountOptions& opts) {
    if (p.is_zero()) throw DomainError("zero_polynomial", "cannot count points of the zero polynomial");
    if (p.degree_in(Var::z) != 0) throw DomainError("not_bivariate", "curve polynomial must not involve z");
    if (k == 0 || k > BinaryField::kMaxDegree) throw DomainError("bad_degree", "k must lie in 1..16");
    if (k > opts.max_curve_k)
        throw BudgetExceeded("curve counts limited to k <= " + std::to_string(opts.max_curve_k));
    const auto F = BinaryField::make(k);
    const auto terms = mapped_terms(p, coefficient_map(p, F));
    const std::uint64_t dx = p.degree_in(Var::x), dy = p.degree_in(Var::y);

    PointCountReport rep;
    rep.k = k;
    rep.degree = static_cast<unsigned>(p.degree());
    rep.count = parallel_sum(F->order(), worker_count(opts.threads, F->order()), [&](std::uint64_t x) {
        const auto xp = powers(x, dx, *F);
        Dense h(dy + 1, 0);
        for (const auto& t : terms) h[t.j] ^= F->mul(t.c, xp[t.i]);
        return distinct_roots(std::move(h), k, *F);
    });
    const double Q = static_cast<double>(F->order());
    const double d = rep.degree;
    const double width = (d - 1) * (d - 2) * std::sqrt(Q) + d * d;
    rep.band_low = Q - width;
    rep.band_high = Q + width;
    return rep;
}

PointCountReport count_surface_points(const TriPoly& p, unsigned multiplier, const CountOptions& opts) {
    if (p.is_zero()) throw DomainError("zero_polynomial", "cannot count points of the zero polynomial");
    auto src = std::dynamic_pointer_cast<const BinaryField>(p.field());
    if (!src) throw DomainError("not_binary_field", "point counting needs coefficients in GF(2^m)");
    if (multiplier == 0) throw DomainError("bad_degree", "multiplier must be positive");
    const unsigned k = src->m() * multiplier;
    if (k > BinaryField::kMaxDegree) throw DomainError("bad_degree", "counting field exceeds GF(2^16)");
    if (2 * k > opts.max_surface_log2)
        throw BudgetExceeded("surface counts limited to Q^2 <= 2^" + std::to_string(opts.max_surface_log2));
    const auto F = BinaryField::make(k);
    const auto terms = mapped_terms(p, coefficient_map(p, F));
    const std::uint64_t dx = p.degree_in(Var::x), dy = p.degree_in(Var::y), dz = p.degree_in(Var::z);
    const std::uint64_t Q = F->order();

    PointCountReport rep;
    rep.k = k;
    rep.degree = static_cast<unsigned>(p.degree());
    rep.count = parallel_sum(Q, worker_count(opts.threads, Q), [&](std::uint64_t x) {
        const auto xp = powers(x, dx, *F);
        std::uint64_t sum = 0;
        for (Bits y = 0; y < Q; ++y) {
            const auto yp = powers(y, dy, *F);
            Dense h(dz + 1, 0);
            for (const auto& t : terms) h[t.l] ^= F->mul(t.c, F->mul(xp[t.i], yp[t.j]));
            sum += distinct_roots(std::move(h), k, *F);
        }
        return sum;
    });
    const double q = static_cast<double>(Q);
    const double d = rep.degree;
    const double width = (d - 1) * (d - 2) * std::pow(q, 1.5) + d * d * q;
    rep.band_low = q * q - width;
    rep.band_high = q * q + width;
    return rep;
}

std::string to_string(Evidence v) {
    switch (v) {
        case Evidence::for_component: return "evidence-for";
        case Evidence::against_component: return "evidence-against";
        case Evidence::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

EvidenceReport component_evidence(const TriPoly& p, const std::vector<unsigned>& ks, const CountOptions& opts) {
    if (p.is_zero()) throw DomainError("zero_polynomial", "cannot assess the zero polynomial");
    std::vector<unsigned> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 3)
        throw DomainError("insufficient_data", "need point counts for at least three values of k");

    EvidenceReport rep;
    for (unsigned k : sorted) rep.counts.push_back(count_curve_points(p, k, opts));
    const unsigned d = static_cast<unsigned>(p.degree());
    const std::uint64_t small = std::uint64_t{d} * d;

    for (unsigned t = 2; t <= d; ++t) {
        bool off_small = true, on_large = false, any_off = false;
        for (const auto& c : rep.counts) {
            if (c.k % t == 0) {
                on_large = on_large || c.count > small;
            } else {
                any_off = true;
                off_small = off_small && c.count <= small;
            }
        }
        if (any_off && off_small && on_large) {
            rep.verdict = Evidence::against_component;
            rep.period = t;
            rep.explanation = "counts stay at most d^2 = " + std::to_string(small) + " unless " + std::to_string(t) +
                              " divides k, as for " + std::to_string(t) + " conjugate components over GF(2^" +
                              std::to_string(t) + ")";
            return rep;
        }
    }
    if (std::all_of(rep.counts.begin(), rep.counts.end(), [](const PointCountReport& c) { return c.in_band(); })) {
        rep.verdict = Evidence::for_component;
        rep.explanation = "every count lies in the single-component Weil band";
    } else {
        rep.verdict = Evidence::inconclusive;
        rep.explanation = "counts match neither pattern";
    }
    return rep;
}

}  // namespace apnphi
